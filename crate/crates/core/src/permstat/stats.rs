//! Global and per-index permutation statistics.

use serde::{Deserialize, Serialize};

use super::perm::Permutation;

/// Every statistic of a permutation, computed from its definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatRecord {
    pub n: usize,
    pub exc: usize,
    pub wex: usize,
    pub fix: usize,
    pub des: usize,
    pub ndes: usize,
    pub maj: usize,
    pub inv: usize,
    pub cros: usize,
    pub nest: usize,
    /// Occurrences of the vincular pattern 31-2.
    pub toht: usize,
    /// Occurrences of 2-31.
    pub thto: usize,
    /// Occurrences of 2-13.
    pub thot: usize,
    pub fmax: usize,
    pub mad: usize,
    pub suc: usize,
    pub adj: usize,
}

/// Names usable in weights and on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stat {
    N,
    Exc,
    Wex,
    Fix,
    Des,
    Ndes,
    Maj,
    Inv,
    Cros,
    Nest,
    Toht,
    Thto,
    Thot,
    Fmax,
    Mad,
    Suc,
    Adj,
}

impl Stat {
    pub const ALL: [Stat; 17] = [
        Stat::N,
        Stat::Exc,
        Stat::Wex,
        Stat::Fix,
        Stat::Des,
        Stat::Ndes,
        Stat::Maj,
        Stat::Inv,
        Stat::Cros,
        Stat::Nest,
        Stat::Toht,
        Stat::Thto,
        Stat::Thot,
        Stat::Fmax,
        Stat::Mad,
        Stat::Suc,
        Stat::Adj,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stat::N => "n",
            Stat::Exc => "exc",
            Stat::Wex => "wex",
            Stat::Fix => "fix",
            Stat::Des => "des",
            Stat::Ndes => "ndes",
            Stat::Maj => "maj",
            Stat::Inv => "inv",
            Stat::Cros => "cros",
            Stat::Nest => "nest",
            Stat::Toht => "toht",
            Stat::Thto => "thto",
            Stat::Thot => "thot",
            Stat::Fmax => "fmax",
            Stat::Mad => "mad",
            Stat::Suc => "suc",
            Stat::Adj => "adj",
        }
    }

    pub fn from_name(s: &str) -> Option<Stat> {
        let alias = match s {
            "31-2" => "toht",
            "2-31" => "thto",
            "2-13" => "thot",
            other => other,
        };
        Stat::ALL.into_iter().find(|st| st.name() == alias)
    }
}

impl StatRecord {
    pub fn get(&self, stat: Stat) -> usize {
        match stat {
            Stat::N => self.n,
            Stat::Exc => self.exc,
            Stat::Wex => self.wex,
            Stat::Fix => self.fix,
            Stat::Des => self.des,
            Stat::Ndes => self.ndes,
            Stat::Maj => self.maj,
            Stat::Inv => self.inv,
            Stat::Cros => self.cros,
            Stat::Nest => self.nest,
            Stat::Toht => self.toht,
            Stat::Thto => self.thto,
            Stat::Thot => self.thot,
            Stat::Fmax => self.fmax,
            Stat::Mad => self.mad,
            Stat::Suc => self.suc,
            Stat::Adj => self.adj,
        }
    }

    /// `key=value` pairs in field order.
    pub fn to_kv_line(&self) -> String {
        Stat::ALL
            .iter()
            .map(|&s| format!("{}={}", s.name(), self.get(s)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Computes every field of [`StatRecord`] directly from its definition.
/// Foremaxima of a word of distinct letters: nondescents (the last letter
/// included) that are left-to-right maxima.
pub fn fmax_word(word: &[usize]) -> usize {
    let mut count = 0;
    let mut running_max = 0;
    for (i, &v) in word.iter().enumerate() {
        running_max = running_max.max(v);
        let nondescent = i + 1 == word.len() || v < word[i + 1];
        if nondescent && v == running_max {
            count += 1;
        }
    }
    count
}

pub fn basic_stats(sigma: &Permutation) -> StatRecord {
    let w = sigma.word();
    let n = w.len();
    let at = |i: usize| w[i - 1];

    let mut exc = 0;
    let mut fix = 0;
    for i in 1..=n {
        if at(i) > i {
            exc += 1;
        } else if at(i) == i {
            fix += 1;
        }
    }

    let mut des = 0;
    let mut maj = 0;
    for i in 1..n {
        if at(i) > at(i + 1) {
            des += 1;
            maj += i;
        }
    }

    let mut inv = 0;
    let mut cros = 0;
    let mut nest = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let (si, sj) = (at(i), at(j));
            if si > sj {
                inv += 1;
            }
            if (j <= si && si < sj) || (si < sj && sj < i) {
                cros += 1;
            }
            if (j <= sj && sj < si) || (sj < si && si < i) {
                nest += 1;
            }
        }
    }

    let mut toht = 0;
    let mut thto = 0;
    let mut thot = 0;
    for i in 1..n {
        // adjacent pair (i, i+1)
        let (a, b) = (at(i), at(i + 1));
        for j in 1..=n {
            let v = at(j);
            if j > i + 1 && a > v && v > b {
                toht += 1;
            }
            if j < i {
                if a > v && v > b {
                    thto += 1;
                }
                if a < v && v < b {
                    thot += 1;
                }
            }
        }
    }

    let fmax = fmax_word(sigma.word());

    let mut suc = 0;
    let mut adj = 0;
    for i in 1..=n {
        let next_suc = if i == n { n + 1 } else { at(i + 1) };
        let next_adj = if i == n { 0 } else { at(i + 1) };
        if next_suc == at(i) + 1 {
            suc += 1;
        }
        if next_adj + 1 == at(i) {
            adj += 1;
        }
    }

    StatRecord {
        n,
        exc,
        wex: exc + fix,
        fix,
        des,
        ndes: n - des,
        maj,
        inv,
        cros,
        nest,
        toht,
        thto,
        thot,
        fmax,
        mad: des + toht + 2 * thto,
        suc,
        adj,
    }
}

/// Crossing index of `k`: `#{l : l < k <= σ_l < σ_k  or  σ_k < σ_l < k < l}`.
pub fn cros_k(sigma: &Permutation, k: usize) -> usize {
    let sk = sigma.at(k);
    (1..=sigma.len())
        .filter(|&l| {
            let sl = sigma.at(l);
            (l < k && k <= sl && sl < sk) || (sk < sl && sl < k && k < l)
        })
        .count()
}

/// Nesting index of `k`: `#{l : l < k <= σ_k < σ_l  or  σ_l < σ_k < k < l}`.
pub fn nest_k(sigma: &Permutation, k: usize) -> usize {
    let sk = sigma.at(k);
    (1..=sigma.len())
        .filter(|&l| {
            let sl = sigma.at(l);
            (l < k && k <= sk && sk < sl) || (sl < sk && sk < k && k < l)
        })
        .count()
}

/// Which per-letter vincular count to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// 31-2, the left embracing number.
    ThreeOneTwo,
    /// 2-31, the right embracing number.
    TwoThreeOne,
    /// 2-13.
    TwoOneThree,
}

/// Per-letter pattern count for the letter (value) `k`.
pub fn pattern_k(sigma: &Permutation, k: usize, which: Pattern) -> usize {
    let n = sigma.len();
    let pos = sigma.inverse().at(k);
    (1..n)
        .filter(|&l| {
            let (a, b) = (sigma.at(l), sigma.at(l + 1));
            match which {
                Pattern::ThreeOneTwo => l + 1 < pos && a > k && k > b,
                Pattern::TwoThreeOne => pos < l && a > k && k > b,
                Pattern::TwoOneThree => pos < l && a < k && k < b,
            }
        })
        .count()
}

pub fn toht_k(sigma: &Permutation, k: usize) -> usize {
    pattern_k(sigma, k, Pattern::ThreeOneTwo)
}

pub fn thto_k(sigma: &Permutation, k: usize) -> usize {
    pattern_k(sigma, k, Pattern::TwoThreeOne)
}

pub fn thot_k(sigma: &Permutation, k: usize) -> usize {
    pattern_k(sigma, k, Pattern::TwoOneThree)
}

/// Sizes of the four inversion classes anchored at `k`.
///
/// An inversion `(i, j)` (`i < j`, `σ_i > σ_j`) belongs to exactly one class:
/// 1. `j <= σ_j`, anchored at `j`;
/// 2. `σ_j <= i` and `σ_i < i`, anchored at `i`;
/// 3. `σ_j <= i <= σ_i`, anchored at `i`;
/// 4. `i < σ_j < j`, anchored at `σ_j`.
pub fn inv_parts(sigma: &Permutation, k: usize) -> (usize, usize, usize, usize) {
    let n = sigma.len();
    let mut parts = (0, 0, 0, 0);
    for i in 1..=n {
        for j in i + 1..=n {
            let (si, sj) = (sigma.at(i), sigma.at(j));
            if si <= sj {
                continue;
            }
            if j <= sj {
                if k == j {
                    parts.0 += 1;
                }
            } else if sj <= i {
                if k == i {
                    if si < i {
                        parts.1 += 1;
                    } else {
                        parts.2 += 1;
                    }
                }
            } else if k == sj {
                parts.3 += 1;
            }
        }
    }
    parts
}

pub fn inv_k(sigma: &Permutation, k: usize) -> usize {
    let (a, b, c, d) = inv_parts(sigma, k);
    a + b + c + d
}

/// Position of `k` in the cyclic structure, comparing `σ^{-1}(k)`, `k`, `σ(k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CyclicType {
    Valley,
    Peak,
    DoubleAscent,
    DoubleDescent,
    Fixed,
}

pub fn cyclic_type(sigma: &Permutation, k: usize) -> CyclicType {
    let pre = sigma.inverse().at(k);
    let post = sigma.at(k);
    if post == k {
        CyclicType::Fixed
    } else if pre > k && k < post {
        CyclicType::Valley
    } else if pre < k && k > post {
        CyclicType::Peak
    } else if pre < k && k < post {
        CyclicType::DoubleAscent
    } else {
        CyclicType::DoubleDescent
    }
}
