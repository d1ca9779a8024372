//! Lexicographic enumeration of the permutation families.

use std::fmt;
use std::str::FromStr;

use super::perm::Permutation;
use crate::error::Error;

/// The permutation classes the identities range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// All of `S_n`.
    S,
    /// Derangements.
    D,
    /// Coderangements: no foremaximum.
    Dstar,
    /// Falling alternating: `σ1 > σ2 < σ3 > ...`.
    A,
    /// Alternating: `σ1 < σ2 > σ3 < ...`.
    Astar,
    /// Falling alternating with `σ_{n-1} < σ_n` (odd `n` only).
    Aprime,
    /// Falling alternating with `σ_{n-1} > σ_n` (even `n` only).
    Adoubleprime,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::S,
        Family::D,
        Family::Dstar,
        Family::A,
        Family::Astar,
        Family::Aprime,
        Family::Adoubleprime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::S => "S",
            Family::D => "D",
            Family::Dstar => "Dstar",
            Family::A => "A",
            Family::Astar => "Astar",
            Family::Aprime => "Aprime",
            Family::Adoubleprime => "Adoubleprime",
        }
    }

    /// Whether `sigma` belongs to the family.
    pub fn contains(self, sigma: &Permutation) -> bool {
        let w = sigma.word();
        let n = w.len();
        match self {
            Family::S => true,
            Family::D => w.iter().enumerate().all(|(i, &v)| v != i + 1),
            Family::Dstar => {
                let mut max = 0;
                for i in 0..n {
                    max = max.max(w[i]);
                    let nondescent = i + 1 == n || w[i] < w[i + 1];
                    if nondescent && w[i] == max {
                        return false;
                    }
                }
                true
            }
            Family::A => is_alternating(w, true),
            Family::Astar => is_alternating(w, false),
            // falling alternating ends on an ascent exactly when n is odd
            Family::Aprime => n % 2 == 1 && is_alternating(w, true),
            Family::Adoubleprime => n >= 2 && n.is_multiple_of(2) && is_alternating(w, true),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(format!("family `{s}`")))
    }
}

fn is_alternating(w: &[usize], falling: bool) -> bool {
    w.windows(2).enumerate().all(|(i, pair)| {
        let down = (i % 2 == 0) == falling;
        if down {
            pair[0] > pair[1]
        } else {
            pair[0] < pair[1]
        }
    })
}

/// Can the prefix `w` (of a permutation of `[n]`) still extend into the family?
fn prefix_ok(family: Family, w: &[usize], n: usize) -> bool {
    let len = w.len();
    if len == 0 {
        return true;
    }
    let last = w[len - 1];
    match family {
        Family::S => true,
        Family::D => last != len,
        Family::Dstar => {
            if len >= 2 {
                let prev = w[len - 2];
                let prev_is_max = w[..len - 1].iter().all(|&v| v <= prev);
                if prev_is_max && prev < last {
                    return false;
                }
            }
            // the final letter is a nondescent, and a left-to-right maximum iff it is n
            !(len == n && last == n)
        }
        Family::A | Family::Astar | Family::Aprime | Family::Adoubleprime => {
            if len >= 2 {
                let i = len - 2;
                let down = i.is_multiple_of(2) == (family != Family::Astar);
                let ok = if down { w[i] > last } else { w[i] < last };
                if !ok {
                    return false;
                }
            }
            match family {
                Family::Aprime => n % 2 == 1,
                Family::Adoubleprime => n.is_multiple_of(2) && n >= 2,
                _ => true,
            }
        }
    }
}

/// Lexicographic depth-first enumeration with prefix pruning.
pub struct FamilyIter {
    family: Family,
    n: usize,
    word: Vec<usize>,
    used: Vec<bool>,
    // next candidate value to try at each depth
    next: Vec<usize>,
    // length of the fixed prefix; the search never backtracks into it
    floor: usize,
    done: bool,
}

impl FamilyIter {
    fn new(family: Family, n: usize, prefix: &[usize]) -> Self {
        let mut used = vec![false; n + 1];
        let mut valid = prefix.len() <= n;
        for (i, &v) in prefix.iter().enumerate() {
            if !valid || v == 0 || v > n || used[v] || !prefix_ok(family, &prefix[..=i], n) {
                valid = false;
                break;
            }
            used[v] = true;
        }
        let mut next = vec![0; prefix.len()];
        next.push(1);
        FamilyIter {
            family,
            n,
            word: prefix.to_vec(),
            used,
            next,
            floor: prefix.len(),
            done: !valid,
        }
    }
}

impl Iterator for FamilyIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return (self.family == Family::S).then(|| Permutation::identity(0));
        }
        loop {
            let depth = self.word.len();
            if depth == self.n {
                let out = Permutation::from_word_unchecked(self.word.clone());
                if depth == self.floor {
                    self.done = true;
                    return Some(out);
                }
                let v = self.word.pop().unwrap();
                self.used[v] = false;
                self.next.pop();
                return Some(out);
            }
            let start = self.next[depth];
            let mut placed = false;
            for v in start..=self.n {
                if self.used[v] {
                    continue;
                }
                self.word.push(v);
                if prefix_ok(self.family, &self.word, self.n) {
                    self.used[v] = true;
                    self.next[depth] = v + 1;
                    self.next.push(1);
                    placed = true;
                    break;
                }
                self.word.pop();
            }
            if !placed {
                if depth == self.floor {
                    self.done = true;
                    return None;
                }
                self.next.pop();
                let v = self.word.pop().unwrap();
                self.used[v] = false;
            }
        }
    }
}

/// Streams the members of `family` in `S_n`, lexicographically.
pub fn family_iter(family: Family, n: usize) -> FamilyIter {
    FamilyIter::new(family, n, &[])
}

/// Members of `family` in `S_n` that start with `prefix`, lexicographically.
pub fn family_iter_with_prefix(family: Family, n: usize, prefix: &[usize]) -> FamilyIter {
    FamilyIter::new(family, n, prefix)
}
