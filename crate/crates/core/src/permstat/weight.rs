//! Monomial weights in the statistics and the family generating polynomials.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::family::{family_iter, family_iter_with_prefix, Family};
use super::perm::Permutation;
use super::stats::{basic_stats, Stat, StatRecord};
use crate::algebra::{Exps, LaurentPoly, Var};
use crate::error::Error;

/// Default largest `n` that [`stat_polynomial`] will enumerate.
pub const DEFAULT_CAP: usize = 11;

/// `±x^e`, the base of one weight factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub negative: bool,
    pub exps: Exps,
}

impl SignedMonomial {
    pub fn var(v: Var) -> Self {
        let mut exps = [0; 5];
        exps[v.index()] = 1;
        SignedMonomial {
            negative: false,
            exps,
        }
    }

    pub fn minus_one() -> Self {
        SignedMonomial {
            negative: true,
            exps: [0; 5],
        }
    }

    /// `-1/q`.
    pub fn minus_inv_q() -> Self {
        let mut exps = [0; 5];
        exps[Var::Q.index()] = -1;
        SignedMonomial {
            negative: true,
            exps,
        }
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        let mut exps = [0; 5];
        exps[v.index()] = e;
        SignedMonomial {
            negative: false,
            exps,
        }
    }
}

/// A product `Π base_i^{stat_i}`, e.g. `x^wex * y^fix * (-1/q)^exc`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Weight {
    factors: Vec<(SignedMonomial, Stat)>,
}

impl Weight {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, base: SignedMonomial, stat: Stat) -> Self {
        self.factors.push((base, stat));
        self
    }

    pub fn var(self, v: Var, stat: Stat) -> Self {
        self.with(SignedMonomial::var(v), stat)
    }

    /// `x^wex y^fix q^cros p^nest s^inv`.
    pub fn quintuple() -> Self {
        Weight::new()
            .var(Var::X, Stat::Wex)
            .var(Var::Y, Stat::Fix)
            .var(Var::Q, Stat::Cros)
            .var(Var::P, Stat::Nest)
            .var(Var::S, Stat::Inv)
    }

    /// Sign and exponent vector of the weight at one permutation.
    pub fn evaluate(&self, rec: &StatRecord) -> (bool, Exps) {
        let mut negative = false;
        let mut exps = [0i32; 5];
        for (base, stat) in &self.factors {
            let k = rec.get(*stat) as i32;
            if base.negative && k % 2 == 1 {
                negative = !negative;
            }
            for (e, b) in exps.iter_mut().zip(base.exps) {
                *e += b * k;
            }
        }
        (negative, exps)
    }

    pub fn monomial(&self, rec: &StatRecord) -> LaurentPoly {
        let (neg, exps) = self.evaluate(rec);
        LaurentPoly::signed_monomial(neg, exps)
    }
}

fn fmt_base(b: &SignedMonomial) -> String {
    let vars: Vec<String> = Var::ALL
        .iter()
        .filter(|v| b.exps[v.index()] != 0)
        .map(|v| match b.exps[v.index()] {
            1 => v.name().to_string(),
            e => format!("{}^{}", v.name(), e),
        })
        .collect();
    let body = if vars.is_empty() {
        "1".to_string()
    } else {
        vars.join("*")
    };
    if !b.negative && vars.len() == 1 && !body.contains('^') {
        body
    } else if b.negative {
        format!("(-{body})")
    } else {
        format!("({body})")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(b, s)| format!("{}^{}", fmt_base(b), s.name()))
            .collect();
        f.write_str(&parts.join("*"))
    }
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_var_power(tok: &str) -> Result<Exps, Error> {
    let mut exps = [0; 5];
    let tok = tok.trim();
    if tok == "1" {
        return Ok(exps);
    }
    let (name, e) = match tok.split_once('^') {
        Some((name, e)) => (
            name,
            e.trim()
                .parse::<i32>()
                .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?,
        ),
        None => (tok, 1),
    };
    let v: Var = name.trim().parse()?;
    exps[v.index()] = e;
    Ok(exps)
}

fn parse_base(s: &str) -> Result<SignedMonomial, Error> {
    let s = s.trim();
    let inner = match s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        Some(inner) => inner.trim(),
        None => {
            let v: Var = s.parse()?;
            return Ok(SignedMonomial::var(v));
        }
    };
    let (negative, body) = match inner.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, inner),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let mut exps = [0; 5];
    for tok in num.split('*') {
        let e = parse_var_power(tok)?;
        for i in 0..5 {
            exps[i] += e[i];
        }
    }
    if let Some(den) = den {
        for tok in den.split('*') {
            let e = parse_var_power(tok)?;
            for i in 0..5 {
                exps[i] -= e[i];
            }
        }
    }
    Ok(SignedMonomial { negative, exps })
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses `x^wex*y^fix*(-1/q)^exc*(q^2)^thto`; `1` is the empty weight.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut w = Weight::new();
        if s.is_empty() || s == "1" {
            return Ok(w);
        }
        for factor in split_top_level(s, '*') {
            let factor = factor.trim();
            let caret = factor
                .rfind('^')
                .filter(|&i| !factor[i..].contains(')'))
                .ok_or_else(|| Error::Parse(format!("factor `{factor}` needs `base^stat`")))?;
            let (base, stat) = (&factor[..caret], &factor[caret + 1..]);
            let stat = Stat::from_name(stat.trim())
                .ok_or_else(|| Error::Parse(format!("unknown statistic `{stat}`")))?;
            w = w.with(parse_base(base)?, stat);
        }
        Ok(w)
    }
}

fn accumulate<I: Iterator<Item = Permutation>>(iter: I, weight: &Weight) -> HashMap<Exps, i64> {
    let mut acc: HashMap<Exps, i64> = HashMap::new();
    for sigma in iter {
        let (neg, exps) = weight.evaluate(&basic_stats(&sigma));
        *acc.entry(exps).or_insert(0) += if neg { -1 } else { 1 };
    }
    acc
}

/// `Σ_{σ ∈ family ∩ S_n} weight(σ)`, enumerated exhaustively.
///
/// The enumeration is split by first letter across the rayon pool; the
/// result does not depend on the split.
pub fn stat_polynomial(family: Family, n: usize, weight: &Weight) -> Result<LaurentPoly, Error> {
    stat_polynomial_capped(family, n, weight, DEFAULT_CAP)
}

pub fn stat_polynomial_capped(
    family: Family,
    n: usize,
    weight: &Weight,
    cap: usize,
) -> Result<LaurentPoly, Error> {
    if n > cap {
        return Err(Error::EnumerationTooLarge {
            what: format!("family {family}"),
            size: n,
            cap,
        });
    }
    let counts: Vec<HashMap<Exps, i64>> = if n <= 4 {
        vec![accumulate(family_iter(family, n), weight)]
    } else {
        (1..=n)
            .into_par_iter()
            .map(|first| accumulate(family_iter_with_prefix(family, n, &[first]), weight))
            .collect()
    };
    let mut out = LaurentPoly::zero();
    for part in counts {
        for (e, c) in part {
            out.add_term(e, &BigInt::from(c));
        }
    }
    Ok(out)
}
