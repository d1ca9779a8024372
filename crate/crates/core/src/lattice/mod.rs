//! Motzkin and Dyck paths, Dyck path diagrammes and Laguerre histories, with
//! weighted sums computed both object by object and by a height transfer.
//!
//! The height of a step is its starting ordinate.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{LaurentPoly, TruncSeries, Var};
use crate::error::Error;

/// Largest number of objects [`enumerate`] will materialize.
pub const DEFAULT_OBJECT_CAP: u64 = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Level,
    Down,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Level => 'L',
            Step::Down => 'D',
        }
    }

    fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Level => 0,
            Step::Down => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

impl MotzkinPath {
    /// Checks that the path stays weakly above zero and ends at zero.
    pub fn new(steps: Vec<Step>) -> Result<Self, Error> {
        let mut y = 0i64;
        for s in &steps {
            y += s.delta();
            if y < 0 {
                return Err(Error::InvalidArgument("path goes below zero".into()));
            }
        }
        if y != 0 {
            return Err(Error::InvalidArgument(
                "path does not return to zero".into(),
            ));
        }
        Ok(MotzkinPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_dyck(&self) -> bool {
        !self.steps.contains(&Step::Level)
    }

    /// `y_0, ..., y_n`.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut y = 0i64;
        out.push(0);
        for s in &self.steps {
            y += s.delta();
            out.push(y as usize);
        }
        out
    }

    /// Height `h_k = y_{k-1}` of each step.
    pub fn step_heights(&self) -> Vec<usize> {
        let mut h = self.heights();
        h.pop();
        h
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'L' => Ok(Step::Level),
                'D' => Ok(Step::Down),
                other => Err(Error::Parse(format!("bad step letter `{other}`"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        MotzkinPath::new(steps)
    }
}

fn fmt_xi<T: fmt::Display>(xi: &[T]) -> String {
    let parts: Vec<String> = xi.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

/// A Dyck path with `0 <= ξ_k <= h_k`, and `ξ_k < h_k` on Down steps when
/// restricted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckDiagramme {
    pub path: MotzkinPath,
    pub xi: Vec<usize>,
    pub restricted: bool,
}

impl DyckDiagramme {
    pub fn new(path: MotzkinPath, xi: Vec<usize>, restricted: bool) -> Result<Self, Error> {
        if !path.is_dyck() || xi.len() != path.len() {
            return Err(Error::InvalidArgument(
                "diagramme needs a Dyck path and one choice per step".into(),
            ));
        }
        let d = DyckDiagramme {
            path,
            xi,
            restricted,
        };
        for ((s, h), x) in d.path.steps().iter().zip(d.path.step_heights()).zip(&d.xi) {
            if xi_range(Kind::diagramme(restricted), *s, h).all(|v| v != *x as i64) {
                return Err(Error::InvalidArgument(format!(
                    "choice {x} out of range at height {h}"
                )));
            }
        }
        Ok(d)
    }
}

impl fmt::Display for DyckDiagramme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.path, fmt_xi(&self.xi))
    }
}

/// A Motzkin path with `0 <= ξ <= h` on Up, `-h <= ξ <= h` on Level and
/// `0 <= ξ <= h-1` on Down steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaguerreHistory {
    pub path: MotzkinPath,
    pub xi: Vec<i64>,
}

impl LaguerreHistory {
    pub fn new(path: MotzkinPath, xi: Vec<i64>) -> Result<Self, Error> {
        if xi.len() != path.len() {
            return Err(Error::InvalidArgument(
                "history needs one choice per step".into(),
            ));
        }
        for ((s, h), x) in path.steps().iter().zip(path.step_heights()).zip(&xi) {
            if xi_range(Kind::Laguerre, *s, h).all(|v| v != *x) {
                return Err(Error::InvalidArgument(format!(
                    "choice {x} out of range at height {h}"
                )));
            }
        }
        Ok(LaguerreHistory { path, xi })
    }
}

impl fmt::Display for LaguerreHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.path, fmt_xi(&self.xi))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Motzkin,
    Dyck,
    Diagramme,
    RestrictedDiagramme,
    Laguerre,
}

impl Kind {
    pub const ALL: [Kind; 5] = [
        Kind::Motzkin,
        Kind::Dyck,
        Kind::Diagramme,
        Kind::RestrictedDiagramme,
        Kind::Laguerre,
    ];

    fn diagramme(restricted: bool) -> Kind {
        if restricted {
            Kind::RestrictedDiagramme
        } else {
            Kind::Diagramme
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Motzkin => "motzkin",
            Kind::Dyck => "dyck",
            Kind::Diagramme => "diagramme",
            Kind::RestrictedDiagramme => "restricted_diagramme",
            Kind::Laguerre => "laguerre",
        }
    }

    pub fn allows_level(self) -> bool {
        matches!(self, Kind::Motzkin | Kind::Laguerre)
    }

    pub fn has_choices(self) -> bool {
        matches!(
            self,
            Kind::Diagramme | Kind::RestrictedDiagramme | Kind::Laguerre
        )
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownName(format!("lattice kind `{s}`")))
    }
}

/// Admissible `ξ` for a step of the given kind at height `h`; a single `0`
/// for kinds without choices.
pub fn xi_range(kind: Kind, step: Step, h: usize) -> std::ops::RangeInclusive<i64> {
    let h = h as i64;
    match (kind, step) {
        (Kind::Motzkin | Kind::Dyck, _) => 0..=0,
        (Kind::Diagramme, _) => 0..=h,
        (Kind::RestrictedDiagramme, Step::Down) => 0..=h - 1,
        (Kind::RestrictedDiagramme, _) => 0..=h,
        (Kind::Laguerre, Step::Up) => 0..=h,
        (Kind::Laguerre, Step::Level) => -h..=h,
        (Kind::Laguerre, Step::Down) => 0..=h - 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeObject {
    Path(MotzkinPath),
    Diagramme(DyckDiagramme),
    History(LaguerreHistory),
}

impl LatticeObject {
    pub fn path(&self) -> &MotzkinPath {
        match self {
            LatticeObject::Path(p) => p,
            LatticeObject::Diagramme(d) => &d.path,
            LatticeObject::History(h) => &h.path,
        }
    }

    /// The choice sequence, all zeros for plain paths.
    pub fn xi(&self) -> Vec<i64> {
        match self {
            LatticeObject::Path(p) => vec![0; p.len()],
            LatticeObject::Diagramme(d) => d.xi.iter().map(|&v| v as i64).collect(),
            LatticeObject::History(h) => h.xi.clone(),
        }
    }
}

impl fmt::Display for LatticeObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeObject::Path(p) => p.fmt(f),
            LatticeObject::Diagramme(d) => d.fmt(f),
            LatticeObject::History(h) => h.fmt(f),
        }
    }
}

fn check_length(kind: Kind, length: usize) -> Result<(), Error> {
    if !kind.allows_level() && length % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "{kind} objects have even length, got {length}"
        )));
    }
    Ok(())
}

/// Number of objects of the given kind and length.
pub fn count(kind: Kind, length: usize) -> Result<BigInt, Error> {
    check_length(kind, length)?;
    let mut state = vec![BigInt::zero(); length + 2];
    state[0] = BigInt::from(1);
    for pos in 0..length {
        let mut next = vec![BigInt::zero(); length + 2];
        let top = pos.min(length - pos);
        for (h, ways) in state.iter().enumerate().take(top + 1) {
            if ways.is_zero() {
                continue;
            }
            for step in [Step::Up, Step::Level, Step::Down] {
                let Some(h2) = next_height(kind, step, h) else {
                    continue;
                };
                let choices = xi_range(kind, step, h).count();
                next[h2] += ways * BigInt::from(choices);
            }
        }
        state = next;
    }
    Ok(state[0].clone())
}

fn next_height(kind: Kind, step: Step, h: usize) -> Option<usize> {
    match step {
        Step::Up => Some(h + 1),
        Step::Level if kind.allows_level() => Some(h),
        Step::Level => None,
        Step::Down if h > 0 => Some(h - 1),
        Step::Down => None,
    }
}

/// Every object of the given kind and length, in lexicographic order of the
/// sequence of `(step, ξ)` pairs with U < L < D.
pub fn enumerate(kind: Kind, length: usize) -> Result<Vec<LatticeObject>, Error> {
    enumerate_capped(kind, length, DEFAULT_OBJECT_CAP)
}

pub fn enumerate_capped(kind: Kind, length: usize, cap: u64) -> Result<Vec<LatticeObject>, Error> {
    let total = count(kind, length)?;
    if total > BigInt::from(cap) {
        return Err(Error::EnumerationTooLarge {
            what: format!("{kind} objects of length {length}"),
            size: total.to_usize().unwrap_or(usize::MAX),
            cap: cap as usize,
        });
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(length);
    let mut xi = Vec::with_capacity(length);
    walk(kind, length, 0, &mut steps, &mut xi, &mut out);
    Ok(out)
}

fn walk(
    kind: Kind,
    length: usize,
    h: usize,
    steps: &mut Vec<Step>,
    xi: &mut Vec<i64>,
    out: &mut Vec<LatticeObject>,
) {
    let remaining = length - steps.len();
    if remaining == 0 {
        if h == 0 {
            out.push(build(kind, steps, xi));
        }
        return;
    }
    for step in [Step::Up, Step::Level, Step::Down] {
        let Some(h2) = next_height(kind, step, h) else {
            continue;
        };
        if h2 > remaining - 1 {
            continue;
        }
        for x in xi_range(kind, step, h) {
            steps.push(step);
            xi.push(x);
            walk(kind, length, h2, steps, xi, out);
            steps.pop();
            xi.pop();
        }
    }
}

fn build(kind: Kind, steps: &[Step], xi: &[i64]) -> LatticeObject {
    let path = MotzkinPath {
        steps: steps.to_vec(),
    };
    match kind {
        Kind::Motzkin | Kind::Dyck => LatticeObject::Path(path),
        Kind::Diagramme | Kind::RestrictedDiagramme => LatticeObject::Diagramme(DyckDiagramme {
            path,
            xi: xi.iter().map(|&v| v as usize).collect(),
            restricted: kind == Kind::RestrictedDiagramme,
        }),
        Kind::Laguerre => LatticeObject::History(LaguerreHistory {
            path,
            xi: xi.to_vec(),
        }),
    }
}

pub type HeightFn = Arc<dyn Fn(usize) -> LaurentPoly + Send + Sync>;
pub type Valuation = Arc<dyn Fn(Step, usize, i64) -> LaurentPoly + Send + Sync>;

/// Step weights by height: Up at `h` weighs `a(h)`, Level `b(h)`, Down `c(h)`.
/// When a valuation is present it replaces these and weighs each
/// `(step, h, ξ)` individually.
#[derive(Clone)]
pub struct WeightSpec {
    pub a: HeightFn,
    pub b: HeightFn,
    pub c: HeightFn,
    pub valuation: Option<Valuation>,
}

impl fmt::Debug for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightSpec")
            .field("has_valuation", &self.valuation.is_some())
            .finish()
    }
}

fn one_fn() -> HeightFn {
    Arc::new(|_| LaurentPoly::one())
}

impl WeightSpec {
    pub fn from_fns(a: HeightFn, b: HeightFn, c: HeightFn) -> Self {
        WeightSpec {
            a,
            b,
            c,
            valuation: None,
        }
    }

    /// Every step weighs 1.
    pub fn counting() -> Self {
        Self::from_fns(one_fn(), one_fn(), one_fn())
    }

    pub fn with_valuation(v: Valuation) -> Self {
        WeightSpec {
            valuation: Some(v),
            ..Self::counting()
        }
    }

    /// Up and Down steps at height `h` with choice `ξ` weigh `p^{h-ξ} q^ξ`.
    pub fn diagramme(p: LaurentPoly, q: LaurentPoly) -> Self {
        Self::with_valuation(Arc::new(move |_, h, xi| {
            let xi = xi as u32;
            &p.pow(h as u32 - xi) * &q.pow(xi)
        }))
    }

    /// As [`WeightSpec::diagramme`], but Down steps weigh `p^{h-1-ξ} q^ξ`.
    pub fn restricted_diagramme(p: LaurentPoly, q: LaurentPoly) -> Self {
        Self::with_valuation(Arc::new(move |step, h, xi| {
            let xi = xi as u32;
            let top = if step == Step::Down { h - 1 } else { h } as u32;
            &p.pow(top - xi) * &q.pow(xi)
        }))
    }

    /// The valuation whose Laguerre sum is the generating polynomial of
    /// `x^wex y^fix q^cros p^nest s^inv`.
    pub fn laguerre_quintuple() -> Self {
        let x = LaurentPoly::var(Var::X);
        let y = LaurentPoly::var(Var::Y);
        let q = LaurentPoly::var(Var::Q);
        let s = LaurentPoly::var(Var::S);
        let ps = &LaurentPoly::var(Var::P) * &s;
        Self::with_valuation(Arc::new(move |step, h, xi| {
            let h = h as i64;
            let qp = |e: i64| q.pow(e as u32);
            let psp = |e: i64| ps.pow(e as u32);
            let sp = |e: i64| s.pow(e as u32);
            match step {
                Step::Up => &(&(&x * &qp(xi)) * &psp(h - xi)) * &sp(2 * h + 1),
                Step::Level if xi == 0 => &(&(&x * &y) * &psp(h)) * &sp(h),
                Step::Level if xi > 0 => &(&(&x * &qp(xi)) * &psp(h - xi)) * &sp(h),
                Step::Level => &(&qp(-xi - 1) * &psp(h + xi)) * &sp(h),
                Step::Down => &qp(xi) * &psp(h - 1 - xi),
            }
        }))
    }

    /// Weight of one step with one choice.
    pub fn step_weight(&self, step: Step, h: usize, xi: i64) -> LaurentPoly {
        match &self.valuation {
            Some(v) => v(step, h, xi),
            None => match step {
                Step::Up => (self.a)(h),
                Step::Level => (self.b)(h),
                Step::Down => (self.c)(h),
            },
        }
    }

    /// Total weight of a step over all admissible choices.
    fn summed_weight(&self, kind: Kind, step: Step, h: usize) -> LaurentPoly {
        xi_range(kind, step, h)
            .map(|x| self.step_weight(step, h, x))
            .sum()
    }

    pub fn object_weight(&self, obj: &LatticeObject) -> LaurentPoly {
        let path = obj.path();
        let xi = obj.xi();
        let mut w = LaurentPoly::one();
        for ((s, h), x) in path.steps().iter().zip(path.step_heights()).zip(xi) {
            w = &w * &self.step_weight(*s, h, x);
        }
        w
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Enumerate,
    Dp,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "enumerate" => Ok(Method::Enumerate),
            "dp" => Ok(Method::Dp),
            _ => Err(Error::UnknownName(format!("method `{s}`"))),
        }
    }
}

/// `Σ_objects Π_steps weight`.
pub fn weighted_sum(
    kind: Kind,
    length: usize,
    spec: &WeightSpec,
    method: Method,
) -> Result<LaurentPoly, Error> {
    match method {
        Method::Enumerate => Ok(enumerate(kind, length)?
            .iter()
            .map(|o| spec.object_weight(o))
            .sum()),
        Method::Dp => {
            check_length(kind, length)?;
            Ok(transfer(kind, length, spec).swap_remove(length))
        }
    }
}

/// Height transfer returning the weighted sums for every length `0..=max_len`.
fn transfer(kind: Kind, max_len: usize, spec: &WeightSpec) -> Vec<LaurentPoly> {
    let max_h = max_len / 2 + 1;
    let weights: Vec<[LaurentPoly; 3]> = (0..=max_h)
        .map(|h| {
            [Step::Up, Step::Level, Step::Down].map(|s| {
                if next_height(kind, s, h).is_some() {
                    spec.summed_weight(kind, s, h)
                } else {
                    LaurentPoly::zero()
                }
            })
        })
        .collect();
    let mut out = Vec::with_capacity(max_len + 1);
    let mut state = vec![LaurentPoly::zero(); max_h + 2];
    state[0] = LaurentPoly::one();
    out.push(LaurentPoly::one());
    for pos in 0..max_len {
        let mut next = vec![LaurentPoly::zero(); max_h + 2];
        // Heights above the remaining budget can never return to zero.
        let top = (pos + 1).min(max_len - pos).min(max_h);
        for h in 0..=top.min(pos) {
            if state[h].is_zero() {
                continue;
            }
            if h < top {
                next[h + 1] += &(&state[h] * &weights[h][0]);
            }
            if kind.allows_level() {
                next[h] += &(&state[h] * &weights[h][1]);
            }
            if h > 0 {
                next[h - 1] += &(&state[h] * &weights[h][2]);
            }
        }
        state = next;
        out.push(state[0].clone());
    }
    out
}

/// `Σ_{len <= order} weighted_sum(kind, len) t^len`, by the height transfer.
/// Odd lengths of Dyck kinds contribute zero.
pub fn weighted_series(kind: Kind, order: usize, spec: &WeightSpec) -> TruncSeries<LaurentPoly> {
    TruncSeries::from_coeffs(transfer(kind, order, spec), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q_bracket;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate(Kind::Motzkin, 3).unwrap().len(), 4);
        assert_eq!(enumerate(Kind::Laguerre, 3).unwrap().len(), 6);
        assert_eq!(enumerate(Kind::Diagramme, 2).unwrap().len(), 2);
        assert_eq!(enumerate(Kind::RestrictedDiagramme, 2).unwrap().len(), 1);
        for kind in Kind::ALL {
            assert_eq!(enumerate(kind, 0).unwrap().len(), 1);
        }
    }

    #[test]
    fn counts_match_enumeration() {
        for kind in Kind::ALL {
            for len in 0..=8 {
                if !kind.allows_level() && len % 2 == 1 {
                    continue;
                }
                let n = enumerate(kind, len).unwrap().len();
                assert_eq!(count(kind, len).unwrap(), BigInt::from(n), "{kind} {len}");
            }
        }
    }

    #[test]
    fn diagramme_counts_are_euler_numbers() {
        let plain: Vec<usize> = (1..=4)
            .map(|n| enumerate(Kind::Diagramme, 2 * n).unwrap().len())
            .collect();
        assert_eq!(plain, vec![2, 16, 272, 7936]);
        let restricted: Vec<usize> = (1..=4)
            .map(|n| enumerate(Kind::RestrictedDiagramme, 2 * n).unwrap().len())
            .collect();
        assert_eq!(restricted, vec![1, 5, 61, 1385]);
    }

    #[test]
    fn laguerre_counts_are_factorials() {
        let mut f = 1usize;
        for n in 1..=8 {
            f *= n;
            assert_eq!(count(Kind::Laguerre, n).unwrap(), BigInt::from(f));
        }
        assert_eq!(enumerate(Kind::Laguerre, 6).unwrap().len(), 720);
    }

    #[test]
    fn odd_dyck_length_is_rejected() {
        for kind in [Kind::Dyck, Kind::Diagramme, Kind::RestrictedDiagramme] {
            assert!(matches!(enumerate(kind, 3), Err(Error::InvalidArgument(_))));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_capped(Kind::Laguerre, 6, 100),
            Err(Error::EnumerationTooLarge { size: 720, .. })
        ));
    }

    #[test]
    fn restricted_diagramme_sum_of_length_four() {
        let p = LaurentPoly::var(Var::P);
        let q = LaurentPoly::var(Var::Q);
        let spec = WeightSpec::restricted_diagramme(p.clone(), q.clone());
        let want = &(&(&p * &p) + &(&(&p * &q) + &(&p * &q))) + &(&(&q * &q) + &LaurentPoly::one());
        for m in [Method::Enumerate, Method::Dp] {
            assert_eq!(
                weighted_sum(Kind::RestrictedDiagramme, 4, &spec, m).unwrap(),
                want
            );
        }
    }

    #[test]
    fn secant_by_dyck_weights() {
        // a_{h-1} c_h = [h]^2 with a = 1
        let spec =
            WeightSpec::from_fns(one_fn(), one_fn(), Arc::new(|h| q_bracket(h as u32).pow(2)));
        let at_one = spec_at_one(&spec);
        let series = weighted_series(Kind::Dyck, 6, &at_one);
        let got: Vec<i64> = series
            .coeffs()
            .iter()
            .map(|c| c.eval_ones().try_into().unwrap())
            .collect();
        assert_eq!(got, vec![1, 0, 1, 0, 5, 0, 61]);
    }

    fn spec_at_one(spec: &WeightSpec) -> WeightSpec {
        let c = spec.c.clone();
        WeightSpec::from_fns(
            one_fn(),
            one_fn(),
            Arc::new(move |h| LaurentPoly::from_int(c(h).eval_ones().try_into().unwrap())),
        )
    }

    #[test]
    fn laguerre_quintuple_small() {
        let spec = WeightSpec::laguerre_quintuple();
        let x = LaurentPoly::var(Var::X);
        let y = LaurentPoly::var(Var::Y);
        let s = LaurentPoly::var(Var::S);
        let want = &(&(&x * &x) * &(&y * &y)) + &(&x * &s);
        for m in [Method::Enumerate, Method::Dp] {
            assert_eq!(weighted_sum(Kind::Laguerre, 2, &spec, m).unwrap(), want);
            assert_eq!(
                weighted_sum(Kind::Laguerre, 0, &spec, m).unwrap(),
                LaurentPoly::one()
            );
        }
    }

    #[test]
    fn enumerate_and_transfer_agree() {
        let spec = WeightSpec::laguerre_quintuple();
        for len in 0..=6 {
            assert_eq!(
                weighted_sum(Kind::Laguerre, len, &spec, Method::Enumerate).unwrap(),
                weighted_sum(Kind::Laguerre, len, &spec, Method::Dp).unwrap()
            );
        }
    }

    #[test]
    fn parse_and_print() {
        let p: MotzkinPath = "ULDUD".parse().unwrap();
        assert_eq!(p.to_string(), "ULDUD");
        assert_eq!(p.heights(), vec![0, 1, 1, 0, 1, 0]);
        assert!("DU".parse::<MotzkinPath>().is_err());
        assert!("UU".parse::<MotzkinPath>().is_err());
        let d = DyckDiagramme::new("UD".parse().unwrap(), vec![0, 1], false).unwrap();
        assert_eq!(d.to_string(), "UD (0,1)");
        assert!(DyckDiagramme::new("UD".parse().unwrap(), vec![0, 1], true).is_err());
        assert!(LaguerreHistory::new("ULD".parse().unwrap(), vec![0, -1, 0]).is_ok());
        assert!(LaguerreHistory::new("ULD".parse().unwrap(), vec![0, -2, 0]).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let objs = enumerate(Kind::Laguerre, 5).unwrap();
        let keys: Vec<Vec<(Step, i64)>> = objs
            .iter()
            .map(|o| o.path().steps().iter().copied().zip(o.xi()).collect())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
    }
}
