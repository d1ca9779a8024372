//! Sparse multivariate polynomials over the fixed variable set `x, y, p, q, s`.
//!
//! Exponents are signed, so the same type carries Laurent polynomials. Terms
//! live in a `BTreeMap` keyed by the exponent vector, which gives the
//! canonical lexicographic term order for free.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// The five polynomial variables, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    P,
    Q,
    S,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::X, Var::Y, Var::P, Var::Q, Var::S];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::P => "p",
            Var::Q => "q",
            Var::S => "s",
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x" => Ok(Var::X),
            "y" => Ok(Var::Y),
            "p" => Ok(Var::P),
            "q" => Ok(Var::Q),
            "s" => Ok(Var::S),
            _ => Err(Error::Parse(format!("unknown variable `{s}`"))),
        }
    }
}

/// Exponent vector indexed by [`Var::index`].
pub type Exps = [i32; 5];

pub const ZERO_EXPS: Exps = [0; 5];

/// Coefficient domain of a [`Poly`].
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + FromStr
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + Send
    + Sync
{
    /// Multiplicative inverse, if it exists in the scalar ring.
    fn inverse(&self) -> Option<Self>;

    /// Exact quotient `self / other`, if it exists in the scalar ring.
    fn exact_div(&self, other: &Self) -> Option<Self>;
}

impl Scalar for BigInt {
    fn inverse(&self) -> Option<Self> {
        if self.is_one() || (-self).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = num_integer_div_rem(self, other);
        r.is_zero().then_some(q)
    }
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

impl Scalar for BigRational {
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }
}

/// Sparse polynomial with exponent vectors over `x, y, p, q, s`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    terms: BTreeMap<Exps, C>,
}

/// Laurent polynomial with arbitrary-precision integer coefficients.
pub type LaurentPoly = Poly<BigInt>;

/// Polynomial with arbitrary-precision rational coefficients.
pub type RatPoly = Poly<BigRational>;

impl<C: Scalar> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, ZERO_EXPS)
    }

    pub fn monomial(c: C, exps: Exps) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        let mut exps = ZERO_EXPS;
        exps[v.index()] = e;
        Self::monomial(C::one(), exps)
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms<I: IntoIterator<Item = (Exps, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ZERO_EXPS)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending lexicographic) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exps) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&ZERO_EXPS)
    }

    pub fn add_term(&mut self, exps: Exps, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, x)| {
                let mut x = x.clone();
                x *= c;
                (*e, x)
            })
            .collect();
        Poly { terms }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &Exps) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (add_exps(e, shift), c.clone()))
            .collect();
        Poly { terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// A single term `c * x^e`, if the polynomial is one.
    pub fn as_monomial(&self) -> Option<(&Exps, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Multiplicative inverse; exists only for monomials with a unit coefficient.
    pub fn try_inverse(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        let inv = c.inverse()?;
        Some(Self::monomial(inv, neg_exps(e)))
    }

    /// Integer power allowing negative exponents for invertible values.
    pub fn pow_signed(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(u32::try_from(e).ok()?))
        } else {
            Some(self.try_inverse()?.pow(u32::try_from(-e).ok()?))
        }
    }

    /// Per-variable minimum exponent over all terms (zeros for the zero polynomial).
    pub fn min_exps(&self) -> Exps {
        let mut out = ZERO_EXPS;
        let mut first = true;
        for e in self.terms.keys() {
            for i in 0..5 {
                out[i] = if first { e[i] } else { out[i].min(e[i]) };
            }
            first = false;
        }
        out
    }

    /// Per-variable maximum exponent over all terms.
    pub fn max_exps(&self) -> Exps {
        let mut out = ZERO_EXPS;
        let mut first = true;
        for e in self.terms.keys() {
            for i in 0..5 {
                out[i] = if first { e[i] } else { out[i].max(e[i]) };
            }
            first = false;
        }
        out
    }

    /// Variables that occur with a nonzero exponent somewhere.
    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|e| e[v.index()] != 0))
            .collect()
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Shift both operands into the polynomial range; lex order is then a
        // well-order, so reduction terminates.
        let num_min = self.min_exps();
        let den_min = divisor.min_exps();
        let mut rem = self.shift(&neg_exps(&num_min));
        let den = divisor.shift(&neg_exps(&den_min));
        let (lead_e, lead_c) = den.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))?;
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            let qe = sub_exps(&re, &lead_e);
            if qe.iter().any(|&x| x < 0) {
                return None;
            }
            let qc = rc.exact_div(&lead_c)?;
            let step = Self::monomial(qc.clone(), qe);
            rem = &rem - &(&step * &den);
            quot.add_term(qe, &qc);
        }
        Some(quot.shift(&sub_exps(&num_min, &den_min)))
    }

    /// Simultaneous substitution of variables by polynomials.
    ///
    /// A variable that occurs with a negative exponent must be mapped to an
    /// invertible monomial.
    pub fn substitute(&self, assignment: &[(Var, Poly<C>)]) -> Result<Self, Error> {
        if assignment.is_empty() {
            return Ok(self.clone());
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut kept = ZERO_EXPS;
            let mut term = Self::one();
            for v in Var::ALL {
                let k = e[v.index()];
                match assignment.iter().find(|(w, _)| *w == v) {
                    Some((_, value)) => {
                        let factor = value.pow_signed(i64::from(k)).ok_or_else(|| {
                            Error::NonInvertibleSubstitution(format!(
                                "{}^{} with {} := {}",
                                v.name(),
                                k,
                                v.name(),
                                value
                            ))
                        })?;
                        term = &term * &factor;
                    }
                    None => kept[v.index()] = k,
                }
            }
            let term = term.shift(&kept).scale(c);
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Swaps the exponents of two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = *e;
                    e.swap(a.index(), b.index());
                    (e, c.clone())
                })
                .collect(),
        }
    }
}

impl LaurentPoly {
    pub fn from_int(n: i64) -> Self {
        Self::constant(BigInt::from(n))
    }

    /// `sign * x^exps`, for building weights like `(-1/q)^k`.
    pub fn signed_monomial(negative: bool, exps: Exps) -> Self {
        let c = if negative {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Self::monomial(c, exps)
    }

    /// Value at `x = y = p = q = s = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc + c)
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl RatPoly {
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::constant(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Converts to an integer polynomial when every coefficient is integral.
    pub fn to_integer(&self) -> Option<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            out.add_term(*e, &c.to_integer());
        }
        Some(out)
    }
}

pub fn add_exps(a: &Exps, b: &Exps) -> Exps {
    std::array::from_fn(|i| a[i] + b[i])
}

pub fn sub_exps(a: &Exps, b: &Exps) -> Exps {
    std::array::from_fn(|i| a[i] - b[i])
}

pub fn neg_exps(a: &Exps) -> Exps {
    std::array::from_fn(|i| -a[i])
}

impl<'a, C: Scalar> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<'a, C: Scalar> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c.clone());
        }
        out
    }
}

impl<'a, C: Scalar> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut acc: BTreeMap<Exps, C> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = add_exps(ea, eb);
                let mut c = ca.clone();
                c *= cb;
                match acc.get_mut(&e) {
                    Some(x) => *x += &c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { terms: acc }
    }
}

impl<C: Scalar> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<C: Scalar> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<C: Scalar> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Scalar> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl<C: Scalar> std::iter::Sum for Poly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<C: Scalar> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn fmt_monomial(exps: &Exps) -> String {
    let parts: Vec<String> = Var::ALL
        .iter()
        .filter(|v| exps[v.index()] != 0)
        .map(|v| match exps[v.index()] {
            1 => v.name().to_string(),
            k => format!("{}^{}", v.name(), k),
        })
        .collect();
    parts.join("*")
}

/// Human-readable form, highest term first: `p^2+2*p*q+q^2+1`.
impl<C: Scalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if negative {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mono = fmt_monomial(e);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}
