//! Power series in `t`, truncated after a fixed order.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Poly, Scalar};
use crate::error::Error;

/// Coefficient ring of a [`TruncSeries`].
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn try_inverse(&self) -> Option<Self>;

    /// Whether the value prints as a single term (no parentheses needed).
    fn is_term(&self) -> bool {
        true
    }
}

impl<C: Scalar> Ring for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_inverse(&self) -> Option<Self> {
        Poly::try_inverse(self)
    }
    fn is_term(&self) -> bool {
        self.len() == 1
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_inverse(&self) -> Option<Self> {
        Scalar::inverse(self)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_inverse(&self) -> Option<Self> {
        Scalar::inverse(self)
    }
}

/// `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * t^k`, or zero when `k` exceeds the order.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Truncates or zero-pads `coeffs` to the given order.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Drops terms above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot truncate upward");
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// `t^k * self`, known up to `order`; requires `self` known to `order - k`.
    pub fn shift_up(&self, k: usize, order: usize) -> Self {
        assert!(
            order < k || order - k <= self.order(),
            "shift would need unknown coefficients"
        );
        let coeffs = (0..=order)
            .map(|i| {
                if i < k {
                    C::zero()
                } else {
                    self.coeffs[i - k].clone()
                }
            })
            .collect();
        TruncSeries { coeffs }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series orders differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_order(other);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_order(other);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Cauchy product modulo `t^{N+1}`.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_order(other);
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = C::zero();
            for i in 0..=k {
                let (a, b) = (&self.coeffs[i], &other.coeffs[k - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add_ref(&a.mul_ref(b));
            }
            coeffs.push(acc);
        }
        TruncSeries { coeffs }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn recip(&self) -> Result<Self, Error> {
        let c0 = &self.coeffs[0];
        let inv0 = c0
            .try_inverse()
            .ok_or_else(|| Error::NotInvertible(c0.to_string()))?;
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                let (a, b) = (&self.coeffs[j], &out[k - j]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add_ref(&a.mul_ref(b));
            }
            out.push(acc.mul_ref(&inv0).neg_ref());
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `num / den` as a series; `den` must have a unit constant term.
    pub fn from_fraction(num: &Self, den: &Self) -> Result<Self, Error> {
        Ok(num.mul(&den.recip()?))
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Applies `t -> t^k`, keeping the same order.
    pub fn stretch(&self, k: usize) -> Self {
        assert!(k >= 1);
        let n = self.order();
        let mut coeffs = vec![C::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k <= n {
                coeffs[i * k] = c.clone();
            }
        }
        TruncSeries { coeffs }
    }

    /// First index where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

impl<C: Ring> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self, self.order() + 1)
    }
}

/// Reads like `1 + t^2 + (p^2+2*p*q+q^2+1)*t^4`.
impl<C: Ring> fmt::Display for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = c.to_string();
            let tpow = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let simple = c.is_term();
            let term = if k == 0 {
                body
            } else if body == "1" {
                tpow
            } else if body == "-1" {
                format!("-{tpow}")
            } else if simple {
                format!("{body}*{tpow}")
            } else {
                format!("({body})*{tpow}")
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, term) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(term);
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{LaurentPoly, Var};

    fn int(n: i64) -> LaurentPoly {
        LaurentPoly::from_int(n)
    }

    #[test]
    fn geometric_recip() {
        let f = TruncSeries::from_coeffs(vec![int(1), int(-1)], 3);
        let g = f.recip().unwrap();
        assert_eq!(g.coeffs(), &[int(1), int(1), int(1), int(1)]);
    }

    #[test]
    fn one_over_one_plus_q_t2() {
        let q = LaurentPoly::var(Var::Q);
        let f = TruncSeries::from_coeffs(vec![int(1), int(0), q.clone()], 4);
        let g = f.recip().unwrap();
        assert_eq!(g.coeffs(), &[int(1), int(0), -&q, int(0), q.pow(2)]);
    }

    #[test]
    fn non_unit_constant_is_rejected() {
        let f = TruncSeries::from_coeffs(vec![int(2), int(1)], 3);
        match f.recip() {
            Err(Error::NotInvertible(c)) => assert_eq!(c, "2"),
            other => panic!("expected NotInvertible, got {other:?}"),
        }
    }

    #[test]
    fn display_format() {
        let s = TruncSeries::from_coeffs(
            vec![
                int(1),
                int(0),
                int(1),
                int(0),
                &LaurentPoly::var(Var::P) + &int(1),
            ],
            4,
        );
        assert_eq!(s.to_string(), "1 + t^2 + (p+1)*t^4");
        let s = TruncSeries::from_coeffs(vec![int(0), int(-1), int(0), int(-2)], 3);
        assert_eq!(s.to_string(), "-t - 2*t^3");
    }
}
