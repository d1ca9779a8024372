//! Rational functions in the single variable `q`.

use std::fmt;

use super::poly::{LaurentPoly, Var};
use super::series::Ring;
use crate::error::Error;

/// `numerator / denominator`, both Laurent polynomials in `q` alone.
#[derive(Clone)]
pub struct RationalFunctionQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

fn only_q(p: &LaurentPoly) -> bool {
    p.vars().iter().all(|&v| v == Var::Q)
}

impl RationalFunctionQ {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if !only_q(&num) || !only_q(&den) {
            return Err(Error::Parse(format!(
                "rational function must involve q only: ({num})/({den})"
            )));
        }
        Ok(RationalFunctionQ { num, den }.normalize())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        RationalFunctionQ {
            num,
            den: LaurentPoly::one(),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// Clears the denominator when it divides the numerator exactly.
    pub fn normalize(self) -> Self {
        if self.den.is_one() {
            return self;
        }
        if let Some(inv) = self.den.try_inverse() {
            return RationalFunctionQ {
                num: &self.num * &inv,
                den: LaurentPoly::one(),
            };
        }
        match self.num.div_exact(&self.den) {
            Some(num) => RationalFunctionQ {
                num,
                den: LaurentPoly::one(),
            },
            None => self,
        }
    }

    /// The polynomial this value represents, if the denominator cleared.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            self.num.div_exact(&self.den)
        }
    }
}

impl PartialEq for RationalFunctionQ {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Debug for RationalFunctionQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalFunctionQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Ring for RationalFunctionQ {
    fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RationalFunctionQ {
                num: &self.num + &other.num,
                den: self.den.clone(),
            }
            .normalize();
        }
        RationalFunctionQ {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
        .normalize()
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        RationalFunctionQ {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
        .normalize()
    }
    fn neg_ref(&self) -> Self {
        RationalFunctionQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(
                RationalFunctionQ {
                    num: self.den.clone(),
                    den: self.num.clone(),
                }
                .normalize(),
            )
        }
    }
    fn is_term(&self) -> bool {
        self.den.is_one() && self.num.len() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::var(Var::Q)
    }

    #[test]
    fn clears_exact_denominators() {
        let one = LaurentPoly::one();
        let num = &(&one - &q().pow(2)) * &q();
        let r = RationalFunctionQ::new(num, &one - &q()).unwrap();
        assert!(r.denominator().is_one());
        assert_eq!(r.numerator(), &(&q() + &q().pow(2)));
    }

    #[test]
    fn cross_multiplication_equality() {
        let one = LaurentPoly::one();
        let a = RationalFunctionQ::new(one.clone(), &one - &q()).unwrap();
        let b = RationalFunctionQ::new(&one + &q(), &one - &q().pow(2)).unwrap();
        assert_eq!(a, b);
        assert!(a.to_poly().is_none());
        let sum = a.add_ref(&RationalFunctionQ::new(-&q(), &one - &q()).unwrap());
        assert_eq!(sum.to_poly().unwrap(), one);
    }

    #[test]
    fn rejects_zero_denominator_and_foreign_vars() {
        assert!(matches!(
            RationalFunctionQ::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(Error::ZeroDenominator)
        ));
        assert!(RationalFunctionQ::new(LaurentPoly::var(Var::P), LaurentPoly::one()).is_err());
    }
}
