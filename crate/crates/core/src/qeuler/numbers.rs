//! `E_n(p,q)`, its specializations, and the integer Euler numbers.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::algebra::{LaurentPoly, Var};
use crate::contfrac::preset;
use crate::error::Error;
use crate::permstat::{stat_polynomial_capped, Family, Stat, Weight};

/// Largest `n` for which [`e_pq`] will enumerate alternating permutations.
pub const ENUMERATION_CAP: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Enumerate,
    Cf,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "enumerate" => Ok(Method::Enumerate),
            "cf" => Ok(Method::Cf),
            _ => Err(Error::UnknownName(format!("method `{s}`"))),
        }
    }
}

/// `p^thot q^toht` for odd `n`, `p^thto q^toht` for even `n`.
pub fn alternating_weight(n: usize) -> Weight {
    let p_stat = if n % 2 == 1 { Stat::Thot } else { Stat::Thto };
    Weight::new().var(Var::P, p_stat).var(Var::Q, Stat::Toht)
}

pub fn e_pq(n: usize, method: Method) -> Result<LaurentPoly, Error> {
    match method {
        Method::Enumerate => {
            if n == 0 {
                return Ok(LaurentPoly::one());
            }
            stat_polynomial_capped(Family::A, n, &alternating_weight(n), ENUMERATION_CAP)
        }
        Method::Cf => {
            let name = if n % 2 == 1 {
                "tangent-pq"
            } else {
                "secant-pq"
            };
            Ok(preset(name)?.expand(n)?.coeff(n).clone())
        }
    }
}

/// `E_n(1, q)`.
pub fn e_q(n: usize) -> Result<LaurentPoly, Error> {
    e_pq(n, Method::Cf)?.substitute(&[(Var::P, LaurentPoly::one())])
}

/// `E_n(q^2, q)`.
pub fn e_star_q(n: usize) -> Result<LaurentPoly, Error> {
    e_pq(n, Method::Cf)?.substitute(&[(Var::P, LaurentPoly::var_pow(Var::Q, 2))])
}

pub fn e_int(n: usize) -> Result<BigInt, Error> {
    Ok(e_pq(n, Method::Cf)?.eval_ones())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_values() {
        assert_eq!(e_pq(3, Method::Cf).unwrap().to_string(), "p+q");
        assert_eq!(e_pq(4, Method::Cf).unwrap().to_string(), "p^2+2*p*q+q^2+1");
        assert_eq!(e_pq(0, Method::Enumerate).unwrap(), LaurentPoly::one());
        assert_eq!(e_pq(1, Method::Enumerate).unwrap(), LaurentPoly::one());
        assert_eq!(e_star_q(4).unwrap().to_string(), "q^4+2*q^3+q^2+1");
        assert_eq!(e_q(5).unwrap().to_string(), "q^4+3*q^3+5*q^2+5*q+2");
    }

    #[test]
    fn integers() {
        let got: Vec<BigInt> = (0..=8).map(|n| e_int(n).unwrap()).collect();
        let want: Vec<BigInt> = [1, 1, 1, 2, 5, 16, 61, 272, 1385]
            .map(BigInt::from)
            .to_vec();
        assert_eq!(got, want);
    }

    #[test]
    fn methods_agree() {
        for n in 0..=7 {
            assert_eq!(
                e_pq(n, Method::Enumerate).unwrap(),
                e_pq(n, Method::Cf).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            e_pq(10, Method::Enumerate),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }
}
