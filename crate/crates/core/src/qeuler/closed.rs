//! Closed formulas: the rational-function series for `E_n` and `E_n(q)`,
//! and their parity-independent double sums.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{
    factorial, q_bracket, q_factorial, rising_factorial, LaurentPoly, RationalFunctionQ, Ring,
    TruncSeries, Var,
};
use crate::error::Error;

/// Largest `n` (or order) accepted by the closed-form evaluations.
pub const CLOSED_FORM_CAP: usize = 12;

fn check_cap(n: usize) -> Result<(), Error> {
    if n > CLOSED_FORM_CAP {
        return Err(Error::InvalidArgument(format!(
            "{n} exceeds the closed-form cap {CLOSED_FORM_CAP}"
        )));
    }
    Ok(())
}

fn ratio(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `Σ_m t^m num_m / Π_{k<=m/2} (c_{m,k} + d_{m,k} t^2)`, summed for `m <= order`.
fn rational_sum<R: Ring>(
    order: usize,
    num: impl Fn(usize) -> R,
    factor: impl Fn(usize, usize) -> (R, R),
) -> Result<TruncSeries<R>, Error> {
    let mut total = TruncSeries::zero(order);
    for m in 0..=order {
        let mut den = TruncSeries::one(order);
        for k in 0..=m / 2 {
            let (c, d) = factor(m, k);
            let mut coeffs = vec![c];
            coeffs.extend([R::zero(), d]);
            den = den.mul(&TruncSeries::from_coeffs(coeffs, order));
        }
        let term = TruncSeries::monomial(num(m), m, order);
        total = total.add(&TruncSeries::from_fraction(&term, &den)?);
    }
    Ok(total)
}

/// `Σ_m m! t^m / Π_{k=0}^{⌊m/2⌋} (1 + (m-2k+1)^2 t^2)`.
pub fn rz_series(order: usize) -> Result<TruncSeries<BigRational>, Error> {
    check_cap(order)?;
    rational_sum(
        order,
        |m| ratio(factorial(m as u32)),
        |m, k| {
            let a = (m - 2 * k + 1) as i64;
            (<BigRational as One>::one(), ratio(a * a))
        },
    )
}

/// The parity-independent double sum for `E_n`, evaluated over the rationals.
pub fn parity_formula(n: usize) -> Result<BigInt, Error> {
    check_cap(n)?;
    let half_n = (n / 2) as u32;
    let mut total = <BigRational as Zero>::zero();
    for m in (0..=n).filter(|m| (n - m).is_multiple_of(2)) {
        let mm = m / 2;
        let lead = ratio(factorial(m as u32)) / ratio(BigInt::from(4).pow(mm as u32));
        let mut inner = <BigRational as Zero>::zero();
        for k in 0..=mm {
            let sign = if ((n - m) / 2 + k).is_multiple_of(2) {
                1
            } else {
                -1
            };
            let base = BigInt::from((m - 2 * k + 1) as i64).pow(2 * half_n);
            let den = ratio(factorial(k as u32))
                * ratio(factorial((mm - k) as u32))
                * rising_factorial(&ratio((m - 2 * k + 2) as i64), k as u32)
                * rising_factorial(&ratio((m.div_ceil(2) - k + 1) as i64), (mm - k) as u32);
            inner += ratio(base * sign) / den;
        }
        total += lead * inner;
    }
    if !total.is_integer() {
        return Err(Error::Internal(format!(
            "parity formula gave {total} for n={n}"
        )));
    }
    Ok(total.to_integer())
}

fn q_pow(e: i64) -> LaurentPoly {
    LaurentPoly::var_pow(Var::Q, e as i32)
}

/// `Σ_m q^{m+1} [m]_q! t^m / Π_k (q^{m-2k+1} + [m-2k+1]_q^2 t^2)`.
pub fn hrz_series(order: usize) -> Result<TruncSeries<RationalFunctionQ>, Error> {
    check_cap(order)?;
    hrz_series_in(order, RationalFunctionQ::from_poly)
}

/// As [`hrz_series`], with coefficients embedded into another ring. Every
/// constant term `q^{m-2k+1}` is a unit monomial, so Laurent polynomials
/// suffice.
pub fn hrz_series_in<R: Ring>(
    order: usize,
    embed: impl Fn(LaurentPoly) -> R,
) -> Result<TruncSeries<R>, Error> {
    rational_sum(
        order,
        |m| embed(&q_pow(m as i64 + 1) * &q_factorial(m as u32)),
        |m, k| {
            let a = (m - 2 * k + 1) as u32;
            (embed(q_pow(a as i64)), embed(q_bracket(a).pow(2)))
        },
    )
}

/// `(1 - q^e)` factors with multiplicity.
type Factors = BTreeMap<u32, u32>;

fn pochhammer_factors(out: &mut Factors, base: u32, k: usize) {
    for i in 0..k as u32 {
        *out.entry(base + 2 * i).or_insert(0) += 1;
    }
}

fn factors_poly(f: &Factors) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for (&e, &c) in f {
        let one_minus = &LaurentPoly::one() - &q_pow(e as i64);
        out = &out * &one_minus.pow(c);
    }
    out
}

/// The parity-independent double sum for `E_n(q)`. Summands carry
/// `(q^2;q^2)`-type denominators; the sum is brought over a common
/// denominator and must clear to a polynomial.
pub fn q_parity_formula(n: usize) -> Result<LaurentPoly, Error> {
    check_cap(n)?;
    let half_n = n / 2;
    let mut terms: Vec<(LaurentPoly, Factors)> = Vec::new();
    for m in (0..=n).filter(|m| (n - m).is_multiple_of(2)) {
        let mm = m / 2;
        let one_minus_q = &LaurentPoly::one() - &LaurentPoly::var(Var::Q);
        let lead = &q_factorial(m as u32) * &one_minus_q.pow(2 * mm as u32);
        for k in 0..=mm {
            let (ni, mi, ki, mmi, hi) = (n as i64, m as i64, k as i64, mm as i64, half_n as i64);
            let a = ki * ki + ki * (ni - mi + 1) - (ni - mi) / 2 + mmi * mmi - mi * hi;
            let sign = if ((n - m) / 2 + k).is_multiple_of(2) {
                1
            } else {
                -1
            };
            let num = &(&lead * &q_bracket((m - 2 * k + 1) as u32).pow(2 * half_n as u32))
                * &(&q_pow(a) * &LaurentPoly::from_int(sign));
            let mut den = Factors::new();
            pochhammer_factors(&mut den, 2, k);
            pochhammer_factors(&mut den, 2, mm - k);
            pochhammer_factors(&mut den, 2 * (m - 2 * k + 2) as u32, k);
            pochhammer_factors(&mut den, 2 * (m.div_ceil(2) - k + 1) as u32, mm - k);
            if den.contains_key(&0) {
                return Err(Error::Internal(format!(
                    "zero denominator factor at n={n}, m={m}, k={k}"
                )));
            }
            terms.push((num, den));
        }
    }
    let mut lcm = Factors::new();
    for (_, den) in &terms {
        for (&e, &c) in den {
            let slot = lcm.entry(e).or_insert(0);
            *slot = (*slot).max(c);
        }
    }
    let mut sum = LaurentPoly::zero();
    for (num, den) in &terms {
        let missing: Factors = lcm
            .iter()
            .map(|(&e, &c)| (e, c - den.get(&e).copied().unwrap_or(0)))
            .filter(|&(_, c)| c > 0)
            .collect();
        sum += &(num * &factors_poly(&missing));
    }
    let value = RationalFunctionQ::new(sum, factors_poly(&lcm))?;
    value.to_poly().ok_or_else(|| {
        Error::Internal(format!(
            "q-parity formula did not clear to a polynomial at n={n}"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qeuler::{e_int, e_q};

    #[test]
    fn rz_matches_euler_numbers() {
        let s = rz_series(8).unwrap();
        for n in 0..=8 {
            assert_eq!(s.coeff(n), &ratio(e_int(n).unwrap()), "n={n}");
        }
        assert_eq!(s.coeff(4), &ratio(5));
    }

    #[test]
    fn parity_values() {
        assert_eq!(parity_formula(6).unwrap(), BigInt::from(61));
        assert_eq!(parity_formula(1).unwrap(), BigInt::from(1));
        assert_eq!(parity_formula(0).unwrap(), BigInt::from(1));
        for n in 0..=10 {
            assert_eq!(parity_formula(n).unwrap(), e_int(n).unwrap());
        }
    }

    #[test]
    fn hrz_matches_q_euler() {
        let s = hrz_series(7).unwrap();
        for n in 0..=7 {
            assert_eq!(s.coeff(n).to_poly().unwrap(), e_q(n).unwrap(), "n={n}");
        }
        assert_eq!(s.coeff(4).to_poly().unwrap().to_string(), "q^2+2*q+2");
        let laurent = hrz_series_in(7, |p| p).unwrap();
        assert_eq!(laurent.map(|c| RationalFunctionQ::from_poly(c.clone())), s);
    }

    #[test]
    fn q_parity_values() {
        assert_eq!(q_parity_formula(4).unwrap().to_string(), "q^2+2*q+2");
        for n in 0..=8 {
            let v = q_parity_formula(n).unwrap();
            assert_eq!(v, e_q(n).unwrap(), "n={n}");
            assert_eq!(v.eval_ones(), parity_formula(n).unwrap());
        }
    }

    #[test]
    fn caps() {
        assert!(rz_series(13).is_err());
        assert!(q_parity_formula(13).is_err());
    }
}
