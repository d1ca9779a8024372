//! The exponential generating function of `x^exc y^fix` over permutations.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{factorial, RatPoly, TruncSeries, Var};
use crate::error::Error;

fn exp_series(base: &RatPoly, order: usize) -> TruncSeries<RatPoly> {
    let coeffs = (0..=order)
        .map(|n| {
            let inv_fact = BigRational::new(BigInt::from(1), factorial(n as u32));
            base.pow(n as u32).scale(&inv_fact)
        })
        .collect();
    TruncSeries::from_coeffs(coeffs, order)
}

/// `(1-x) e^{yt} / (e^{xt} - x e^t)`, expanded after dividing the
/// denominator exactly by `1-x` so that its constant term is 1.
pub fn egf_exc_fix(order: usize) -> Result<TruncSeries<RatPoly>, Error> {
    let x = RatPoly::var(Var::X);
    let y = RatPoly::var(Var::Y);
    let one = RatPoly::one();
    let one_minus_x = &one - &x;
    let num = exp_series(&y, order);
    let ext = exp_series(&x, order);
    let et = exp_series(&one, order);
    let den = ext.sub(&et.scale(&x));
    let den = TruncSeries::from_coeffs(
        den.coeffs()
            .iter()
            .map(|c| {
                c.div_exact(&one_minus_x)
                    .ok_or_else(|| Error::Internal(format!("1-x does not divide {c}")))
            })
            .collect::<Result<Vec<_>, _>>()?,
        order,
    );
    TruncSeries::from_fraction(&num, &den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scaled(order: usize, n: usize) -> String {
        let s = egf_exc_fix(order).unwrap();
        let f = BigRational::from_integer(factorial(n as u32));
        s.coeff(n).scale(&f).to_string()
    }

    #[test]
    fn low_coefficients() {
        assert_eq!(scaled(3, 0), "1");
        assert_eq!(scaled(3, 2), "x+y^2");
        assert_eq!(scaled(3, 3), "x^2+3*x*y+x+y^3");
    }
}
