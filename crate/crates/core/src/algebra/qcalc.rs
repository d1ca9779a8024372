//! q-integers, (p,q)-integers, q-factorials and q-Pochhammer symbols.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::poly::{LaurentPoly, Var, ZERO_EXPS};

/// `[n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}`; zero for `n = 0`.
pub fn pq_bracket(n: u32) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for i in 0..n {
        let mut e = ZERO_EXPS;
        e[Var::P.index()] = (n - 1 - i) as i32;
        e[Var::Q.index()] = i as i32;
        out.add_term(e, &BigInt::one());
    }
    out
}

/// `[n]_{a,b} = a^{n-1} + a^{n-2} b + ... + b^{n-1}` for arbitrary `a`, `b`.
pub fn bracket_in(n: u32, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for i in 0..n {
        out += &(&a.pow(n - 1 - i) * &b.pow(i));
    }
    out
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_bracket(n: u32) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for i in 0..n {
        let mut e = ZERO_EXPS;
        e[Var::Q.index()] = i as i32;
        out.add_term(e, &BigInt::one());
    }
    out
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, i| &acc * &q_bracket(i))
}

/// `prod_{i=0}^{k-1} (1 - q^{base + i*step})`; `(q^2;q^2)_k` is `q_pochhammer(2, 2, k)`.
pub fn q_pochhammer(base: i32, step: i32, k: u32) -> LaurentPoly {
    let one = LaurentPoly::one();
    (0..k as i32).fold(LaurentPoly::one(), |acc, i| {
        let factor = &one - &LaurentPoly::var_pow(Var::Q, base + i * step);
        &acc * &factor
    })
}

/// Rising factorial `a (a+1) ... (a+k-1)`.
pub fn rising_factorial(a: &BigRational, k: u32) -> BigRational {
    let mut out = BigRational::one();
    let mut term = a.clone();
    for _ in 0..k {
        out *= &term;
        term += BigRational::one();
    }
    out
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
