//! Exact arithmetic: Laurent and rational polynomials, truncated power
//! series, rational functions of `q`, and q-calculus primitives.

mod json;
pub mod poly;
pub mod qcalc;
pub mod ratfunc;
pub mod series;

pub use poly::{Exps, LaurentPoly, Poly, RatPoly, Scalar, Var};
pub use qcalc::{
    bracket_in, factorial, pq_bracket, q_bracket, q_factorial, q_pochhammer, rising_factorial,
};
pub use ratfunc::RationalFunctionQ;
pub use series::{Ring, TruncSeries};
