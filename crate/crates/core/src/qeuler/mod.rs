//! Euler numbers, their (p,q)- and q-analogues, and the closed formulas
//! that reproduce them.

mod closed;
mod egf;
mod numbers;
mod table;

pub use closed::{
    hrz_series, hrz_series_in, parity_formula, q_parity_formula, rz_series, CLOSED_FORM_CAP,
};
pub use egf::egf_exc_fix;
pub use numbers::{alternating_weight, e_int, e_pq, e_q, e_star_q, Method, ENUMERATION_CAP};
pub use table::{euler_table, EulerRow, EulerTable};
