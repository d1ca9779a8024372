//! A cross-checked table of Euler numbers and their q-analogues.

use rayon::prelude::*;
use serde::Serialize;

use super::closed::{parity_formula, q_parity_formula, CLOSED_FORM_CAP};
use super::numbers::{e_pq, Method, ENUMERATION_CAP};
use crate::algebra::{LaurentPoly, Var};
use crate::error::Error;

#[derive(Clone, Debug, Serialize)]
pub struct EulerRow {
    pub n: usize,
    pub e_int: String,
    pub e_pq: LaurentPoly,
    pub e_q: LaurentPoly,
    pub e_star_q: LaurentPoly,
    /// Methods that produced identical values: `cf` always, `enumeration`
    /// and `closed-form` when within their caps.
    pub methods: Vec<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerTable {
    pub rows: Vec<EulerRow>,
}

fn row(n: usize) -> Result<EulerRow, Error> {
    let pq = e_pq(n, Method::Cf)?;
    let mut methods = vec!["cf"];
    if n <= ENUMERATION_CAP {
        let enumerated = e_pq(n, Method::Enumerate)?;
        if enumerated != pq {
            return Err(Error::Internal(format!("E_{n}(p,q) methods disagree")));
        }
        methods.push("enumeration");
    }
    let q = pq.substitute(&[(Var::P, LaurentPoly::one())])?;
    let star = pq.substitute(&[(Var::P, LaurentPoly::var_pow(Var::Q, 2))])?;
    let int = pq.eval_ones();
    if n <= CLOSED_FORM_CAP {
        if q_parity_formula(n)? != q || parity_formula(n)? != int {
            return Err(Error::Internal(format!("closed forms disagree at n={n}")));
        }
        methods.push("closed-form");
    }
    Ok(EulerRow {
        n,
        e_int: int.to_string(),
        e_pq: pq,
        e_q: q,
        e_star_q: star,
        methods,
    })
}

/// Rows `0..=n_max`; fails if any two methods disagree.
pub fn euler_table(n_max: usize) -> Result<EulerTable, Error> {
    let rows = (0..=n_max)
        .into_par_iter()
        .map(row)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EulerTable { rows })
}
