//! J- and S-fractions with polynomial-valued levels, expanded by convergents.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{LaurentPoly, TruncSeries};
use crate::error::Error;
use crate::lattice::{weighted_series, Kind, WeightSpec};

pub type LevelFn = Arc<dyn Fn(usize) -> LaurentPoly + Send + Sync>;

/// `1/(1 - b_0 u - ac_0 u^2/(1 - b_1 u - ac_1 u^2/...))` with `u = t^var_power`
/// and `ac_h = a_h c_{h+1}`.
#[derive(Clone)]
pub struct JFraction {
    pub b: LevelFn,
    pub ac: LevelFn,
    pub var_power: usize,
    pub depth: Option<usize>,
}

/// `t^lead_power/(1 - c_1 u/(1 - c_2 u/...))` with `u = t^var_power`; levels
/// start at 1.
#[derive(Clone)]
pub struct SFraction {
    pub c: LevelFn,
    pub var_power: usize,
    pub lead_power: usize,
    pub depth: Option<usize>,
}

impl fmt::Debug for JFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("JFraction")
            .field("b0", &(self.b)(0))
            .field("ac0", &(self.ac)(0))
            .field("var_power", &self.var_power)
            .finish()
    }
}

impl fmt::Debug for SFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SFraction")
            .field("c1", &(self.c)(1))
            .field("var_power", &self.var_power)
            .field("lead_power", &self.lead_power)
            .finish()
    }
}

fn levels_from_vec(v: Vec<LaurentPoly>, offset: usize) -> LevelFn {
    Arc::new(move |k| {
        k.checked_sub(offset)
            .and_then(|i| v.get(i).cloned())
            .unwrap_or_else(LaurentPoly::zero)
    })
}

/// Orders in the fraction variable `u` needed for `t`-order `order`.
fn u_order(order: usize, lead: usize, var_power: usize) -> Option<usize> {
    order.checked_sub(lead).map(|r| r / var_power)
}

/// Spreads a `u`-series into `t`, with `u = t^var_power`, times `t^lead`.
fn to_t(
    u_series: &TruncSeries<LaurentPoly>,
    var_power: usize,
    lead: usize,
    order: usize,
) -> TruncSeries<LaurentPoly> {
    let mut coeffs = vec![LaurentPoly::zero(); order + 1];
    for (m, c) in u_series.coeffs().iter().enumerate() {
        let k = lead + m * var_power;
        if k <= order {
            coeffs[k] = c.clone();
        }
    }
    TruncSeries::from_coeffs(coeffs, order)
}

impl JFraction {
    pub fn new(b: LevelFn, ac: LevelFn) -> Self {
        JFraction {
            b,
            ac,
            var_power: 1,
            depth: None,
        }
    }

    /// Levels given explicitly, zero beyond the end.
    pub fn from_vecs(b: Vec<LaurentPoly>, ac: Vec<LaurentPoly>) -> Self {
        Self::new(levels_from_vec(b, 0), levels_from_vec(ac, 0))
    }

    pub fn in_power(mut self, var_power: usize) -> Self {
        assert!(var_power >= 1);
        self.var_power = var_power;
        self
    }

    /// Levels a path of `u`-length `m` can reach: `ceil(m/2) + 1`.
    pub fn default_depth(u_order: usize) -> usize {
        u_order.div_ceil(2) + 1
    }

    pub fn expand(&self, order: usize) -> Result<TruncSeries<LaurentPoly>, Error> {
        let m = order / self.var_power;
        let depth = self.depth.unwrap_or_else(|| Self::default_depth(m));
        self.expand_with_depth(order, depth)
    }

    pub fn expand_with_depth(
        &self,
        order: usize,
        depth: usize,
    ) -> Result<TruncSeries<LaurentPoly>, Error> {
        let m = order / self.var_power;
        let mut f = TruncSeries::one(m);
        for k in (0..depth).rev() {
            let mut den = TruncSeries::one(m);
            let b = (self.b)(k);
            if m >= 1 && !b.is_zero() {
                den = den.sub(&TruncSeries::monomial(b, 1, m));
            }
            let ac = (self.ac)(k);
            if m >= 2 && !ac.is_zero() {
                den = den.sub(&f.shift_up(2, m).scale(&ac));
            }
            f = den.recip()?;
        }
        Ok(to_t(&f, self.var_power, 0, order))
    }

    /// Step weights whose Motzkin sum expands the fraction: Up `ac_h`,
    /// Level `b_h`, Down 1.
    pub fn weight_spec(&self) -> WeightSpec {
        WeightSpec::from_fns(
            self.ac.clone(),
            self.b.clone(),
            Arc::new(|_| LaurentPoly::one()),
        )
    }

    /// The expansion computed from weighted Motzkin paths instead.
    pub fn lattice_expand(&self, order: usize) -> TruncSeries<LaurentPoly> {
        let m = order / self.var_power;
        let paths = weighted_series(Kind::Motzkin, m, &self.weight_spec());
        to_t(&paths, self.var_power, 0, order)
    }
}

impl SFraction {
    pub fn new(c: LevelFn) -> Self {
        SFraction {
            c,
            var_power: 1,
            lead_power: 0,
            depth: None,
        }
    }

    /// `c_1, c_2, ...` given explicitly, zero beyond the end.
    pub fn from_vec(c: Vec<LaurentPoly>) -> Self {
        Self::new(levels_from_vec(c, 1))
    }

    pub fn in_power(mut self, var_power: usize) -> Self {
        assert!(var_power >= 1);
        self.var_power = var_power;
        self
    }

    pub fn with_lead(mut self, lead_power: usize) -> Self {
        self.lead_power = lead_power;
        self
    }

    /// Levels a Dyck word of `u`-length `m` can touch: `m + 1`.
    pub fn default_depth(u_order: usize) -> usize {
        u_order + 1
    }

    pub fn expand(&self, order: usize) -> Result<TruncSeries<LaurentPoly>, Error> {
        let depth = match u_order(order, self.lead_power, self.var_power) {
            Some(m) => self.depth.unwrap_or_else(|| Self::default_depth(m)),
            None => 0,
        };
        self.expand_with_depth(order, depth)
    }

    pub fn expand_with_depth(
        &self,
        order: usize,
        depth: usize,
    ) -> Result<TruncSeries<LaurentPoly>, Error> {
        let Some(m) = u_order(order, self.lead_power, self.var_power) else {
            return Ok(TruncSeries::zero(order));
        };
        let mut f = TruncSeries::one(m);
        for k in (1..=depth).rev() {
            let c = (self.c)(k);
            let mut den = TruncSeries::one(m);
            if m >= 1 && !c.is_zero() {
                den = den.sub(&f.shift_up(1, m).scale(&c));
            }
            f = den.recip()?;
        }
        Ok(to_t(&f, self.var_power, self.lead_power, order))
    }

    /// Step weights whose Dyck sum (one `u` per pair of steps) expands the
    /// fraction: Up at `h` weighs `c_{h+1}`, Down 1.
    pub fn weight_spec(&self) -> WeightSpec {
        let c = self.c.clone();
        WeightSpec::from_fns(
            Arc::new(move |h| c(h + 1)),
            Arc::new(|_| LaurentPoly::zero()),
            Arc::new(|_| LaurentPoly::one()),
        )
    }

    pub fn lattice_expand(&self, order: usize) -> TruncSeries<LaurentPoly> {
        let Some(m) = u_order(order, self.lead_power, self.var_power) else {
            return TruncSeries::zero(order);
        };
        let paths = weighted_series(Kind::Dyck, 2 * m, &self.weight_spec());
        let by_u: Vec<LaurentPoly> = (0..=m).map(|i| paths.coeff(2 * i).clone()).collect();
        to_t(
            &TruncSeries::from_coeffs(by_u, m),
            self.var_power,
            self.lead_power,
            order,
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Even,
    Odd,
}

/// `constant + prefactor u^prefactor_power J`, all times `t^lead_power`.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub variant: Variant,
    pub constant: LaurentPoly,
    pub prefactor: LaurentPoly,
    pub prefactor_power: usize,
    pub lead_power: usize,
    pub j: JFraction,
}

/// Rewrites an S-fraction as a J-fraction in the same variable.
///
/// Even: `b_0 = c_1`, `b_h = c_{2h} + c_{2h+1}`, `ac_h = c_{2h+1} c_{2h+2}`.
/// Odd: `1 + c_1 u J'` with `b_h = c_{2h+1} + c_{2h+2}`, `ac_h = c_{2h+2} c_{2h+3}`.
pub fn contract(sf: &SFraction, variant: Variant) -> Contraction {
    let c = sf.c.clone();
    let c2 = sf.c.clone();
    let (b, ac, constant, prefactor, prefactor_power): (LevelFn, LevelFn, _, _, _) = match variant {
        Variant::Even => (
            Arc::new(move |h| {
                if h == 0 {
                    c(1)
                } else {
                    &c(2 * h) + &c(2 * h + 1)
                }
            }),
            Arc::new(move |h| &c2(2 * h + 1) * &c2(2 * h + 2)),
            LaurentPoly::zero(),
            LaurentPoly::one(),
            0,
        ),
        Variant::Odd => (
            Arc::new(move |h| &c(2 * h + 1) + &c(2 * h + 2)),
            Arc::new(move |h| &c2(2 * h + 2) * &c2(2 * h + 3)),
            LaurentPoly::one(),
            (sf.c)(1),
            1,
        ),
    };
    Contraction {
        variant,
        constant,
        prefactor,
        prefactor_power,
        lead_power: sf.lead_power,
        j: JFraction {
            b,
            ac,
            var_power: sf.var_power,
            depth: None,
        },
    }
}

impl Contraction {
    pub fn expand(&self, order: usize) -> Result<TruncSeries<LaurentPoly>, Error> {
        let Some(rest) = order.checked_sub(self.lead_power) else {
            return Ok(TruncSeries::zero(order));
        };
        let shift = self.prefactor_power * self.j.var_power;
        let mut inner = TruncSeries::constant(self.constant.clone(), rest);
        if rest >= shift && !self.prefactor.is_zero() {
            let j = self.j.expand(rest - shift)?;
            inner = inner.add(&j.shift_up(shift, rest).scale(&self.prefactor));
        }
        Ok(inner.shift_up(self.lead_power, order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q_bracket, Var};

    fn ints(v: &[i64]) -> Vec<LaurentPoly> {
        v.iter().map(|&n| LaurentPoly::from_int(n)).collect()
    }

    fn evals(s: &TruncSeries<LaurentPoly>) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c.eval_ones()).unwrap())
            .collect()
    }

    #[test]
    fn factorials_from_all_ones() {
        // b_h = 2h + 1, ac_h = (h+1)^2 counts permutations
        let jf = JFraction::new(
            Arc::new(|h| LaurentPoly::from_int(2 * h as i64 + 1)),
            Arc::new(|h| LaurentPoly::from_int(((h + 1) * (h + 1)) as i64)),
        );
        assert_eq!(
            evals(&jf.expand(6).unwrap()),
            vec![1, 1, 2, 6, 24, 120, 720]
        );
        assert_eq!(jf.expand(6).unwrap(), jf.lattice_expand(6));
    }

    #[test]
    fn zero_levels_give_one() {
        let jf = JFraction::from_vecs(vec![], vec![]);
        assert_eq!(jf.expand(5).unwrap(), TruncSeries::one(5));
        let sf = SFraction::from_vec(vec![]);
        assert_eq!(sf.expand(5).unwrap(), TruncSeries::one(5));
        for v in [Variant::Even, Variant::Odd] {
            assert_eq!(contract(&sf, v).expand(5).unwrap(), TruncSeries::one(5));
        }
    }

    #[test]
    fn secant_numbers() {
        let sf = SFraction::new(Arc::new(|k| LaurentPoly::from_int((k * k) as i64))).in_power(2);
        assert_eq!(evals(&sf.expand(6).unwrap()), vec![1, 0, 1, 0, 5, 0, 61]);
        assert_eq!(sf.expand(6).unwrap(), sf.lattice_expand(6));
    }

    #[test]
    fn tangent_numbers_with_lead() {
        let sf = SFraction::new(Arc::new(|k| LaurentPoly::from_int((k * (k + 1)) as i64)))
            .in_power(2)
            .with_lead(1);
        assert_eq!(
            evals(&sf.expand(7).unwrap()),
            vec![0, 1, 0, 2, 0, 16, 0, 272]
        );
        assert_eq!(sf.expand(7).unwrap(), sf.lattice_expand(7));
        assert_eq!(sf.expand(0).unwrap(), TruncSeries::zero(0));
    }

    #[test]
    fn depth_stability() {
        let sf = SFraction::new(Arc::new(|k| q_bracket(k as u32))).in_power(1);
        let base = sf
            .expand_with_depth(8, SFraction::default_depth(8))
            .unwrap();
        assert_eq!(
            base,
            sf.expand_with_depth(8, SFraction::default_depth(8) + 4)
                .unwrap()
        );
        let jf = JFraction::new(
            Arc::new(|h| q_bracket(h as u32 + 1)),
            Arc::new(|h| LaurentPoly::var(Var::Q).pow(h as u32 + 1)),
        );
        let base = jf
            .expand_with_depth(9, JFraction::default_depth(9))
            .unwrap();
        assert_eq!(
            base,
            jf.expand_with_depth(9, JFraction::default_depth(9) + 4)
                .unwrap()
        );
    }

    #[test]
    fn contraction_of_integer_sequence() {
        let sf = SFraction::from_vec(ints(&[2, -1, 3, 5, -2, 1, 4]));
        let want = sf.expand(10).unwrap();
        for v in [Variant::Even, Variant::Odd] {
            assert_eq!(contract(&sf, v).expand(10).unwrap(), want, "{v:?}");
        }
    }

    #[test]
    fn even_contraction_levels() {
        let sf = SFraction::from_vec(ints(&[1, 2, 3, 4, 5]));
        let c = contract(&sf, Variant::Even);
        assert_eq!((c.j.b)(0), LaurentPoly::from_int(1));
        assert_eq!((c.j.b)(1), LaurentPoly::from_int(5));
        assert_eq!((c.j.ac)(0), LaurentPoly::from_int(2));
        assert_eq!((c.j.ac)(1), LaurentPoly::from_int(12));
        let c = contract(&sf, Variant::Odd);
        assert_eq!(c.prefactor, LaurentPoly::from_int(1));
        assert_eq!((c.j.b)(0), LaurentPoly::from_int(3));
        assert_eq!((c.j.ac)(0), LaurentPoly::from_int(6));
    }
}
