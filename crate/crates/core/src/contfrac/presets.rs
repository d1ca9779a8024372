//! Named continued fractions for the Euler-number generating functions and
//! the permutation generating functions they specialize.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::fraction::{JFraction, LevelFn, SFraction};
use crate::algebra::{bracket_in, pq_bracket, q_bracket, LaurentPoly, TruncSeries, Var};
use crate::error::Error;

pub const PRESET_NAMES: [&str; 13] = [
    "tangent-pq",
    "secant-pq",
    "tangent-q",
    "secant-q",
    "tangent-qstar",
    "secant-qstar",
    "thm4.1",
    "cf-A",
    "cf-SZ",
    "jv1",
    "jv2",
    "sz1",
    "sz2",
];

#[derive(Clone, Debug)]
pub enum Preset {
    J(JFraction),
    S(SFraction),
}

impl Preset {
    pub fn expand(&self, order: usize) -> Result<TruncSeries<LaurentPoly>, Error> {
        match self {
            Preset::J(j) => j.expand(order),
            Preset::S(s) => s.expand(order),
        }
    }

    pub fn lattice_expand(&self, order: usize) -> TruncSeries<LaurentPoly> {
        match self {
            Preset::J(j) => j.lattice_expand(order),
            Preset::S(s) => s.lattice_expand(order),
        }
    }

    pub fn expand_with_extra_depth(
        &self,
        order: usize,
        extra: usize,
    ) -> Result<TruncSeries<LaurentPoly>, Error> {
        match self {
            Preset::J(j) => {
                let m = order / j.var_power;
                j.expand_with_depth(order, JFraction::default_depth(m) + extra)
            }
            Preset::S(s) => {
                let m = order.saturating_sub(s.lead_power) / s.var_power;
                s.expand_with_depth(order, SFraction::default_depth(m) + extra)
            }
        }
    }
}

fn var(v: Var) -> LaurentPoly {
    LaurentPoly::var(v)
}

fn q_pow(e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::Q, e)
}

fn int(n: i64) -> LaurentPoly {
    LaurentPoly::from_int(n)
}

fn substituted(f: LevelFn, assignment: Vec<(Var, LaurentPoly)>) -> LevelFn {
    Arc::new(move |h| {
        f(h).substitute(&assignment)
            .expect("preset substitutions are monomial or hit nonnegative powers only")
    })
}

fn tangent(c: impl Fn(u32) -> LaurentPoly + Send + Sync + 'static) -> Preset {
    Preset::S(
        SFraction::new(Arc::new(move |k| c(k as u32)))
            .in_power(2)
            .with_lead(1),
    )
}

fn secant(c: impl Fn(u32) -> LaurentPoly + Send + Sync + 'static) -> Preset {
    Preset::S(SFraction::new(Arc::new(move |k| c(k as u32))).in_power(2))
}

/// `a_h = x s^{2h+1} [h+1]_{q,ps}`, `b_h = x y p^h s^{2h} + (1+xq) s^h [h]_{q,ps}`,
/// `c_h = [h]_{q,ps}`; generates `x^wex y^fix q^cros p^nest s^inv` over `S_n`.
fn thm41() -> JFraction {
    let ps = || &var(Var::P) * &var(Var::S);
    let bracket = move |n: u32| bracket_in(n, &var(Var::Q), &ps());
    let b: LevelFn = Arc::new(move |h| {
        let h32 = h as u32;
        let x = var(Var::X);
        let s = var(Var::S);
        let first = &(&(&x * &var(Var::Y)) * &var(Var::P).pow(h32)) * &s.pow(2 * h32);
        let one_xq = &int(1) + &(&x * &var(Var::Q));
        &first + &(&(&one_xq * &s.pow(h32)) * &bracket(h32))
    });
    let ac: LevelFn = Arc::new(move |h| {
        let h32 = h as u32;
        let a = &(&var(Var::X) * &var(Var::S).pow(2 * h32 + 1)) * &bracket(h32 + 1);
        &a * &bracket(h32 + 1)
    });
    JFraction::new(b, ac)
}

/// `p <- 1, s <- 1`: generates `x^wex y^fix q^cros`.
fn cf_a() -> JFraction {
    let t = thm41();
    let sub = vec![(Var::P, int(1)), (Var::S, int(1))];
    JFraction::new(substituted(t.b, sub.clone()), substituted(t.ac, sub))
}

/// `y <- y/x, q <- 1, p <- 1, s <- q`: generates `x^exc y^fix q^inv`.
fn cf_sz() -> JFraction {
    let t = thm41();
    let sub = vec![
        (Var::Y, &var(Var::Y) * &LaurentPoly::var_pow(Var::X, -1)),
        (Var::Q, int(1)),
        (Var::P, int(1)),
        (Var::S, var(Var::Q)),
    ];
    JFraction::new(substituted(t.b, sub.clone()), substituted(t.ac, sub))
}

fn specialize(jf: JFraction, x: LaurentPoly, y: LaurentPoly) -> JFraction {
    let sub = vec![(Var::X, x), (Var::Y, y)];
    JFraction::new(substituted(jf.b, sub.clone()), substituted(jf.ac, sub))
}

pub fn preset(name: &str) -> Result<Preset, Error> {
    let minus_inv_q = -&q_pow(-1);
    Ok(match name {
        "tangent-pq" => tangent(|k| &pq_bracket(k) * &pq_bracket(k + 1)),
        "secant-pq" => secant(|k| pq_bracket(k).pow(2)),
        "tangent-q" => tangent(|k| &q_bracket(k) * &q_bracket(k + 1)),
        "secant-q" => secant(|k| q_bracket(k).pow(2)),
        "tangent-qstar" => {
            tangent(|k| &(&q_pow(2 * k as i32 - 1) * &q_bracket(k)) * &q_bracket(k + 1))
        }
        "secant-qstar" => secant(|k| &q_pow(2 * k as i32 - 2) * &q_bracket(k).pow(2)),
        "thm4.1" => Preset::J(thm41()),
        "cf-A" => Preset::J(cf_a()),
        "cf-SZ" => Preset::J(cf_sz()),
        "jv1" => Preset::J(specialize(cf_a(), int(-1), int(1))),
        "jv2" => Preset::J(specialize(cf_a(), minus_inv_q, int(0))),
        "sz1" => Preset::J(specialize(cf_sz(), minus_inv_q, int(1))),
        "sz2" => Preset::J(specialize(cf_sz(), int(-1), int(0))),
        other => return Err(Error::UnknownName(format!("preset `{other}`"))),
    })
}

/// The four signed specializations of `cf-A` and `cf-SZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `cf-A` at `x = -1, y = 1`.
    Jv1,
    /// `cf-A` at `x = -1/q, y = 0`.
    Jv2,
    /// `cf-SZ` at `x = -1/q, y = 1`.
    Sz1,
    /// `cf-SZ` at `x = -1, y = 0`.
    Sz2,
}

impl Specialization {
    pub const ALL: [Specialization; 4] = [
        Specialization::Jv1,
        Specialization::Jv2,
        Specialization::Sz1,
        Specialization::Sz2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Specialization::Jv1 => "jv1",
            Specialization::Jv2 => "jv2",
            Specialization::Sz1 => "sz1",
            Specialization::Sz2 => "sz2",
        }
    }

    pub fn jfraction(self) -> JFraction {
        match preset(self.name()) {
            Ok(Preset::J(j)) => j,
            _ => unreachable!("specializations are J-fraction presets"),
        }
    }

    /// The S-fraction whose contractions give the specialized J-fraction.
    pub fn sfraction(self) -> SFraction {
        match self {
            Specialization::Jv1 => SFraction::new(Arc::new(|k| {
                let i = k.div_ceil(2) as u32;
                if k % 2 == 1 {
                    -&q_bracket(i)
                } else {
                    q_bracket(i)
                }
            })),
            Specialization::Jv2 => {
                SFraction::new(Arc::new(|k| -&(&q_bracket(k as u32).pow(2) * &q_pow(-1))))
                    .in_power(2)
            }
            Specialization::Sz1 => SFraction::new(Arc::new(|k| {
                let i = k.div_ceil(2) as u32;
                let c = &q_pow(i as i32 - 1) * &q_bracket(i);
                if k % 2 == 1 {
                    c
                } else {
                    -&c
                }
            })),
            Specialization::Sz2 => SFraction::new(Arc::new(|k| {
                -&(&q_pow(2 * k as i32 - 1) * &q_bracket(k as u32).pow(2))
            }))
            .in_power(2),
        }
    }

    /// The signed Euler-number series the specialization equals:
    /// `1 + Σ (-1)^{n+1} E_{2n+1}(q) t^{2n+1}`, `Σ (-1/q)^n E_{2n}(q) t^{2n}`,
    /// `1 + Σ (-1)^n E*_{2n+1}(q) t^{2n+1}`, `Σ (-q)^n E*_{2n}(q) t^{2n}`.
    pub fn target(self, order: usize) -> Result<TruncSeries<LaurentPoly>, Error> {
        let (source, constant) = match self {
            Specialization::Jv1 => ("tangent-q", true),
            Specialization::Jv2 => ("secant-q", false),
            Specialization::Sz1 => ("tangent-qstar", true),
            Specialization::Sz2 => ("secant-qstar", false),
        };
        let series = preset(source)?.expand(order)?;
        let mut coeffs = Vec::with_capacity(order + 1);
        for (k, c) in series.coeffs().iter().enumerate() {
            let n = (k / 2) as i32;
            let sign = match self {
                Specialization::Jv1 => int(if n % 2 == 0 { -1 } else { 1 }),
                Specialization::Sz1 => int(if n % 2 == 0 { 1 } else { -1 }),
                Specialization::Jv2 => (-&q_pow(-1)).pow(n as u32),
                Specialization::Sz2 => (-&var(Var::Q)).pow(n as u32),
            };
            coeffs.push(c * &sign);
        }
        if constant {
            coeffs[0] = &coeffs[0] + &int(1);
        }
        Ok(TruncSeries::from_coeffs(coeffs, order))
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Specialization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Specialization::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::UnknownName(format!("specialization `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::{contract, Variant};

    fn series(name: &str, order: usize) -> String {
        preset(name).unwrap().expand(order).unwrap().to_string()
    }

    #[test]
    fn printed_expansions() {
        assert_eq!(series("secant-pq", 4), "1 + t^2 + (p^2+2*p*q+q^2+1)*t^4");
        assert_eq!(
            series("tangent-pq", 5),
            "t + (p+q)*t^3 + (p^4+3*p^3*q+4*p^2*q^2+p^2+3*p*q^3+2*p*q+q^4+q^2)*t^5"
        );
        assert_eq!(series("secant-qstar", 4), "1 + t^2 + (q^4+2*q^3+q^2+1)*t^4");
    }

    #[test]
    fn integer_euler_numbers() {
        let tan = preset("tangent-pq").unwrap().expand(7).unwrap();
        let sec = preset("secant-pq").unwrap().expand(6).unwrap();
        let tan: Vec<i64> = tan
            .coeffs()
            .iter()
            .map(|c| c.eval_ones().try_into().unwrap())
            .collect();
        let sec: Vec<i64> = sec
            .coeffs()
            .iter()
            .map(|c| c.eval_ones().try_into().unwrap())
            .collect();
        assert_eq!(tan, vec![0, 1, 0, 2, 0, 16, 0, 272]);
        assert_eq!(sec, vec![1, 0, 1, 0, 5, 0, 61]);
    }

    #[test]
    fn thm41_low_orders() {
        let got = preset("thm4.1").unwrap().expand(2).unwrap();
        assert_eq!(got.to_string(), "1 + x*y*t + (x^2*y^2+x*s)*t^2");
        let counts: Vec<i64> = preset("thm4.1")
            .unwrap()
            .expand(5)
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| c.eval_ones().try_into().unwrap())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 24, 120]);
    }

    #[test]
    fn specialized_levels() {
        // jv1: b_h = -q^h, ac_h = -[h+1]^2
        let j = Specialization::Jv1.jfraction();
        for h in 0..4u32 {
            assert_eq!((j.b)(h as usize), -&q_pow(h as i32));
            assert_eq!((j.ac)(h as usize), -&q_bracket(h + 1).pow(2));
        }
        // sz1: b_h = q^{2h} + q^{2h-1} - q^{h-1}
        let j = Specialization::Sz1.jfraction();
        for h in 0..4i32 {
            let want = &(&q_pow(2 * h) + &q_pow(2 * h - 1)) - &q_pow(h - 1);
            assert_eq!((j.b)(h as usize), want);
        }
        assert_eq!((Specialization::Jv2.jfraction().b)(2), LaurentPoly::zero());
        assert_eq!((Specialization::Sz2.jfraction().b)(3), LaurentPoly::zero());
    }

    #[test]
    fn specializations_reach_their_targets() {
        for sp in Specialization::ALL {
            let target = sp.target(8).unwrap();
            assert_eq!(sp.jfraction().expand(8).unwrap(), target, "{sp} J");
            let sf = sp.sfraction();
            assert_eq!(sf.expand(8).unwrap(), target, "{sp} S");
            for v in [Variant::Even, Variant::Odd] {
                assert_eq!(contract(&sf, v).expand(8).unwrap(), target, "{sp} {v:?}");
            }
        }
    }

    #[test]
    fn unknown_preset() {
        assert!(matches!(preset("nope"), Err(Error::UnknownName(_))));
        for name in PRESET_NAMES {
            assert!(preset(name).is_ok());
        }
    }
}
