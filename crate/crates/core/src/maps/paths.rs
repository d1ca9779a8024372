//! Permutations to lattice objects: alternating permutations to Dyck path
//! diagrammes, and all permutations to Laguerre histories.

use crate::error::Error;
use crate::lattice::{DyckDiagramme, LaguerreHistory, MotzkinPath, Step};
use crate::permstat::{cros_k, cyclic_type, toht_k, CyclicType, Family, Permutation};

fn steps_to_path(steps: Vec<Step>) -> MotzkinPath {
    MotzkinPath::new(steps).expect("bijection images are valid paths")
}

/// Falling alternating `σ` of length `2n+1` to a diagramme of length `2n`:
/// value `k` gives Up when `σ^{-1}(k)` is even, Down when odd, with
/// `ξ_k = toht_k σ`.
pub fn fv(sigma: &Permutation) -> Result<DyckDiagramme, Error> {
    if sigma.len().is_multiple_of(2) || !Family::A.contains(sigma) {
        return Err(Error::Precondition(format!(
            "{sigma} is not falling alternating of odd length"
        )));
    }
    Ok(fv_unchecked(sigma, false))
}

fn fv_unchecked(sigma: &Permutation, restricted: bool) -> DyckDiagramme {
    let inv = sigma.inverse();
    let len = sigma.len() - 1;
    let mut steps = Vec::with_capacity(len);
    let mut xi = Vec::with_capacity(len);
    for k in 1..=len {
        steps.push(if inv.at(k).is_multiple_of(2) {
            Step::Up
        } else {
            Step::Down
        });
        xi.push(toht_k(sigma, k));
    }
    DyckDiagramme {
        path: steps_to_path(steps),
        xi,
        restricted,
    }
}

/// Falling alternating `σ` of even length: append the letter `2n+1` and
/// apply [`fv`]. The image is a restricted diagramme.
pub fn fv_star(sigma: &Permutation) -> Result<DyckDiagramme, Error> {
    if sigma.len() % 2 == 1 || !Family::A.contains(sigma) {
        return Err(Error::Precondition(format!(
            "{sigma} is not falling alternating of even length"
        )));
    }
    let mut word = sigma.word().to_vec();
    word.push(sigma.len() + 1);
    Ok(fv_unchecked(&Permutation::new(word)?, true))
}

/// Laguerre history of `σ`, read off the cyclic type and crossing index of
/// each value.
pub fn fz(sigma: &Permutation) -> LaguerreHistory {
    let n = sigma.len();
    let mut steps = Vec::with_capacity(n);
    let mut xi = Vec::with_capacity(n);
    for k in 1..=n {
        let c = cros_k(sigma, k) as i64;
        let (step, x) = match cyclic_type(sigma, k) {
            CyclicType::Valley => (Step::Up, c),
            CyclicType::Fixed => (Step::Level, 0),
            CyclicType::DoubleAscent => (Step::Level, c),
            CyclicType::DoubleDescent => (Step::Level, -(c + 1)),
            CyclicType::Peak => (Step::Down, c),
        };
        steps.push(step);
        xi.push(x);
    }
    LaguerreHistory {
        path: steps_to_path(steps),
        xi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{LaurentPoly, Var};
    use crate::lattice::{enumerate, Kind, LatticeObject, WeightSpec};
    use crate::permstat::{basic_stats, family_iter, Weight};
    use std::collections::HashSet;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(fv(&perm("213")).unwrap().to_string(), "UD (0,0)");
        assert_eq!(fv(&perm("312")).unwrap().to_string(), "UD (0,1)");
        assert_eq!(fv(&perm("1")).unwrap().to_string(), " ()");
        assert_eq!(fv_star(&perm("21")).unwrap().to_string(), "UD (0,0)");
        assert!(fv(&perm("123")).is_err());
        assert!(fv(&perm("21")).is_err());
        assert!(fv_star(&perm("213")).is_err());
        assert_eq!(fz(&perm("21")).to_string(), "UD (0,0)");
        assert_eq!(fz(&perm("1234")).to_string(), "LLLL (0,0,0,0)");
    }

    #[test]
    fn fv_images_are_all_diagrammes() {
        let p = LaurentPoly::var(Var::P);
        let q = LaurentPoly::var(Var::Q);
        for n in 1..=3 {
            let spec = WeightSpec::diagramme(p.clone(), q.clone());
            let mut seen = HashSet::new();
            for sigma in family_iter(Family::A, 2 * n + 1) {
                let d = fv(&sigma).unwrap();
                let rec = basic_stats(&sigma);
                let w = Weight::new()
                    .var(Var::P, crate::permstat::Stat::Thot)
                    .var(Var::Q, crate::permstat::Stat::Toht);
                assert_eq!(
                    spec.object_weight(&LatticeObject::Diagramme(d.clone())),
                    w.monomial(&rec)
                );
                assert!(seen.insert(d));
            }
            let all: HashSet<_> = enumerate(Kind::Diagramme, 2 * n)
                .unwrap()
                .into_iter()
                .map(|o| match o {
                    LatticeObject::Diagramme(d) => d,
                    _ => unreachable!(),
                })
                .collect();
            assert_eq!(seen, all);
        }
    }

    #[test]
    fn fv_star_images_are_restricted() {
        let p = LaurentPoly::var(Var::P);
        let q = LaurentPoly::var(Var::Q);
        let spec = WeightSpec::restricted_diagramme(p, q);
        for n in 1..=3 {
            let mut seen = HashSet::new();
            for sigma in family_iter(Family::A, 2 * n) {
                let d = fv_star(&sigma).unwrap();
                let rec = basic_stats(&sigma);
                let w = Weight::new()
                    .var(Var::P, crate::permstat::Stat::Thto)
                    .var(Var::Q, crate::permstat::Stat::Toht);
                assert_eq!(
                    spec.object_weight(&LatticeObject::Diagramme(d.clone())),
                    w.monomial(&rec)
                );
                assert!(seen.insert(d));
            }
            assert_eq!(
                seen.len(),
                enumerate(Kind::RestrictedDiagramme, 2 * n).unwrap().len()
            );
        }
    }

    #[test]
    fn fz_is_weight_preserving_bijection() {
        let spec = WeightSpec::laguerre_quintuple();
        for n in 0..=5 {
            let mut seen = HashSet::new();
            for sigma in family_iter(Family::S, n) {
                let h = fz(&sigma);
                assert!(LaguerreHistory::new(h.path.clone(), h.xi.clone()).is_ok());
                let rec = basic_stats(&sigma);
                assert_eq!(
                    spec.object_weight(&LatticeObject::History(h.clone())),
                    Weight::quintuple().monomial(&rec)
                );
                assert!(seen.insert(h));
            }
            assert_eq!(seen.len(), enumerate(Kind::Laguerre, n).unwrap().len());
        }
    }
}
