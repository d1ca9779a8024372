//! The acceptance gate: one line per criterion, exact comparisons, and a
//! wall-clock budget for each.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use pqeuler::algebra::{LaurentPoly, Var};
use pqeuler::contfrac::{preset, Specialization};
use pqeuler::harness::check;
use pqeuler::maps::{csz, invol_phi, invol_psi};
use pqeuler::permstat::{family_iter, stat_polynomial, Family, Permutation, Weight};
use pqeuler::qeuler::{e_int, e_pq, parity_formula, q_parity_formula, Method};
use pqeuler::Error;

type Outcome = Result<(), String>;

/// `Σ c p^i q^j` from `(c, i, j)` triples.
fn pq(terms: &[(i64, i32, i32)]) -> LaurentPoly {
    LaurentPoly::from_terms(
        terms
            .iter()
            .map(|&(c, i, j)| ([0, 0, i, j, 0], BigInt::from(c))),
    )
}

fn q_poly(coeffs: &[i64]) -> LaurentPoly {
    let terms: Vec<(i64, i32, i32)> = coeffs
        .iter()
        .enumerate()
        .map(|(j, &c)| (c, 0, j as i32))
        .collect();
    pq(&terms)
}

fn passes(id: &str, param: usize) -> Outcome {
    let report = check(id, param).map_err(|e| e.to_string())?;
    match report.witness {
        None => Ok(()),
        Some(w) => Err(format!("{id}: {w}")),
    }
}

fn same<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn weight(s: &str) -> Weight {
    s.parse().expect("weight literal")
}

fn integer_euler_numbers() -> Outcome {
    let want: Vec<BigInt> = [1, 1, 1, 2, 5, 16, 61, 272, 1385]
        .map(BigInt::from)
        .to_vec();
    let by_cf: Vec<BigInt> = (0..=8).map(e_int).collect::<Result<_, _>>().map_err(err)?;
    same("continued fractions", by_cf, want.clone())?;
    let by_enum: Vec<BigInt> = (0..=8)
        .map(|n| e_pq(n, Method::Enumerate).map(|p| p.eval_ones()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    same("enumeration", by_enum, want)
}

fn pq_tangent_secant() -> Outcome {
    passes("thm2_1", 9)?;
    let tan = preset("tangent-pq").map_err(err)?.expand(5).map_err(err)?;
    let sec = preset("secant-pq").map_err(err)?.expand(4).map_err(err)?;
    same("t^3", tan.coeff(3).clone(), pq(&[(1, 1, 0), (1, 0, 1)]))?;
    same(
        "t^5",
        tan.coeff(5).clone(),
        pq(&[
            (1, 4, 0),
            (3, 3, 1),
            (4, 2, 2),
            (3, 1, 3),
            (1, 0, 4),
            (1, 2, 0),
            (2, 1, 1),
            (1, 0, 2),
        ]),
    )?;
    same(
        "t^4",
        sec.coeff(4).clone(),
        pq(&[(1, 2, 0), (2, 1, 1), (1, 0, 2), (1, 0, 0)]),
    )
}

fn quintuple_fraction() -> Outcome {
    passes("thm4_1", 8)
}

fn signed_q_analogues() -> Outcome {
    passes("foata_han", 8)?;
    passes("jv", 8)?;
    passes("shin_zeng", 8)?;
    let left5 = stat_polynomial(Family::S, 5, &weight("(-1)^wex*q^cros")).map_err(err)?;
    same(
        "jv at n=5",
        left5,
        &LaurentPoly::from_int(-1) * &q_poly(&[2, 5, 5, 3, 1]),
    )?;
    let left4 = stat_polynomial(Family::S, 4, &weight("(-1)^wex*q^cros")).map_err(err)?;
    same("jv at n=4", left4, LaurentPoly::zero())
}

fn csz_bijection() -> Outcome {
    passes("thm3_2", 8)?;
    let sigma: Permutation = "412796583".parse().map_err(err)?;
    same(
        "worked example",
        csz(&sigma).to_string(),
        "249385716".to_string(),
    )
}

fn contraction_pipeline() -> Outcome {
    passes("contra", 12)?;
    // The specialized fractions against enumerated alternating sums.
    let order = 10;
    for spec in Specialization::ALL {
        let series = spec.jfraction().expand(order).map_err(err)?;
        for n in 1..=order {
            let odd = n % 2 == 1;
            let w = match (spec, odd) {
                (Specialization::Jv1 | Specialization::Jv2, _) => "q^toht",
                (_, true) => "q^toht*(q^2)^thot",
                (_, false) => "q^toht*(q^2)^thto",
            };
            let e = stat_polynomial(Family::A, n, &weight(w)).map_err(err)?;
            let k = (n / 2) as u32;
            let scale = match (spec, odd) {
                (Specialization::Jv1, true) => {
                    LaurentPoly::from_int(if k.is_multiple_of(2) { -1 } else { 1 })
                }
                (Specialization::Sz1, true) => {
                    LaurentPoly::from_int(if k.is_multiple_of(2) { 1 } else { -1 })
                }
                (Specialization::Jv2, false) => (-&LaurentPoly::var_pow(Var::Q, -1)).pow(k),
                (Specialization::Sz2, false) => (-&LaurentPoly::var(Var::Q)).pow(k),
                _ => LaurentPoly::zero(),
            };
            same(
                &format!("{} at t^{n}", spec.name()),
                series.coeff(n).clone(),
                &scale * &e,
            )?;
        }
    }
    Ok(())
}

fn involutions() -> Outcome {
    passes("sz_linear", 8)?;
    let phi_fixed: Vec<String> = family_iter(Family::S, 7)
        .filter(|s| invol_phi(s) == *s)
        .map(|s| s.to_string())
        .collect();
    let a7: Vec<String> = family_iter(Family::Aprime, 7)
        .map(|s| s.to_string())
        .collect();
    same("phi fixed points on S_7", phi_fixed.len(), 272)?;
    same("phi fixed set", phi_fixed, a7)?;
    let mut psi_fixed = Vec::new();
    for s in family_iter(Family::Dstar, 8) {
        if invol_psi(&s).map_err(err)? == s {
            psi_fixed.push(s.to_string());
        }
    }
    let a8: Vec<String> = family_iter(Family::Adoubleprime, 8)
        .map(|s| s.to_string())
        .collect();
    same("psi fixed points on D*_8", psi_fixed.len(), 1385)?;
    same("psi fixed set", psi_fixed, a8)
}

fn parity_independent() -> Outcome {
    passes("sec7", 12)?;
    same(
        "E_6 by the parity sum",
        parity_formula(6).map_err(err)?,
        BigInt::from(61),
    )?;
    same(
        "E_4(q)",
        q_parity_formula(4).map_err(err)?,
        q_poly(&[2, 2, 1]),
    )
}

fn exponential_generating_function() -> Outcome {
    passes("egf", 7)?;
    passes("euler_roselle", 7)
}

fn oracle_coherence() -> Outcome {
    passes("oracle", 10)
}

struct Criterion {
    number: usize,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            number: 1,
            name: "integer Euler numbers",
            budget: secs(5),
            run: integer_euler_numbers,
        },
        Criterion {
            number: 2,
            name: "(p,q)-tangent and secant fractions",
            budget: secs(30),
            run: pq_tangent_secant,
        },
        Criterion {
            number: 3,
            name: "quintuple J-fraction",
            budget: secs(120),
            run: quintuple_fraction,
        },
        Criterion {
            number: 4,
            name: "signed q-analogues",
            budget: secs(120),
            run: signed_q_analogues,
        },
        Criterion {
            number: 5,
            name: "csz bijection",
            budget: secs(120),
            run: csz_bijection,
        },
        Criterion {
            number: 6,
            name: "contraction pipeline",
            budget: secs(60),
            run: contraction_pipeline,
        },
        Criterion {
            number: 7,
            name: "sign-reversing involutions",
            budget: secs(60),
            run: involutions,
        },
        Criterion {
            number: 8,
            name: "parity-independent formulas",
            budget: secs(60),
            run: parity_independent,
        },
        Criterion {
            number: 9,
            name: "exponential generating function",
            budget: secs(30),
            run: exponential_generating_function,
        },
        Criterion {
            number: 10,
            name: "oracle coherence",
            budget: secs(60),
            run: oracle_coherence,
        },
    ];
    let mut failures = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= c.budget) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over budget of {:?})", c.budget),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        println!(
            "criterion {:>2} {:<36} {} in {:.2}s",
            c.number,
            c.name,
            verdict,
            elapsed.as_secs_f64()
        );
        if verdict != "PASS" {
            failures.push(c.number);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
