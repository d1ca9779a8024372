//! Named, runnable checks of every identity, with exact comparison and a
//! first counterexample on failure.

mod checks;

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::error::Error;

/// Environment variable read by [`init_thread_pool`].
pub const THREADS_ENV: &str = "PQEULER_THREADS";

/// Default size for checks that sum over permutations.
pub const DEFAULT_N: usize = 7;
/// Default truncation order for series checks.
pub const DEFAULT_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamKind {
    /// Every size `1..=n` is checked.
    N,
    /// Series compared through `t^order`.
    Order,
}

impl ParamKind {
    pub fn name(self) -> &'static str {
        match self {
            ParamKind::N => "n",
            ParamKind::Order => "order",
        }
    }
}

/// `Ok(None)` on pass, `Ok(Some(witness))` on the first mismatch.
type CheckFn = fn(usize) -> Result<Option<String>, Error>;

pub struct CheckSpec {
    pub id: &'static str,
    pub kind: ParamKind,
    pub max: usize,
    pub summary: &'static str,
    run: CheckFn,
}

impl CheckSpec {
    pub fn default_param(&self) -> usize {
        match self.kind {
            ParamKind::N => DEFAULT_N,
            ParamKind::Order => DEFAULT_ORDER,
        }
    }
}

const PERM_CAP: usize = crate::permstat::DEFAULT_CAP;

pub static CHECKS: &[CheckSpec] = &[
    CheckSpec {
        id: "euler_roselle",
        kind: ParamKind::N,
        max: PERM_CAP,
        summary: "signed excedance sums over S_n and D_n against ±E_n",
        run: checks::euler_roselle,
    },
    CheckSpec {
        id: "foata_han",
        kind: ParamKind::N,
        max: PERM_CAP,
        summary: "(exc, maj) sums against inv over alternating permutations",
        run: checks::foata_han,
    },
    CheckSpec {
        id: "jv",
        kind: ParamKind::N,
        max: PERM_CAP,
        summary: "(wex, cros) and (exc, cros) sums against ±E_n(q)",
        run: checks::jv,
    },
    CheckSpec {
        id: "shin_zeng",
        kind: ParamKind::N,
        max: PERM_CAP,
        summary: "(exc, inv) sums against ±E*_n(q)",
        run: checks::shin_zeng,
    },
    CheckSpec {
        id: "thm2_1",
        kind: ParamKind::Order,
        max: crate::qeuler::ENUMERATION_CAP,
        summary: "(p,q)-tangent and secant fractions against enumerated E_n(p,q)",
        run: checks::thm2_1,
    },
    CheckSpec {
        id: "cor2_2",
        kind: ParamKind::Order,
        max: PERM_CAP,
        summary: "q-tangent and secant fractions against enumerated E_n(q)",
        run: checks::cor2_2,
    },
    CheckSpec {
        id: "cor2_3",
        kind: ParamKind::Order,
        max: PERM_CAP,
        summary: "starred q-tangent and secant fractions against enumerated E*_n(q)",
        run: checks::cor2_3,
    },
    CheckSpec {
        id: "thm3_2",
        kind: ParamKind::N,
        max: 9,
        summary: "csz carries (ndes, fmax, 31-2, 2-31, mad) to (wex, fix, cros, nest, inv) injectively",
        run: checks::thm3_2,
    },
    CheckSpec {
        id: "thm4_1",
        kind: ParamKind::Order,
        max: 9,
        summary: "quintuple J-fraction against the enumerated quintuple distribution",
        run: checks::thm4_1,
    },
    CheckSpec {
        id: "cor_cf_A",
        kind: ParamKind::Order,
        max: 9,
        summary: "(wex, fix, cros) J-fraction against enumeration",
        run: checks::cor_cf_a,
    },
    CheckSpec {
        id: "cor_cf_SZ",
        kind: ParamKind::Order,
        max: 9,
        summary: "(exc, fix, inv) J-fraction against enumeration",
        run: checks::cor_cf_sz,
    },
    CheckSpec {
        id: "contra",
        kind: ParamKind::Order,
        max: 24,
        summary: "even and odd contractions on the signed specializations and random S-fractions",
        run: checks::contra,
    },
    CheckSpec {
        id: "sz_linear",
        kind: ParamKind::N,
        max: 9,
        summary: "(ndes, 31-2) sums over S_n and coderangements, with the involution certificates",
        run: checks::sz_linear,
    },
    CheckSpec {
        id: "mad_remark",
        kind: ParamKind::N,
        max: PERM_CAP,
        summary: "(ndes, mad) sums over coderangements against alternating permutations and (exc, inv) over D_n",
        run: checks::mad_remark,
    },
    CheckSpec {
        id: "sec7",
        kind: ParamKind::Order,
        max: crate::qeuler::CLOSED_FORM_CAP,
        summary: "rational series and parity-independent sums for E_n and E_n(q)",
        run: checks::sec7,
    },
    CheckSpec {
        id: "equidist_remark",
        kind: ParamKind::N,
        max: 9,
        summary: "(suc, ndes), (adj, des+1), (fmax, ndes), (fix, wex) share one distribution",
        run: checks::equidist_remark,
    },
    CheckSpec {
        id: "egf",
        kind: ParamKind::N,
        max: 9,
        summary: "(exc, fix) exponential generating function against enumeration",
        run: checks::egf,
    },
    CheckSpec {
        id: "oracle",
        kind: ParamKind::N,
        max: 10,
        summary: "path enumeration against the height transfer, and bijection image counts",
        run: checks::oracle,
    },
];

pub fn find(id: &str) -> Result<&'static CheckSpec, Error> {
    CHECKS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownName(format!("check `{id}`")))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub param_kind: ParamKind,
    pub param: usize,
    pub passed: bool,
    pub elapsed_ms: f64,
    /// The first mismatch, present only on failure.
    pub witness: Option<String>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}={} {} ({:.1} ms)",
            self.id,
            self.param_kind.name(),
            self.param,
            if self.passed { "pass" } else { "FAIL" },
            self.elapsed_ms
        )?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        Ok(())
    }
}

/// Runs one check; errors are for unknown ids and parameters above the cap.
pub fn check(id: &str, param: usize) -> Result<CheckReport, Error> {
    let spec = find(id)?;
    if param > spec.max {
        return Err(Error::EnumerationTooLarge {
            what: format!("check {id}"),
            size: param,
            cap: spec.max,
        });
    }
    let start = Instant::now();
    let witness = (spec.run)(param)?;
    Ok(CheckReport {
        id: spec.id.to_string(),
        param_kind: spec.kind,
        param,
        passed: witness.is_none(),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        witness,
    })
}

/// Every registered check at its default parameter, in registry order.
pub fn check_all() -> Result<Vec<CheckReport>, Error> {
    CHECKS
        .iter()
        .map(|c| check(c.id, c.default_param()))
        .collect()
}

/// Sizes the global rayon pool from [`THREADS_ENV`], if set. Returns the
/// worker count in effect.
pub fn init_thread_pool() -> Result<usize, Error> {
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let n: usize = raw
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::InvalidArgument(format!("{THREADS_ENV}={raw}")))?;
        // A pool that already exists keeps its size.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    Ok(rayon::current_num_threads())
}
