//! Bijections between permutations and lattice objects, the biword bijection,
//! and the two sign-reversing involutions.

mod csz;
mod invol;
mod paths;

pub use csz::{csz, csz_trace, Biword};
pub use invol::{invol_phi, invol_psi};
pub use paths::{fv, fv_star, fz};
