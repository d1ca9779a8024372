//! Exact enumeration, continued fractions and bijections around the
//! (p,q)-analogues of tangent and secant numbers.
//!
//! Every identity is checked by comparing two independently computed exact
//! values: brute-force enumeration over permutations or lattice paths on
//! one side, and continued-fraction or closed-form series expansion on the
//! other.

pub mod algebra;
pub mod contfrac;
pub mod error;
pub mod harness;
pub mod lattice;
pub mod maps;
pub mod permstat;
pub mod qeuler;

pub use error::{Error, Result};
