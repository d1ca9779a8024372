//! Permutations, their statistics, and the families the identities sum over.

mod family;
mod perm;
mod stats;
mod weight;

pub use family::{family_iter, family_iter_with_prefix, Family, FamilyIter};
pub use perm::Permutation;
pub use stats::{
    basic_stats, cros_k, cyclic_type, fmax_word, inv_k, inv_parts, nest_k, pattern_k, thot_k,
    thto_k, toht_k, CyclicType, Pattern, Stat, StatRecord,
};
pub use weight::{stat_polynomial, stat_polynomial_capped, SignedMonomial, Weight, DEFAULT_CAP};
