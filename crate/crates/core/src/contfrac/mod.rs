//! Continued fractions: expansion, contraction and the named presets.

mod fraction;
mod presets;

pub use fraction::{contract, Contraction, JFraction, LevelFn, SFraction, Variant};
pub use presets::{preset, Preset, Specialization, PRESET_NAMES};
