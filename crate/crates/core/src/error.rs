use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not invertible: constant term {0} is not a unit")]
    NotInvertible(String),
    #[error("non-invertible substitution: {0}")]
    NonInvertibleSubstitution(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("enumeration too large: {what} at size {size} exceeds cap {cap}")]
    EnumerationTooLarge {
        what: String,
        size: usize,
        cap: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown {0}")]
    UnknownName(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
