use thiserror::Error;

/// Errors raised by set construction, admissibility checks and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {0} is outside the supported range 1..={max}", max = crate::index_sets::MAX_DIM)]
    UnsupportedDimension(usize),

    #[error("set is not lower: {0} has a missing predecessor")]
    NotLower(String),

    #[error("cardinality {found} exceeds the cap of {cap}")]
    CardinalityCap { found: usize, cap: usize },

    #[error("projection index {j} out of range 1..={dim}")]
    ProjectionOutOfRange { j: usize, dim: usize },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid weight or radius `{0}`: expected a positive decimal or fraction")]
    InvalidRational(String),

    #[error("coordinate {0} lies outside [-1, 1]")]
    Domain(String),

    #[error("no admissible lattice with n in [{lo}, {hi}]")]
    NotFound { lo: u64, hi: u64 },

    #[error("generator search exceeded zeta = {0} in dimension {1}")]
    ZetaCap(i64, usize),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
