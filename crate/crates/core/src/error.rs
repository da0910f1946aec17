use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid density operator: {0}")]
    InvalidState(String),

    #[error("invalid channel: {0}")]
    InvalidChannel(String),

    #[error("invalid ensemble: {0}")]
    InvalidEnsemble(String),

    /// The support condition of a divergence is violated, so its value is +inf.
    #[error("divergence is infinite (support condition violated)")]
    InfiniteDivergence,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("code too large for exhaustive enumeration: k = {k} exceeds {limit}")]
    CodeTooLarge { k: usize, limit: usize },

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("length mismatch: expected {expected} bits, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("key pool underflow: needed {needed} bits, {available} available")]
    PoolUnderflow { needed: usize, available: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
