//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by validation and by the classification operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol `{0}`: {1}")]
    InvalidSymbol(String, String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parameter is not discrete: {0}")]
    NonDiscreteParameter(String),

    #[error("symbol `{0}` is not self-dual")]
    NotSelfDual(String),

    #[error("epsilon character is invalid: {0}")]
    InvalidEpsilon(String),

    #[error("segments have mixed monotonicity; transpose one side and use the generalized predicate")]
    MixedMonotonicity,

    #[error("invalid segment: {0}")]
    InvalidSegment(String),

    #[error("Jacquet exponent must be positive")]
    NonPositiveX,

    #[error("Jacquet module is not determined by the block calculus: {0}")]
    NotComputable(String),

    #[error("triple is not admissible: {0}")]
    NotAdmissible(String),

    #[error("delta data is inconsistent: {0}")]
    InconsistentDelta(String),

    #[error("sign vector does not lie in the component group: {0}")]
    SignVectorNotInComponentGroup(String),

    #[error("alphabet is not closed under the required twist: {0}")]
    AlphabetNotClosedUnderTwist(String),

    #[error("epsilon character and sign vector live on different block sets")]
    BlockSetMismatch,

    #[error("invalid representation symbol: {0}")]
    InvalidRepSymbol(String),

    #[error("I/O document error: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
