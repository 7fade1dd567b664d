use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("generators do not act transitively on {degree} points")]
    NotTransitive { degree: usize },

    #[error("move {0} is not admissible here")]
    InadmissibleMove(String),

    /// An internal invariant was violated. Reaching this is a bug.
    #[error("inconsistency: {0}")]
    Inconsistency(String),
}
