use thiserror::Error;

/// Errors reported by validation and by the bijection algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("malformed matching word at position {position}: {reason}")]
    MalformedWord { position: usize, reason: String },

    #[error("malformed up-down movie at step {step}: {reason}")]
    MalformedMovie { step: usize, reason: String },

    #[error("value {0} is already an entry of the tableau")]
    DuplicateEntry(usize),

    #[error("({0}, {1}) is not a removable corner")]
    NotACorner(usize, usize),

    #[error("tableau shapes differ: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),

    #[error("tableau is not standard: {0}")]
    NotStandard(String),

    #[error("unknown strand label {0}")]
    UnknownStrand(usize),

    #[error("step {step} out of range 0..={max}")]
    StepOutOfRange { step: usize, max: usize },

    #[error("diagram is empty")]
    EmptyDiagram,

    #[error("matching is empty")]
    EmptyMatching,

    #[error("selected times are not a strictly decreasing subsequence: {0}")]
    NotDecreasing(String),

    #[error("size limit exceeded: {what} = {got} is above the configured bound {limit}")]
    SizeLimit {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
