use thiserror::Error;

/// Errors raised by the library. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("equal keys at positions {first} and {second} (strict tie mode)")]
    Tie { first: usize, second: usize },

    #[error("key at position {position} is not a finite number")]
    NonFinite { position: usize },

    #[error("parent-distance table is not realizable at position {position}")]
    InvalidPd { position: usize },

    #[error("swap position {position} out of range for length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("pattern is empty")]
    EmptyPattern,

    #[error("automaton needs at least one pattern table")]
    EmptyPatternSet,

    #[error("size {n} exceeds the limit of {limit}")]
    SizeTooLarge { n: usize, limit: usize },

    #[error("malformed automaton: {0}")]
    MalformedAutomaton(String),

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
