use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("coordinate {index} outside [1, {len}]")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("resolution {d} outside [{min}, {max}]")]
    ResolutionOutOfRange { d: usize, min: usize, max: usize },

    #[error("invalid resolution chain: {0}")]
    InvalidChain(String),

    #[error("invalid vector: {0}")]
    InvalidVector(String),

    #[error("vector length {alpha} must exceed r_{d} = {r}")]
    TooShort { alpha: usize, d: usize, r: usize },

    #[error("{0}")]
    Domain(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("refused: {needed} evaluations needed, budget is {budget}{hint}")]
    Infeasible { needed: String, budget: u64, hint: String },
}

pub type Result<T> = std::result::Result<T, Error>;
