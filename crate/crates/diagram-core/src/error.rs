use exact_algebra::AlgebraError;
use thiserror::Error;

/// Errors raised while building or parsing diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown generator name {0:?}")]
    UnknownGenerator(String),
    #[error("wrong number of legs: expected {expected}, got {got}")]
    LegCount { expected: usize, got: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
