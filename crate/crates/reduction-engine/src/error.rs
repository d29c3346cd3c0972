use diagram_core::DiagramError;
use exact_algebra::AlgebraError;
use thiserror::Error;

/// Errors raised by the rewriting pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    /// A term could not be matched to any essential generator.
    #[error("no essential generator matches {0}")]
    UnmatchedTerm(String),
    /// Exponent reduction by the three-term rule needs a cyclic module.
    #[error("exponent reduction by the annihilator needs a cyclic module")]
    NonCyclicMode,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
