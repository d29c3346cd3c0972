use reduction_engine::EngineError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    /// A sample point violates a constraint of the ambient ring.
    #[error("sample point violates a constraint: {0}")]
    ConstraintViolated(String),
    /// The automorphism does not act on this module or diagram.
    #[error("{0}")]
    NotApplicable(String),
}
