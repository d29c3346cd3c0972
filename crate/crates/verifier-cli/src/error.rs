use diagram_core::DiagramError;
use exact_algebra::AlgebraError;
use reduction_engine::EngineError;
use relation_generators::RelationError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
