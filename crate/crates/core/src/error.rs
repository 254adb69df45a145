use thiserror::Error;

use crate::graph::{ValidationReport, VertexId};

pub type Result<T, E = FigError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FigError {
    #[error("invalid vertex name {0:?}")]
    InvalidVertexName(String),
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("{what}: size {actual} exceeds the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("vertex {0} appears in both graphs")]
    VertexNameClash(VertexId),
    #[error("graph is not a strong fuzzy incidence graph")]
    NotStrong,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("graph is not a complete fuzzy incidence graph")]
    NotComplete,
    #[error("no instance of the requested class after {attempts} attempts")]
    GenerationExhausted { attempts: usize },
    #[error("invalid generator request: {0}")]
    InvalidSpec(String),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("not a fuzzy incidence graph:\n{0}")]
    Invalid(ValidationReport),
}
