use thiserror::Error;

use crate::chromatic::EngineChoice;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("edges ({first_u}, {first_v}) and ({second_u}, {second_v}) share weight {weight}; thresholds must be pairwise distinct")]
    DuplicateWeight {
        weight: String,
        first_u: usize,
        first_v: usize,
        second_u: usize,
        second_v: usize,
    },

    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),

    #[error("not a chromatic polynomial: {0}")]
    NotChromatic(String),

    #[error("negative coefficient {coefficient} at degree {degree}")]
    NegativeCoefficient { degree: usize, coefficient: String },

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    #[error("{engine} engine cannot handle this graph: {reason}")]
    EnginePrecondition { engine: EngineChoice, reason: String },

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("feature padding too small: {0}")]
    Padding(String),

    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn precondition(engine: EngineChoice, reason: impl Into<String>) -> Self {
        Error::EnginePrecondition {
            engine,
            reason: reason.into(),
        }
    }
}
