use thiserror::Error;

use crate::support_graph::NodeRef;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("invalid bounds: {0}")]
    Bounds(String),

    #[error("no rhombus with right node {0}: corner {1} lies outside the extended graph")]
    AbsentRhombus(NodeRef, NodeRef),

    #[error("vertex cap of {cap} exceeded after discovering {discovered} vertices")]
    CapExceeded { cap: usize, discovered: usize },

    #[error("estimated crystal size {estimate} exceeds the vertex cap of {cap}")]
    EstimateExceedsCap { cap: usize, estimate: u128 },

    #[error("infeasible weight function: {0}")]
    Infeasible(String),

    #[error("invalid pattern: {0}")]
    Pattern(String),

    #[error("graph has {0} zero-indegree vertices, expected exactly one")]
    SourceCount(usize),

    #[error("{0}")]
    Structure(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("json error: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
