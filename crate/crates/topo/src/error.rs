use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TopoError {
    #[error("dimension {dim} outside the materialized range 0..={top}")]
    Domain { dim: isize, top: isize },
    #[error("chain is not a cycle")]
    NotCycle,
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("simplex {0:?} is not a face of the complex")]
    NotAFace(Vec<u32>),
}

pub type Result<T> = std::result::Result<T, TopoError>;
