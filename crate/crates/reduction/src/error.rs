use qgadget::GadgetError;
use thiserror::Error;
use topo::TopoError;

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Topo(#[from] TopoError),
}

pub type Result<T> = std::result::Result<T, ReductionError>;
