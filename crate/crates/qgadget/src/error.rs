use thiserror::Error;

#[derive(Debug, Error)]
pub enum GadgetError {
    #[error(transparent)]
    Topo(#[from] topo::TopoError),
    #[error("qubit {0} is already attached")]
    QubitCollision(usize),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("no gadget realizes {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, GadgetError>;
