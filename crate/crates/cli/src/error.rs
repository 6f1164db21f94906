use qgadget::GadgetError;
use reduction::ReductionError;
use serde_json::json;
use susy::SusyError;
use thiserror::Error;
use topo::TopoError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Topo(#[from] TopoError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Susy(#[from] SusyError),
}

pub type Result<T> = std::result::Result<T, CliError>;

fn topo_kind(e: &TopoError) -> &'static str {
    match e {
        TopoError::Resource(_) => "resource",
        TopoError::Parse(_) => "parse",
        _ => "invalid_input",
    }
}

impl CliError {
    /// Stable machine-readable category.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Topo(e) => topo_kind(e),
            CliError::Gadget(GadgetError::Topo(e)) => topo_kind(e),
            CliError::Gadget(GadgetError::Unsupported(_)) => "unsupported",
            CliError::Gadget(_) => "invalid_input",
            CliError::Reduction(e) => match e {
                ReductionError::Parse { .. } => "parse",
                ReductionError::Resource(_) => "resource",
                ReductionError::Topo(t) => topo_kind(t),
                ReductionError::Gadget(GadgetError::Unsupported(_)) => "unsupported",
                _ => "invalid_input",
            },
            CliError::Susy(SusyError::Resource { .. }) => "resource",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}
