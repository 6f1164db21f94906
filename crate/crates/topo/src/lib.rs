//! Exact homology of clique and independence complexes.

pub mod bitset;
pub mod chain;
pub mod complex;
pub mod error;
pub mod exec;
pub mod graph;
pub mod homology;
pub mod laplacian;
pub mod limits;
pub mod linalg;

pub use chain::{Chain, Simplex};
pub use complex::{clique_complex, independence_complex, FaceTable, SimplicialComplex};
pub use error::{Result, TopoError};
pub use exec::Exec;
pub use graph::Graph;
pub use homology::{betti, boundary_matrix, homology_report, rank_exact, solve_boundary_membership, BoundaryImage, HomologyReport};
pub use limits::Limits;
