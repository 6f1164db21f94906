//! From circuits to projector instances to graphs, and the exact deciders
//! used to check the whole chain on small cases.

pub mod circuit;
pub mod clock;
pub mod decide;
pub mod error;
pub mod oracle;
pub mod reduce;
pub mod sparsify;

pub use circuit::{Circuit, Gate};
pub use clock::{clock_projectors, sparse_projectors, ClockOptions, ClockPairs, ProjectorTerm, SatInstance};
pub use decide::{decide_homology, Decision, Mode};
pub use error::{ReductionError, Result};
pub use oracle::kernel_oracle;
pub use reduce::{reduce_to_gadget, reduce_to_graph, ReduceOptions, Reduced};
pub use sparsify::{nearest_neighbor, sparsify, Sparsified};
