//! Mediator gadgets that make chosen qubit cycles bound, and their
//! composition.

pub mod algebra;
pub mod builders;
pub mod catalog;
pub mod error;
pub mod gadget;
pub mod pyth;
pub mod register;
pub mod select;
pub mod state;
pub mod surface;
pub mod verify;

pub use algebra::{add_gadgets, add_gadgets_with, flip_qubit, tensor_classical, tensor_identity, GadgetSum, SparseGraph, Step4};
pub use builders::{fill_cycle_general, gadget_classical, gadget_cnot_entangled, gadget_two_qubit_entangled, CnotVariant, Entangled};
pub use error::{GadgetError, Result};
pub use gadget::GadgetGraph;
pub use pyth::{gadget_pythagorean, PythVariant};
pub use register::{QubitRegister, Corner};
pub use state::IntState;
pub use surface::{FillPolicy, Surface};
pub use verify::{bounds, gadget_homology, homologous, verify, verify_gadget, GadgetVerdict};
pub use select::gadget_for_state;
