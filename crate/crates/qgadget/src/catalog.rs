//! The shipped gadgets by name, for the command line and cross-checks.

use crate::builders::{gadget_classical, gadget_cnot_entangled, gadget_two_qubit_entangled, CnotVariant, Entangled};
use crate::error::{GadgetError, Result};
use crate::gadget::GadgetGraph;
use crate::pyth::{gadget_pythagorean, PythVariant};

pub const CATALOG: &[&str] = &[
    "classical-0",
    "classical-1",
    "classical-00",
    "classical-01",
    "classical-10",
    "classical-11",
    "classical-000",
    "entangled-even",
    "entangled-odd",
    "cnot-first",
    "cnot-second",
    "pyth-first",
    "pyth-second",
];

/// Build a catalogued gadget on qubits 0, 1, … with mediator prefix `g`.
pub fn build_named(name: &str) -> Result<GadgetGraph> {
    if let Some(bits) = name.strip_prefix("classical-") {
        let b: Vec<u8> = bits.bytes().map(|c| c.wrapping_sub(b'0')).collect();
        if !CATALOG.contains(&name) {
            return Err(GadgetError::Unsupported(format!("`{name}` is not catalogued")));
        }
        let qubits: Vec<usize> = (0..b.len()).collect();
        return gadget_classical("g", &qubits, &b);
    }
    match name {
        "entangled-even" => gadget_two_qubit_entangled("g", &[0, 1], Entangled::Even),
        "entangled-odd" => gadget_two_qubit_entangled("g", &[0, 1], Entangled::Odd),
        "cnot-first" => gadget_cnot_entangled("g", &[0, 1, 2], CnotVariant::First),
        "cnot-second" => gadget_cnot_entangled("g", &[0, 1, 2], CnotVariant::Second),
        "pyth-first" => gadget_pythagorean("g", &[0, 1, 2], PythVariant::First),
        "pyth-second" => gadget_pythagorean("g", &[0, 1, 2], PythVariant::Second),
        _ => Err(GadgetError::Unsupported(format!("`{name}` is not catalogued; try one of {}", CATALOG.join(", ")))),
    }
}
