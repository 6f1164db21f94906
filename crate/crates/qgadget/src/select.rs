//! Pick a gadget lifting an arbitrary small integer state.

use crate::algebra::{flip_qubit, tensor_classical};
use crate::builders::{fill_cycle_general, gadget_classical, gadget_cnot_entangled, gadget_two_qubit_entangled, CnotVariant, Entangled};
use crate::error::{GadgetError, Result};
use crate::gadget::GadgetGraph;
use crate::pyth::{gadget_pythagorean, PythVariant};
use crate::state::IntState;
use crate::surface::FillPolicy;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Known {
    Entangled(Entangled),
    Cnot(CnotVariant),
    Pyth(PythVariant),
}

impl Known {
    fn target(self) -> IntState {
        let text = match self {
            Known::Entangled(Entangled::Even) => "|00> - |11>",
            Known::Entangled(Entangled::Odd) => "|01> - |10>",
            Known::Cnot(CnotVariant::First) => "|101> - |010>",
            Known::Cnot(CnotVariant::Second) => "|011> - |100>",
            Known::Pyth(v) => return v.target(),
        };
        IntState::parse(text).expect("valid literal")
    }

    fn build(self, id: &str, qubits: &[usize]) -> Result<GadgetGraph> {
        match self {
            Known::Entangled(e) => gadget_two_qubit_entangled(id, qubits, e),
            Known::Cnot(c) => gadget_cnot_entangled(id, qubits, c),
            Known::Pyth(p) => gadget_pythagorean(id, qubits, p),
        }
    }
}

const KNOWN: [Known; 6] = [
    Known::Entangled(Entangled::Even),
    Known::Entangled(Entangled::Odd),
    Known::Cnot(CnotVariant::Second),
    Known::Cnot(CnotVariant::First),
    Known::Pyth(PythVariant::First),
    Known::Pyth(PythVariant::Second),
];

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Slot order and flip mask taking `core` to ± a known target: slot j of
/// the known gadget sits on core slot `order[j]`, flipped where `mask` says.
fn match_known(core: &IntState, known: Known) -> Option<(Vec<usize>, Vec<bool>)> {
    let t = known.target().normalized();
    if t.n() != core.n() || t.len() != core.len() {
        return None;
    }
    let n = core.n();
    for order in permutations(n) {
        let permuted = core.permute(&order);
        for f in 0..1usize << n {
            let mask: Vec<bool> = (0..n).map(|j| f >> j & 1 == 1).collect();
            if permuted.flip(&mask).normalized() == t {
                return Some((order, mask));
            }
        }
    }
    None
}

/// A gadget whose single target is `state` placed on `qubits` (slot j of
/// the state on `qubits[j]`).
///
/// Qubits whose bit is the same in every term are split off and attached by
/// classical tensoring. The rest is matched to a hand-built gadget up to
/// qubit order, a/b relabelling and sign, or else filled as a surface.
pub fn gadget_for_state(id: &str, qubits: &[usize], state: &IntState) -> Result<GadgetGraph> {
    if qubits.len() != state.n() {
        return Err(GadgetError::InvalidState(format!("{} qubits for the {}-qubit state {state}", qubits.len(), state.n())));
    }
    if state.is_empty() {
        return Err(GadgetError::InvalidState("zero state".into()));
    }
    let state = state.normalized();
    let first: Vec<u8> = state.terms().next().expect("nonempty").0.to_vec();
    let fixed: Vec<usize> = (0..state.n()).filter(|&j| state.terms().all(|(b, _)| b[j] == first[j])).collect();
    if fixed.len() == state.n() {
        return gadget_classical(id, qubits, &first);
    }
    let free: Vec<usize> = (0..state.n()).filter(|j| !fixed.contains(j)).collect();
    let core = IntState::new(free.len(), state.terms().map(|(b, c)| (free.iter().map(|&j| b[j]).collect(), c)))?;
    let core_qubits: Vec<usize> = free.iter().map(|&j| qubits[j]).collect();

    let mut g = None;
    for known in KNOWN {
        if let Some((order, mask)) = match_known(&core, known) {
            let on: Vec<usize> = order.iter().map(|&j| core_qubits[j]).collect();
            let mut h = known.build(id, &on)?;
            for (j, &f) in mask.iter().enumerate() {
                if f {
                    h = flip_qubit(&h, on[j])?;
                }
            }
            g = Some(h);
            break;
        }
    }
    let mut g = match g {
        Some(g) => g,
        None if core.terms().all(|(_, c)| c.abs() == 1) => {
            fill_cycle_general(id, &core_qubits, &core, FillPolicy::default()).map_err(|e| {
                GadgetError::Unsupported(format!("no gadget for {state}: {e}"))
            })?
        }
        None => return Err(GadgetError::Unsupported(format!("no gadget for {state}"))),
    };
    for &j in &fixed {
        g = tensor_classical(&g, qubits[j], first[j])?;
    }
    debug_assert_eq!(g.targets.len(), 1);
    Ok(g)
}
