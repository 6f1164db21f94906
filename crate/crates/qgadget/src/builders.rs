//! Hardcoded gadgets for small projectors and the general surface filler.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{GadgetError, Result};
use crate::gadget::{ComplexSpec, GadgetGraph};
use crate::register::{mediator_name, state_to_cycle, triangle_graph_on, vertex_name, Corner};
use crate::state::IntState;
use crate::surface::{FillPolicy, Surface};

/// Re-express a state given in `local` slot order over the sorted qubits.
pub fn to_sorted_slots(local: &[usize], s: &IntState) -> IntState {
    let mut sorted = local.to_vec();
    sorted.sort_unstable();
    let order: Vec<usize> = sorted.iter().map(|q| local.iter().position(|p| p == q).expect("same set")).collect();
    s.permute(&order)
}

fn check_qubits(qubits: &[usize], k: usize) -> Result<()> {
    if qubits.len() != k {
        return Err(GadgetError::Construction(format!("expected {k} qubits, got {}", qubits.len())));
    }
    let set: BTreeSet<_> = qubits.iter().collect();
    if set.len() != k {
        return Err(GadgetError::Construction(format!("repeated qubit in {qubits:?}")));
    }
    Ok(())
}

/// One mediator lifting a single bitstring: in the graph it touches, on each
/// qubit, the corner not on that bit's cycle.
pub fn gadget_classical(id: &str, qubits: &[usize], bits: &[u8]) -> Result<GadgetGraph> {
    if bits.is_empty() || bits.len() > 4 {
        return Err(GadgetError::Construction(format!("classical gadget on {} qubits", bits.len())));
    }
    check_qubits(qubits, bits.len())?;
    let mut g = GadgetGraph::empty(qubits);
    let m = mediator_name(id, 0);
    g.add_mediator(m.clone(), qubits);
    for (&q, &b) in qubits.iter().zip(bits) {
        g.add_edge(m.clone(), vertex_name(q, Corner::off_cycle(b)));
    }
    g.targets.push(to_sorted_slots(qubits, &IntState::basis(bits)));
    g.log(format!("classical {id} on {qubits:?} bits {}", crate::state::bits_to_string(bits)));
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Entangled {
    /// |00⟩ − |11⟩
    Even,
    /// |01⟩ − |10⟩
    Odd,
}

/// Three mediators lifting |00⟩−|11⟩ (or |01⟩−|10⟩ by exchanging a and b
/// on the second qubit). Mediators are joined to one another.
pub fn gadget_two_qubit_entangled(id: &str, qubits: &[usize], which: Entangled) -> Result<GadgetGraph> {
    check_qubits(qubits, 2)?;
    let swap = |slot: usize, c: Corner| match (which, slot, c) {
        (Entangled::Odd, 1, Corner::A) => Corner::B,
        (Entangled::Odd, 1, Corner::B) => Corner::A,
        _ => c,
    };
    // graph neighbours of each mediator among the qubit vertices
    let adjacency: [&[(usize, Corner)]; 3] = [
        &[(1, Corner::X), (0, Corner::A), (0, Corner::B)],
        &[(0, Corner::X), (0, Corner::A), (1, Corner::A)],
        &[(0, Corner::X), (0, Corner::B), (1, Corner::B)],
    ];
    let mut g = GadgetGraph::empty(qubits);
    for (i, adj) in adjacency.iter().enumerate() {
        let m = mediator_name(id, i);
        g.add_mediator(m.clone(), qubits);
        for &(slot, c) in adj.iter() {
            g.add_edge(m.clone(), vertex_name(qubits[slot], swap(slot, c)));
        }
    }
    let t = match which {
        Entangled::Even => IntState::parse("|00> - |11>")?,
        Entangled::Odd => IntState::parse("|01> - |10>")?,
    };
    g.targets.push(to_sorted_slots(qubits, &t));
    g.log(format!("entangled {id} on {qubits:?} {which:?}"));
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CnotVariant {
    /// |101⟩ − |010⟩
    First,
    /// |011⟩ − |100⟩: the first two triangles exchanged
    Second,
}

type Face = [(usize, Corner); 3];

/// Faces covered by each of the five mediators, qubit slots 0-based.
fn cnot_faces() -> Vec<Vec<Face>> {
    use Corner::{A, B, X};
    vec![
        vec![
            [(0, B), (1, A), (2, X)],
            [(0, B), (1, X), (2, X)],
            [(0, A), (1, B), (2, X)],
            [(0, A), (1, X), (2, X)],
        ],
        vec![
            [(0, X), (1, A), (2, B)],
            [(0, X), (1, A), (2, X)],
            [(0, X), (1, B), (2, X)],
            [(0, X), (1, B), (2, A)],
        ],
        vec![
            [(0, X), (1, X), (2, B)],
            [(0, B), (1, X), (2, B)],
            [(0, X), (1, X), (2, A)],
            [(0, A), (1, X), (2, A)],
        ],
        vec![[(0, B), (1, A), (2, B)]],
        vec![[(0, A), (1, B), (2, A)]],
    ]
}

/// Five mediators coning off the 14 faces of the three-qubit cycle
/// |101⟩−|010⟩; all mediators are joined to one another in the complex.
pub fn gadget_cnot_entangled(id: &str, qubits: &[usize], which: CnotVariant) -> Result<GadgetGraph> {
    check_qubits(qubits, 3)?;
    let perm = |slot: usize| match (which, slot) {
        (CnotVariant::Second, 0) => 1,
        (CnotVariant::Second, 1) => 0,
        _ => slot,
    };
    let links: Vec<BTreeSet<(usize, Corner)>> = cnot_faces()
        .iter()
        .map(|faces| faces.iter().flatten().map(|&(s, c)| (perm(s), c)).collect())
        .collect();
    let names: Vec<String> = (0..links.len()).map(|i| mediator_name(id, i)).collect();
    let joined = (0..links.len()).flat_map(|i| (i + 1..links.len()).map(move |j| (i, j))).collect();
    let mut g = ComplexSpec { id, qubits, links, joined }.build(&names);
    let t = match which {
        CnotVariant::First => IntState::parse("|101> - |010>")?,
        CnotVariant::Second => IntState::parse("|011> - |100>")?,
    };
    g.targets.push(to_sorted_slots(qubits, &t));
    g.log(format!("cnot {id} on {qubits:?} {which:?}"));
    Ok(g)
}

/// Fill the surface carried by a ±1 cycle: one mediator per face, an apex
/// joined to all of them, and mediator–mediator joins chosen by `policy`.
pub fn fill_cycle_general(id: &str, qubits: &[usize], target: &IntState, policy: FillPolicy) -> Result<GadgetGraph> {
    check_qubits(qubits, target.n())?;
    let local: Vec<usize> = (0..qubits.len()).collect();
    let tg = triangle_graph_on(&local);
    let chain = state_to_cycle(&tg, &local, target)?;
    let mut faces = Vec::new();
    for (s, c) in chain.terms() {
        if !c.is_integer() || c.numer().magnitude() != &1u32.into() {
            return Err(GadgetError::Construction(format!("coefficient {c} on a face; the support is not a surface")));
        }
        faces.push(s.vertices().iter().map(|&v| tg.name(v).to_string()).collect::<Vec<_>>());
    }
    let origin: BTreeMap<String, (usize, Corner)> = (0..qubits.len())
        .flat_map(|q| Corner::ALL.map(|c| (vertex_name(q, c), (q, c))))
        .collect();
    let surf = Surface::new(faces, origin)?;
    let mut g = surf.fill(id, qubits, policy, None)?;
    g.targets.push(to_sorted_slots(qubits, target));
    g.log(format!("fill {id} on {qubits:?} target {target} policy {policy:?}"));
    Ok(g)
}
