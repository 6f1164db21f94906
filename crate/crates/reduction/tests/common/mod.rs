#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use qgadget::{gadget_for_state, GadgetGraph, IntState};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use reduction::{Circuit, Gate, ProjectorTerm, SatInstance};
use topo::linalg;

/// Dimension of the witness subspace that a circuit accepts with certainty,
/// by direct simulation with integer-scaled gates.
pub fn accepting_dimension(c: &Circuit) -> usize {
    let n = c.n;
    let dim = 1usize << n;
    let bit = |q: usize| 1usize << (n - 1 - q);
    let wit: Vec<usize> = c.witness.iter().copied().collect();
    let mut rows = Vec::new();
    for w in 0..1usize << wit.len() {
        let start: usize = wit.iter().enumerate().filter(|(i, _)| (w >> i) & 1 == 1).map(|(_, &q)| bit(q)).sum();
        let mut v = vec![0i64; dim];
        v[start] = 1;
        for g in &c.gates {
            let mut u = vec![0i64; dim];
            for (i, &a) in v.iter().enumerate().filter(|(_, a)| **a != 0) {
                match *g {
                    Gate::Cnot { control, target } => {
                        let j = if i & bit(control) != 0 { i ^ bit(target) } else { i };
                        u[j] += a;
                    }
                    Gate::Pyth { qubit } => {
                        let b = bit(qubit);
                        if i & b == 0 {
                            u[i] += 3 * a;
                            u[i | b] -= 4 * a;
                        } else {
                            u[i ^ b] += 4 * a;
                            u[i] += 3 * a;
                        }
                    }
                    Gate::Id { .. } => u[i] += a,
                }
            }
            v = u;
        }
        let rejected: Vec<(u32, i64)> =
            v.iter().enumerate().filter(|(i, &a)| a != 0 && c.outputs.iter().any(|&o| i & bit(o) != 0)).map(|(i, &a)| (i as u32, a)).collect();
        rows.push(rejected);
    }
    // columns w ↦ rejected amplitude; accepting space is its kernel
    let mut cols = vec![Vec::new(); dim];
    for (w, r) in rows.iter().enumerate() {
        for &(i, a) in r {
            cols[i as usize].push((w as u32, a));
        }
    }
    (1usize << wit.len()) - linalg::rank(1 << wit.len(), &cols)
}

pub fn term(label: &str, qubits: &[usize], state: &str) -> ProjectorTerm {
    ProjectorTerm { provenance: label.into(), qubits: qubits.to_vec(), state: IntState::parse(state).unwrap() }
}

pub fn instance(n: usize, terms: &[(&[usize], &str)]) -> SatInstance {
    SatInstance::new(n, terms.iter().enumerate().map(|(i, (q, s))| term(&format!("h{i}"), q, s)).collect()).unwrap()
}

pub type Rows = &'static [(&'static [usize], &'static str)];

/// Small instances with kernel dimensions counted by hand.
pub const HAND_BUILT: &[(usize, Rows, usize)] = &[
    (1, &[(&[0], "|0>")], 1),
    (1, &[(&[0], "|0>"), (&[0], "|1>")], 0),
    (2, &[(&[0, 1], "|00>")], 3),
    (2, &[(&[0, 1], "|00>"), (&[0, 1], "|11>")], 2),
    (2, &[(&[0, 1], "|01> - |10>")], 3),
    (2, &[(&[0, 1], "|00> - |11>"), (&[0, 1], "|01> - |10>")], 2),
    (2, &[(&[0, 1], "|00> - |11>"), (&[0, 1], "|00>")], 2),
    (2, &[(&[0], "|1>"), (&[1, 0], "|01> - |10>")], 1),
    (3, &[(&[0, 1, 2], "|000>")], 7),
    (3, &[(&[2, 0], "|10>"), (&[1, 2], "|01>")], 5),
    (3, &[(&[0, 1, 2], "|101> - |010>")], 7),
    (3, &[(&[0, 1, 2], "|011> - |100>"), (&[0], "|0>")], 3),
    (3, &[(&[0, 1], "|00> - |11>"), (&[1, 2], "|01> - |10>")], 4),
    (3, &[(&[0, 1, 2], "|000> - |111>"), (&[2, 1, 0], "|011> - |100>")], 6),
    (3, &[(&[1, 0], "|00>"), (&[1, 0], "|01>"), (&[1, 0], "|10>"), (&[2], "|1>")], 1),
    (3, &[(&[0, 1, 2], "-5|010> + 3|100> - 4|101>")], 7),
    (3, &[(&[0, 1, 2], "-5|011> + 4|100> + 3|101>"), (&[2], "|1>")], 3),
    (4, &[(&[0, 1, 2, 3], "-|0100> + |1000>"), (&[0, 1, 2, 3], "-|0111> + |1010>")], 14),
    (4, &[(&[0, 1], "|00>"), (&[2, 3], "|11>"), (&[1, 2], "|10>")], 5),
    (4, &[(&[0, 1, 2, 3], "|1100>"), (&[0, 1, 2, 3], "|1000> - |1101>"), (&[3], "|0>")], 7),
    (5, &[(&[0, 1, 2], "|101>"), (&[3, 4], "|01> - |10>"), (&[4], "|0>")], 7),
    (5, &[(&[0, 1], "|01> - |10>"), (&[1, 2], "|01> - |10>"), (&[2, 3], "|01> - |10>"), (&[3, 4], "|01> - |10>")], 6),
];

/// Up to five qubits and six CNOT or Pythagorean gates.
pub fn random_circuit(rng: &mut ChaCha8Rng) -> Circuit {
    let n = rng.random_range(2..=5);
    let gates = (0..rng.random_range(1..=6))
        .map(|_| {
            let a = rng.random_range(0..n);
            if rng.random_bool(0.3) {
                Gate::Pyth { qubit: a }
            } else {
                Gate::Cnot { control: a, target: (a + rng.random_range(1..n)) % n }
            }
        })
        .collect();
    let witness: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
    Circuit::new(n, witness, vec![rng.random_range(0..n)], gates).unwrap()
}

/// Degree of every mediator recounted from the separate term gadgets: its
/// own edges, plus every mediator of another term whose support meets its
/// support.
pub fn recount_max_mediator_degree(inst: &SatInstance) -> usize {
    let gadgets: Vec<GadgetGraph> =
        inst.terms.iter().enumerate().map(|(i, t)| gadget_for_state(&format!("t{i}"), &t.qubits, &t.state).unwrap()).collect();
    let support = |g: &GadgetGraph, m: &str| -> BTreeSet<usize> { g.supports.get(m).map_or_else(|| g.qubits.iter().copied().collect(), |s| s.iter().copied().collect()) };
    let mut on_qubit: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (gi, g) in gadgets.iter().enumerate() {
        for (mi, m) in g.mediators.iter().enumerate() {
            for q in support(g, m) {
                on_qubit.entry(q).or_default().push((gi, mi));
            }
        }
    }
    let mut best = 0;
    for (gi, g) in gadgets.iter().enumerate() {
        for m in &g.mediators {
            let own = g.edges.iter().filter(|(u, v)| u == m || v == m).count();
            let others: BTreeSet<(usize, usize)> =
                support(g, m).iter().flat_map(|q| on_qubit[q].iter().copied()).filter(|&(h, _)| h != gi).collect();
            best = best.max(own + others.len());
        }
    }
    best
}
