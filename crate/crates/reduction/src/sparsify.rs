//! Rewriting a circuit so that every qubit takes part in a bounded number
//! of gates: nearest-neighbour form, then one gate per column of a grid.

use std::collections::BTreeSet;

use crate::circuit::{Circuit, Gate};

/// Bring every two-qubit gate onto neighbouring lines by swapping its first
/// operand towards the second and back again afterwards.
pub fn nearest_neighbor(c: &Circuit) -> Vec<Gate> {
    let mut out = Vec::new();
    for g in &c.gates {
        match *g {
            Gate::Cnot { control, target } if control.abs_diff(target) > 1 => {
                let path: Vec<(usize, usize)> = if control < target {
                    (control..target - 1).map(|i| (i, i + 1)).collect()
                } else {
                    (target + 2..=control).rev().map(|i| (i, i - 1)).collect()
                };
                for &(i, j) in &path {
                    out.extend(Gate::swap(i, j));
                }
                let moved = path.last().expect("nonadjacent").1;
                out.push(Gate::Cnot { control: moved, target });
                for &(i, j) in path.iter().rev() {
                    out.extend(Gate::swap(i, j));
                }
            }
            _ => out.push(*g),
        }
    }
    out
}

/// Grid layout of a sparsified circuit: qubit (row, column) is
/// `column · rows + row`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sparsified {
    pub circuit: Circuit,
    pub rows: usize,
    pub columns: usize,
}

impl Sparsified {
    pub fn qubit(&self, row: usize, column: usize) -> usize {
        column * self.rows + row
    }
}

/// Column i applies the i-th nearest-neighbour gate, with identities on the
/// other rows (top to bottom), then swaps every row into column i+1 (bottom
/// to top). Qubits outside the first column start in arbitrary states, so
/// they join the witness register; outputs are read from the last column.
pub fn sparsify(c: &Circuit) -> Sparsified {
    let line = nearest_neighbor(c);
    let rows = c.n;
    let columns = line.len().max(1);
    let at = |r: usize, col: usize| col * rows + r;
    let mut gates = Vec::new();
    for col in 0..columns {
        let g = line.get(col);
        let ops: BTreeSet<usize> = g.map(|g| g.operands().into_iter().collect()).unwrap_or_default();
        for r in 0..rows {
            if !ops.contains(&r) {
                gates.push(Gate::Id { qubit: at(r, col) });
            } else if Some(&r) == ops.iter().next() {
                gates.push(g.expect("has operands").mapped(|q| at(q, col)));
            }
        }
        if col + 1 < columns {
            for r in (0..rows).rev() {
                gates.extend(Gate::swap(at(r, col), at(r, col + 1)));
            }
        }
    }
    let witness = c.witness.iter().copied().chain(rows..rows * columns);
    let outputs = c.outputs.iter().map(|&o| at(o, columns - 1)).collect();
    let circuit = Circuit::new(rows * columns, witness, outputs, gates).expect("grid circuit is well formed");
    Sparsified { circuit, rows, columns }
}
