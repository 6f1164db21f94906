//! Qubits as disjoint triangles and computational cycles as wedge products.

use topo::{Chain, Graph};

use crate::error::{GadgetError, Result};
use crate::state::IntState;

/// The three triangle corners of a qubit. `X` lies on every computational
/// cycle of that qubit, `A` on the |0⟩ cycle and `B` on the |1⟩ cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    X,
    A,
    B,
}

impl Corner {
    pub const ALL: [Corner; 3] = [Corner::X, Corner::A, Corner::B];

    pub fn letter(self) -> char {
        match self {
            Corner::X => 'x',
            Corner::A => 'a',
            Corner::B => 'b',
        }
    }

    /// The corner bounding the cycle of `bit` (besides `X`).
    pub fn on_cycle(bit: u8) -> Corner {
        if bit == 0 {
            Corner::A
        } else {
            Corner::B
        }
    }

    /// The corner not on the cycle of `bit`.
    pub fn off_cycle(bit: u8) -> Corner {
        Corner::on_cycle(1 - bit)
    }
}

pub fn vertex_name(qubit: usize, c: Corner) -> String {
    format!("{}:{qubit}", c.letter())
}

pub fn mediator_name(gadget: &str, index: usize) -> String {
    format!("m:{gadget}:{index}")
}

/// Parse a qubit vertex name back into (qubit, corner).
pub fn parse_vertex(name: &str) -> Option<(usize, Corner)> {
    let (c, q) = name.split_once(':')?;
    let corner = match c {
        "x" => Corner::X,
        "a" => Corner::A,
        "b" => Corner::B,
        _ => return None,
    };
    Some((q.parse().ok()?, corner))
}

/// `n` qubit registers, each a triangle on x:i, a:i, b:i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QubitRegister {
    n: usize,
}

impl QubitRegister {
    pub fn new(n: usize) -> Result<QubitRegister> {
        if n == 0 {
            return Err(GadgetError::Topo(topo::TopoError::Domain { dim: 0, top: -1 }));
        }
        Ok(QubitRegister { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> Graph {
        triangle_graph_on(&(0..self.n).collect::<Vec<_>>())
    }
}

pub fn triangle_graph(n: usize) -> Result<Graph> {
    Ok(QubitRegister::new(n)?.graph())
}

/// Triangles for the listed qubits, vertices in x, a, b order per qubit.
pub fn triangle_graph_on(qubits: &[usize]) -> Graph {
    let names = qubits.iter().flat_map(|&q| Corner::ALL.map(|c| vertex_name(q, c)));
    let mut g = Graph::new(names).expect("distinct qubits");
    for i in 0..qubits.len() as u32 {
        let b = 3 * i;
        for (u, v) in [(b, b + 1), (b, b + 2), (b + 1, b + 2)] {
            g.add_edge(u, v).expect("triangle edge");
        }
    }
    g
}

fn id(g: &Graph, qubit: usize, c: Corner) -> Result<u32> {
    Ok(g.id_or_err(&vertex_name(qubit, c))?)
}

/// The 0-chains |0⟩ = [x] − [a] and |1⟩ = [x] − [b] of one qubit in `g`.
pub fn basis_zero_one(g: &Graph, qubit: usize) -> Result<(Chain, Chain)> {
    let x = Chain::vertex(id(g, qubit, Corner::X)?);
    let zero = x.sub(&Chain::vertex(id(g, qubit, Corner::A)?));
    let one = x.sub(&Chain::vertex(id(g, qubit, Corner::B)?));
    Ok((zero, one))
}

/// Cycle of a single bitstring: wedge of per-qubit 0-chains in slot order.
pub fn bitstring_cycle(g: &Graph, slots: &[usize], bits: &[u8]) -> Result<Chain> {
    let mut c: Option<Chain> = None;
    for (&q, &b) in slots.iter().zip(bits) {
        let (zero, one) = basis_zero_one(g, q)?;
        let f = if b == 0 { zero } else { one };
        c = Some(match c {
            None => f,
            Some(acc) => acc.wedge(&f),
        });
    }
    Ok(c.unwrap_or_else(Chain::zero))
}

/// Σ n_e · cycle(e), with state slot j placed on qubit `slots[j]`.
pub fn state_to_cycle(g: &Graph, slots: &[usize], s: &IntState) -> Result<Chain> {
    if slots.len() != s.n() {
        return Err(GadgetError::InvalidState(format!("{} slots for a {}-qubit state", slots.len(), s.n())));
    }
    let mut total = Chain::zero();
    for (bits, c) in s.terms() {
        total = total.add(&bitstring_cycle(g, slots, bits)?.scale_int(c));
    }
    Ok(total)
}
