//! Rank-one projector instances from circuits via a unary clock.
//!
//! Every gate t owns a clock particle of two qubits placed after the
//! computational register: 00 = unborn, 01 = active before the gate,
//! 10 = active after it, 11 = dead. A state is annihilated by every term iff
//! it is a history state of an accepting computation.

use std::collections::HashMap;

use qgadget::IntState;
use serde::{Deserialize, Serialize};

use crate::circuit::{Circuit, Gate};
use crate::error::{ReductionError, Result};
use crate::sparsify::sparsify;

/// One term |ψ⟩⟨ψ| acting on `qubits` (slot j of `state` is `qubits[j]`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectorTerm {
    pub provenance: String,
    pub qubits: Vec<usize>,
    pub state: IntState,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatInstance {
    pub n: usize,
    pub terms: Vec<ProjectorTerm>,
}

impl SatInstance {
    pub fn new(n: usize, terms: Vec<ProjectorTerm>) -> Result<SatInstance> {
        let inst = SatInstance { n, terms };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, t) in self.terms.iter().enumerate() {
            let bad = |m: &str| Err(ReductionError::Invalid(format!("term {i} ({}): {m}", t.provenance)));
            if t.qubits.len() != t.state.n() {
                return bad("qubit list and state disagree in length");
            }
            if t.qubits.iter().any(|&q| q >= self.n) {
                return bad("qubit out of range");
            }
            let mut s = t.qubits.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != t.qubits.len() {
                return bad("repeated qubit");
            }
        }
        Ok(())
    }

    /// Largest number of qubits in one term.
    pub fn locality(&self) -> usize {
        self.terms.iter().map(|t| t.qubits.len()).max().unwrap_or(0)
    }

    /// Number of terms touching each qubit.
    pub fn incidence(&self) -> Vec<usize> {
        let mut c = vec![0; self.n];
        for t in &self.terms {
            for &q in &t.qubits {
                c[q] += 1;
            }
        }
        c
    }

    pub fn max_incidence(&self) -> usize {
        self.incidence().into_iter().max().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }

    pub fn from_json(text: &str) -> Result<SatInstance> {
        let inst: SatInstance = serde_json::from_str(text).map_err(|e| ReductionError::Parse { line: e.line(), message: e.to_string() })?;
        inst.validate()?;
        Ok(inst)
    }
}

/// Which particle pairs receive the pairwise clock constraints. Both choices
/// have the same legal clock states; `Adjacent` keeps incidence bounded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClockPairs {
    #[default]
    All,
    Adjacent,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClockOptions {
    pub pairs: ClockPairs,
    /// Check each input qubit on the particle of the first gate touching it
    /// rather than always on the first particle.
    pub relocate_inputs: bool,
}

impl ClockOptions {
    pub fn sparse() -> ClockOptions {
        ClockOptions { pairs: ClockPairs::Adjacent, relocate_inputs: true }
    }
}

/// Gate action scaled to integers: (scale, U·|x⟩ · scale for each input x).
fn integer_action(g: &Gate) -> Option<(i64, Vec<Vec<(Vec<u8>, i64)>>)> {
    match g {
        Gate::Cnot { .. } => Some((
            1,
            (0..4u8).map(|x| {
                let (c, t) = (x >> 1, x & 1);
                vec![(vec![c, t ^ c], 1)]
            })
            .collect(),
        )),
        Gate::Pyth { .. } => Some((5, vec![vec![(vec![0], 3), (vec![1], -4)], vec![(vec![0], 4), (vec![1], 3)]])),
        Gate::Id { .. } => None,
    }
}

fn bits(x: usize, k: usize) -> Vec<u8> {
    (0..k).rev().map(|i| ((x >> i) & 1) as u8).collect()
}

fn cat(parts: &[&[u8]]) -> Vec<u8> {
    parts.concat()
}

struct Builder {
    terms: Vec<ProjectorTerm>,
    seen: HashMap<(Vec<usize>, IntState), usize>,
}

impl Builder {
    fn push(&mut self, label: &str, qubits: Vec<usize>, terms: Vec<(Vec<u8>, i64)>) {
        let state = IntState::new(qubits.len(), terms).expect("clock terms are nonzero");
        let key = (qubits.clone(), state.normalized());
        if let Some(&i) = self.seen.get(&key) {
            let t = &mut self.terms[i];
            if !t.provenance.split('+').any(|l| l == label) {
                t.provenance = format!("{}+{label}", t.provenance);
            }
            return;
        }
        self.seen.insert(key, self.terms.len());
        self.terms.push(ProjectorTerm { provenance: label.to_string(), qubits, state });
    }
}

/// The projector instance whose satisfying states are history states of
/// `c` on accepting witnesses.
pub fn clock_projectors(c: &Circuit, opts: ClockOptions) -> Result<SatInstance> {
    c.validate()?;
    let l = c.gates.len();
    if l == 0 {
        return Err(ReductionError::Invalid("circuit has no gates to clock".into()));
    }
    let n = c.n;
    let particle = |t: usize| [n + 2 * t, n + 2 * t + 1];
    let pair = |j: usize, k: usize| vec![n + 2 * j, n + 2 * j + 1, n + 2 * k, n + 2 * k + 1];
    let mut b = Builder { terms: Vec::new(), seen: HashMap::new() };
    let basis = |s: &str| vec![(s.bytes().map(|c| c - b'0').collect::<Vec<u8>>(), 1)];

    b.push("clock1", particle(0).to_vec(), basis("00"));
    b.push("clock2", particle(l - 1).to_vec(), basis("11"));
    let pairs: Vec<(usize, usize)> = match opts.pairs {
        ClockPairs::All => (0..l).flat_map(|j| (j + 1..l).map(move |k| (j, k))).collect(),
        ClockPairs::Adjacent => (0..l.saturating_sub(1)).map(|j| (j, j + 1)).collect(),
    };
    for &(j, k) in &pairs {
        for s in ["0101", "0110", "1001", "1010"] {
            b.push("clock3", pair(j, k), basis(s));
        }
        for s in ["0111", "1011", "0011"] {
            b.push("clock4", pair(j, k), basis(s));
        }
        for s in ["0001", "0010", "0011"] {
            b.push("clock5", pair(j, k), basis(s));
        }
    }
    for t in 0..l.saturating_sub(1) {
        b.push("clock6", pair(t, t + 1), basis("1100"));
    }

    for (t, g) in c.gates.iter().enumerate() {
        let ops = g.operands();
        match integer_action(g) {
            None => b.push("prop", particle(t).to_vec(), vec![(vec![0, 1], 1), (vec![1, 0], -1)]),
            Some((scale, images)) => {
                let mut qs = particle(t).to_vec();
                qs.extend(&ops);
                for (x, image) in images.into_iter().enumerate() {
                    let mut terms = vec![(cat(&[&[0, 1], &bits(x, ops.len())]), -scale)];
                    terms.extend(image.into_iter().map(|(y, a)| (cat(&[&[1, 0], &y]), a)));
                    b.push("prop", qs.clone(), terms);
                }
            }
        }
    }
    for t in 0..l.saturating_sub(1) {
        b.push("prop'", pair(t, t + 1), vec![(vec![1, 0, 0, 0], 1), (vec![1, 1, 0, 1], -1)]);
    }

    for q in c.inputs() {
        let t = if opts.relocate_inputs { c.gates.iter().position(|g| g.operands().contains(&q)).unwrap_or(0) } else { 0 };
        let [c1, c2] = particle(t);
        b.push("in", vec![q, c1, c2], basis("101"));
    }
    let [c1, c2] = particle(l - 1);
    for &o in &c.outputs {
        b.push("out", vec![o, c1, c2], basis("110"));
    }
    SatInstance::new(n + 2 * l, b.terms)
}

/// Sparsify `c`, then clock it with adjacent-pair constraints and
/// relocated input checks.
pub fn sparse_projectors(c: &Circuit) -> Result<SatInstance> {
    clock_projectors(&sparsify(c).circuit, ClockOptions::sparse())
}
