//! Circuits over {CNOT, rational rotation, identity} and their text format.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ReductionError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gate {
    Cnot { control: usize, target: usize },
    /// the rotation (1/5)·[[3, 4], [−4, 3]]
    Pyth { qubit: usize },
    Id { qubit: usize },
}

impl Gate {
    pub fn operands(&self) -> Vec<usize> {
        match *self {
            Gate::Cnot { control, target } => vec![control, target],
            Gate::Pyth { qubit } | Gate::Id { qubit } => vec![qubit],
        }
    }

    pub fn swap(i: usize, j: usize) -> [Gate; 3] {
        [
            Gate::Cnot { control: i, target: j },
            Gate::Cnot { control: j, target: i },
            Gate::Cnot { control: i, target: j },
        ]
    }

    fn relabel(&self, f: impl Fn(usize) -> usize) -> Gate {
        match *self {
            Gate::Cnot { control, target } => Gate::Cnot { control: f(control), target: f(target) },
            Gate::Pyth { qubit } => Gate::Pyth { qubit: f(qubit) },
            Gate::Id { qubit } => Gate::Id { qubit: f(qubit) },
        }
    }

    pub(crate) fn mapped(&self, f: impl Fn(usize) -> usize) -> Gate {
        self.relabel(f)
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Cnot { control, target } => write!(f, "cnot {control} {target}"),
            Gate::Pyth { qubit } => write!(f, "pyth {qubit}"),
            Gate::Id { qubit } => write!(f, "id {qubit}"),
        }
    }
}

/// Qubits not in `witness` start in |0⟩; `outputs` must read 0 at the end
/// for the circuit to accept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    pub n: usize,
    pub witness: BTreeSet<usize>,
    pub outputs: Vec<usize>,
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n: usize, witness: impl IntoIterator<Item = usize>, outputs: Vec<usize>, gates: Vec<Gate>) -> Result<Circuit> {
        let c = Circuit { n, witness: witness.into_iter().collect(), outputs, gates };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(ReductionError::Invalid(m));
        if self.n == 0 {
            return bad("circuit has no qubits".into());
        }
        if let Some(q) = self.witness.iter().chain(&self.outputs).find(|&&q| q >= self.n) {
            return bad(format!("qubit {q} out of range"));
        }
        for g in &self.gates {
            let ops = g.operands();
            if let Some(q) = ops.iter().find(|&&q| q >= self.n) {
                return bad(format!("`{g}`: qubit {q} out of range"));
            }
            if ops.len() == 2 && ops[0] == ops[1] {
                return bad(format!("`{g}`: repeated operand"));
            }
        }
        Ok(())
    }

    /// Qubits that must start in |0⟩.
    pub fn inputs(&self) -> Vec<usize> {
        (0..self.n).filter(|q| !self.witness.contains(q)).collect()
    }

    /// Number of gates acting on each qubit.
    pub fn gate_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.n];
        for g in &self.gates {
            for q in g.operands() {
                c[q] += 1;
            }
        }
        c
    }

    pub fn parse(text: &str) -> Result<Circuit> {
        let err = |line: usize, message: String| ReductionError::Parse { line, message };
        let mut n: Option<usize> = None;
        let mut witness = BTreeSet::new();
        let mut outputs = Vec::new();
        let mut gates = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut toks = body.split_whitespace();
            let word = toks.next().expect("nonempty").to_ascii_lowercase();
            let args: Vec<usize> = toks
                .map(|t| t.parse::<usize>().map_err(|_| err(line, format!("`{t}` is not a qubit index"))))
                .collect::<Result<_>>()?;
            if word == "qubits" {
                if n.is_some() {
                    return Err(err(line, "repeated `qubits` header".into()));
                }
                match args[..] {
                    [k] if k > 0 => n = Some(k),
                    _ => return Err(err(line, "`qubits` takes one positive count".into())),
                }
                continue;
            }
            let n = n.ok_or_else(|| err(line, "`qubits N` must come first".into()))?;
            if let Some(q) = args.iter().find(|&&q| q >= n) {
                return Err(err(line, format!("qubit {q} out of range for {n} qubits")));
            }
            let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(err(line, format!("`{word}` takes {k} operand(s)"))) };
            match word.as_str() {
                "witness" => witness.extend(&args),
                "output" => {
                    arity(1)?;
                    outputs.push(args[0]);
                }
                "cnot" => {
                    arity(2)?;
                    if args[0] == args[1] {
                        return Err(err(line, "cnot needs two distinct qubits".into()));
                    }
                    gates.push(Gate::Cnot { control: args[0], target: args[1] });
                }
                "pyth" => {
                    arity(1)?;
                    gates.push(Gate::Pyth { qubit: args[0] });
                }
                "id" => {
                    arity(1)?;
                    gates.push(Gate::Id { qubit: args[0] });
                }
                _ => return Err(err(line, format!("unknown gate or directive `{word}`"))),
            }
        }
        let n = n.ok_or_else(|| err(0, "missing `qubits N` header".into()))?;
        if outputs.is_empty() {
            outputs.push(0);
        }
        Circuit::new(n, witness, outputs, gates)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("qubits {}\n", self.n);
        if !self.witness.is_empty() {
            let w: Vec<String> = self.witness.iter().map(|q| q.to_string()).collect();
            s.push_str(&format!("witness {}\n", w.join(" ")));
        }
        for o in &self.outputs {
            s.push_str(&format!("output {o}\n"));
        }
        for g in &self.gates {
            s.push_str(&format!("{g}\n"));
        }
        s
    }
}
