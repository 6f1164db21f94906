//! Projector instance → graph whose homology counts satisfying states.

use qgadget::{gadget_for_state, GadgetGraph, GadgetSum, SparseGraph, Step4};
use serde::{Deserialize, Serialize};

use crate::clock::SatInstance;
use crate::error::{ReductionError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceOptions {
    pub step4: Step4,
    pub max_qubits: usize,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions { step4: Step4::OverlappingSupports, max_qubits: 1 << 16 }
    }
}

/// Graph output of the reduction. The number of satisfying states equals
/// the Betti number β_l of the independence complex of `graph`.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub graph: SparseGraph,
    pub l: usize,
    pub mediators: usize,
}

fn check(inst: &SatInstance, opts: &ReduceOptions) -> Result<()> {
    inst.validate()?;
    if inst.n == 0 {
        return Err(ReductionError::Invalid("instance has no qubits".into()));
    }
    if inst.n > opts.max_qubits {
        return Err(ReductionError::Resource(format!("{} qubits exceeds the cap of {}", inst.n, opts.max_qubits)));
    }
    Ok(())
}

fn term_gadgets(inst: &SatInstance) -> impl Iterator<Item = Result<GadgetGraph>> + '_ {
    inst.terms.iter().enumerate().map(|(i, t)| Ok(gadget_for_state(&format!("t{i}"), &t.qubits, &t.state)?))
}

pub fn reduce_to_graph(inst: &SatInstance, opts: &ReduceOptions) -> Result<Reduced> {
    check(inst, opts)?;
    let qubits: Vec<usize> = (0..inst.n).collect();
    let mut sum = GadgetSum::new(&qubits, opts.step4, false);
    for g in term_gadgets(inst) {
        sum.add(&g?)?;
    }
    let mediators = sum.mediator_count();
    Ok(Reduced { graph: sum.finish_sparse(), l: inst.n - 1, mediators })
}

/// Same graph as a gadget with the lifted targets tracked; only sensible for
/// small instances.
pub fn reduce_to_gadget(inst: &SatInstance, opts: &ReduceOptions) -> Result<GadgetGraph> {
    check(inst, opts)?;
    let qubits: Vec<usize> = (0..inst.n).collect();
    let mut sum = GadgetSum::new(&qubits, opts.step4, true);
    for g in term_gadgets(inst) {
        sum.add(&g?)?;
    }
    Ok(sum.finish())
}
