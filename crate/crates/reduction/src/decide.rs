use serde::{Deserialize, Serialize};
use topo::homology::clique_betti;
use topo::{Exec, Graph, Limits};

use crate::error::{ReductionError, Result};

/// Whether the graph is read through its independence complex or its
/// clique complex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    #[default]
    Independence,
    Clique,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub l: usize,
    pub betti: usize,
    pub nontrivial: bool,
}

/// Reduced β_l of the chosen complex of `g`. Reduced and plain Betti
/// numbers differ only at l = 0, where the reduced one is the count that
/// matches satisfying states (one qubit: two points beyond the first).
pub fn decide_homology(g: &Graph, l: usize, mode: Mode, limits: &Limits, exec: Exec) -> Result<Decision> {
    if l + 1 > limits.max_dim {
        return Err(ReductionError::Resource(format!("dimension {l} needs faces of size {} > max-dim {}", l + 2, limits.max_dim)));
    }
    let betti = match mode {
        Mode::Independence => clique_betti(&g.complement(), l, true, exec),
        Mode::Clique => clique_betti(g, l, true, exec),
    };
    Ok(Decision { l, betti, nontrivial: betti > 0 })
}
