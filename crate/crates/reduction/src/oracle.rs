use topo::linalg;

use crate::clock::SatInstance;
use crate::error::{ReductionError, Result};

/// Dimension of the common kernel of all terms, by exact rank of the span
/// of their ranges. Qubit 0 is the most significant bit of a basis index.
pub fn kernel_oracle(inst: &SatInstance, dense_cap: usize) -> Result<usize> {
    inst.validate()?;
    let n = inst.n;
    if n > dense_cap {
        return Err(ReductionError::Resource(format!("{n} qubits exceeds the dense cap of {dense_cap}")));
    }
    let bit = |q: usize| 1usize << (n - 1 - q);
    let mut vectors = Vec::new();
    for t in &inst.terms {
        let mask: usize = t.qubits.iter().map(|&q| bit(q)).sum();
        let local: Vec<(usize, i64)> = t
            .state
            .terms()
            .map(|(b, c)| (t.qubits.iter().zip(b).filter(|(_, &x)| x == 1).map(|(&q, _)| bit(q)).sum(), c))
            .collect();
        for rest in (0..1usize << n).filter(|r| r & mask == 0) {
            let mut v: Vec<(u32, i64)> = local.iter().map(|&(i, c)| ((rest | i) as u32, c)).collect();
            v.sort_unstable_by_key(|e| e.0);
            vectors.push(v);
        }
    }
    Ok((1usize << n) - linalg::rank(1 << n, &vectors))
}
