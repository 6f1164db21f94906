//! Exact check that a gadget lifts precisely its declared states.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use topo::complex::{enumerate_cliques, full_clique_complex};
use topo::homology::boundary_columns;
use topo::{exec, linalg, BoundaryImage, Exec, HomologyReport, Limits};

use crate::error::{GadgetError, Result};
use crate::gadget::GadgetGraph;
use crate::register::{bitstring_cycle, state_to_cycle};
use crate::state::{all_bitstrings, IntState};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetVerdict {
    /// dimension of the span of computational cycles that became boundaries
    pub lifted_subspace_dim: usize,
    pub lifted_basis: Vec<IntState>,
    /// reduced Betti number in the qubit-cycle dimension
    pub betti_observed: usize,
    pub betti_expected: usize,
    pub target_rank: usize,
    pub passes: bool,
}

fn to_rational(s: &IntState) -> Vec<BigRational> {
    s.to_dense().into_iter().map(|c| BigRational::from_integer(c.into())).collect()
}

/// Smallest integer multiple of a rational vector, as a state.
fn integral_state(n: usize, v: &[BigRational]) -> Result<IntState> {
    let den = v.iter().fold(BigInt::one(), |a, q| a.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&den / q.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
    let dense = ints
        .iter()
        .map(|x| if g.is_zero() { Some(0) } else { (x / &g).to_i64() })
        .collect::<Option<Vec<i64>>>()
        .ok_or_else(|| GadgetError::InvalidState("lifted state coefficient overflows i64".into()))?;
    Ok(IntState::from_dense(n, &dense)?.normalized())
}

/// Which combinations of computational cycles bound in the gadget complex,
/// and whether they are exactly the span of `targets`.
///
/// Only independent sets with k−1, k and k+1 vertices are enumerated, where
/// k is the number of qubits.
pub fn verify_gadget(g: &GadgetGraph, targets: &[IntState], ex: Exec) -> Result<GadgetVerdict> {
    g.validate()?;
    let k = g.qubits.len();
    for t in targets {
        if t.n() != k {
            return Err(GadgetError::InvalidState(format!("target {t} is not on {k} qubits")));
        }
    }
    let graph = g.to_graph()?;
    let lo = (k - 1).max(1);
    let (tables, _) = enumerate_cliques(&graph.complement(), lo, k + 1, ex);
    let at = &tables[k - lo];
    let above = &tables[k + 1 - lo];
    let r_low = if k == 1 {
        usize::from(!at.is_empty())
    } else {
        linalg::rank(tables[0].len(), &boundary_columns(&tables[0], at))
    };
    let image = BoundaryImage::from_tables(at, Some(above), false);
    let betti = at.len() - r_low - image.rank();

    let bits: Vec<Vec<u8>> = all_bitstrings(k).collect();
    let forms = exec::map(ex, &bits, |b| {
        let c = bitstring_cycle(&graph, &g.qubits, b)?;
        Ok(image.normal_form(&c)?)
    });
    let forms = forms.into_iter().collect::<Result<Vec<_>>>()?;
    let lifted = linalg::nullspace(&forms);

    let tv: Vec<Vec<BigRational>> = targets.iter().map(to_rational).collect();
    let target_rank = linalg::rank_rational(&tv);
    let joint = linalg::rank_rational(&tv.iter().chain(&lifted).cloned().collect::<Vec<_>>());
    let lifted_basis = lifted.iter().map(|v| integral_state(k, v)).collect::<Result<Vec<_>>>()?;
    let betti_expected = (1usize << k) - target_rank;
    let passes = lifted.len() == target_rank && joint == target_rank && betti == betti_expected;
    Ok(GadgetVerdict {
        lifted_subspace_dim: lifted.len(),
        lifted_basis,
        betti_observed: betti,
        betti_expected,
        target_rank,
        passes,
    })
}

/// Verify against the gadget's own declared targets.
pub fn verify(g: &GadgetGraph, ex: Exec) -> Result<GadgetVerdict> {
    verify_gadget(g, &g.targets, ex)
}

/// Full homology of the gadget's independence complex.
pub fn gadget_homology(g: &GadgetGraph, limits: &Limits, ex: Exec) -> Result<HomologyReport> {
    let graph = g.to_graph()?;
    let k = full_clique_complex(&graph.complement(), limits, ex)?;
    Ok(topo::homology_report(&k, ex)?)
}

/// Whether two states have cycles in the same homology class of the gadget
/// complex (their difference bounds).
pub fn homologous(g: &GadgetGraph, s: &IntState, t: &IntState, ex: Exec) -> Result<bool> {
    bounds_difference(g, s, Some(t), ex)
}

/// Whether the cycle of `s` is a boundary in the gadget complex.
pub fn bounds(g: &GadgetGraph, s: &IntState, ex: Exec) -> Result<bool> {
    bounds_difference(g, s, None, ex)
}

fn bounds_difference(g: &GadgetGraph, s: &IntState, t: Option<&IntState>, ex: Exec) -> Result<bool> {
    let k = g.qubits.len();
    let graph = g.to_graph()?;
    let (tables, _) = enumerate_cliques(&graph.complement(), k, k + 1, ex);
    let image = BoundaryImage::from_tables(&tables[0], Some(&tables[1]), false);
    let mut c = state_to_cycle(&graph, &g.qubits, s)?;
    if let Some(t) = t {
        c = c.sub(&state_to_cycle(&graph, &g.qubits, t)?);
    }
    Ok(image.contains(&c)?)
}
