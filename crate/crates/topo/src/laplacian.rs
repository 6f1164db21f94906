//! Combinatorial Laplacian L_p = ∂_pᵀ∂_p + ∂_{p+1}∂_{p+1}ᵀ on p-chains.
//!
//! Indices are aligned so that dim ker L_p = β_p: the down part uses the
//! map leaving p-chains and the up part the map arriving at them.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::complex::SimplicialComplex;
use crate::error::{Result, TopoError};
use crate::homology::boundary_columns;
use crate::limits::Limits;
use crate::linalg;

/// Sparse symmetric integer matrix, stored by columns.
fn laplacian_columns(k: &SimplicialComplex, p: usize, reduced: bool) -> Vec<Vec<(u32, i64)>> {
    let n = k.face_count(p as isize);
    let mut acc: Vec<BTreeMap<u32, i64>> = vec![BTreeMap::new(); n];
    let mut add_outer = |col: &[(u32, i64)]| {
        for &(i, x) in col {
            for &(j, y) in col {
                *acc[j as usize].entry(i).or_insert(0) += x * y;
            }
        }
    };
    let at = k.faces(p as isize);
    if p == 0 {
        if reduced {
            // augmentation: one row of ones, ∂_0ᵀ∂_0 is the all-ones matrix
            let ones: Vec<(u32, i64)> = (0..n as u32).map(|i| (i, 1)).collect();
            add_outer(&ones);
        }
    } else if let (Some(below), Some(at)) = (k.faces(p as isize - 1), at) {
        // rows of ∂_p: collect the entries of each (p−1)-face across p-faces
        let mut rows: Vec<Vec<(u32, i64)>> = vec![Vec::new(); below.len()];
        for (j, col) in boundary_columns(below, at).into_iter().enumerate() {
            for (i, x) in col {
                rows[i as usize].push((j as u32, x));
            }
        }
        for r in &rows {
            add_outer(r);
        }
    }
    if let (Some(at), Some(above)) = (at, k.faces(p as isize + 1)) {
        for col in boundary_columns(at, above) {
            add_outer(&col);
        }
    }
    acc.into_iter().map(|m| m.into_iter().filter(|&(_, x)| x != 0).collect()).collect()
}

fn check(k: &SimplicialComplex, p: isize) -> Result<()> {
    let top = k.top_dim();
    if p < 0 || (!k.is_complete() && p >= top) {
        return Err(TopoError::Domain { dim: p, top });
    }
    Ok(())
}

/// Exact dimension of ker L_p, from the rank of the assembled Laplacian.
pub fn laplacian_kernel_dim(k: &SimplicialComplex, p: isize, reduced: bool) -> Result<usize> {
    check(k, p)?;
    if p > k.top_dim() {
        return Ok(0);
    }
    let n = k.face_count(p);
    let cols = laplacian_columns(k, p as usize, reduced);
    Ok(n - linalg::rank(n, &cols))
}

/// Dense L_p as floating point; used by the eigenvalue diagnostic.
pub fn laplacian_dense(k: &SimplicialComplex, p: isize, reduced: bool) -> Result<DMatrix<f64>> {
    check(k, p)?;
    let n = k.face_count(p);
    let mut m = DMatrix::zeros(n, n);
    if n > 0 {
        for (j, col) in laplacian_columns(k, p as usize, reduced).into_iter().enumerate() {
            for (i, x) in col {
                m[(i as usize, j)] = x as f64;
            }
        }
    }
    Ok(m)
}

/// Approximate spectral summary of L_p. Diagnostic only.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEstimate {
    /// Eigenvalues below the tolerance.
    pub zero_modes: usize,
    /// Smallest eigenvalue above the tolerance, if any.
    pub min_nonzero: Option<f64>,
}

/// Numerical estimate of the smallest nonzero eigenvalue of L_p.
/// Returns `None` when the p-chain group is empty.
pub fn laplacian_min_eigenvalue_estimate(
    k: &SimplicialComplex,
    p: isize,
    reduced: bool,
    limits: &Limits,
) -> Result<Option<SpectrumEstimate>> {
    check(k, p)?;
    let n = k.face_count(p);
    if n == 0 {
        return Ok(None);
    }
    if n > limits.eigen_cap {
        return Err(TopoError::Resource(format!(
            "{n} {p}-faces exceed the eigenvalue diagnostic cap {}",
            limits.eigen_cap
        )));
    }
    let eig = SymmetricEigen::new(laplacian_dense(k, p, reduced)?).eigenvalues;
    let scale = eig.iter().fold(1.0f64, |a, &b| a.max(b.abs()));
    let tol = 1e-9 * scale * n as f64;
    let zero_modes = eig.iter().filter(|&&x| x.abs() <= tol).count();
    let min_nonzero = eig.iter().copied().filter(|&x| x > tol).fold(None, |a: Option<f64>, x| {
        Some(a.map_or(x, |a| a.min(x)))
    });
    Ok(Some(SpectrumEstimate { zero_modes, min_nonzero }))
}
