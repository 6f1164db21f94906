//! Boundary matrices, exact ranks and Betti numbers over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chain::{Chain, Simplex};
use crate::complex::{enumerate_cliques, FaceTable, SimplicialComplex};
use crate::error::{Result, TopoError};
use crate::exec::{self, Exec};
use crate::graph::Graph;
use crate::linalg::{self, Echelon};

/// ∂_p as sparse integer columns, one per p-face, rows indexed by (p−1)-faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub dim: usize,
    pub rows: usize,
    pub cols: Vec<Vec<(u32, i64)>>,
}

impl BoundaryMatrix {
    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Dense copy, row-major; meant for tests and small diagnostics.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, x) in col {
                m[i as usize][j] = x;
            }
        }
        m
    }
}

/// Columns of ∂ from `upper` (width p+1) into `lower` (width p).
pub fn boundary_columns(lower: &FaceTable, upper: &FaceTable) -> Vec<Vec<(u32, i64)>> {
    let mut facet = Vec::with_capacity(upper.width());
    upper
        .iter()
        .map(|s| {
            let mut col = Vec::with_capacity(s.len());
            for skip in 0..s.len() {
                facet.clear();
                facet.extend(s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                let row = lower.index_of(&facet).expect("complex is downward closed");
                col.push((row as u32, if skip % 2 == 0 { 1 } else { -1 }));
            }
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect()
}

pub fn boundary_matrix(k: &SimplicialComplex, p: isize) -> Result<BoundaryMatrix> {
    let top = k.top_dim();
    if p < 0 || p > top {
        return Err(TopoError::Domain { dim: p, top });
    }
    let upper = k.faces(p).expect("within range");
    if p == 0 {
        return Ok(BoundaryMatrix { dim: 0, rows: 0, cols: vec![Vec::new(); upper.len()] });
    }
    let lower = k.faces(p - 1).expect("within range");
    Ok(BoundaryMatrix { dim: p as usize, rows: lower.len(), cols: boundary_columns(lower, upper) })
}

pub fn rank_exact(m: &BoundaryMatrix) -> usize {
    linalg::rank(m.rows, &m.cols)
}

/// Rank of ∂_p (0 outside the materialized range). With `reduced`, ∂_0 is
/// the augmentation onto a one-dimensional (−1)-chain group.
fn boundary_rank(k: &SimplicialComplex, p: isize, reduced: bool) -> usize {
    if p == 0 {
        return usize::from(reduced && k.face_count(0) > 0);
    }
    if p < 0 || p > k.top_dim() {
        return 0;
    }
    rank_exact(&boundary_matrix(k, p).expect("within range"))
}

fn check_materialized(k: &SimplicialComplex, p: isize) -> Result<()> {
    let top = k.top_dim();
    if p < 0 || (!k.is_complete() && p >= top) {
        return Err(TopoError::Domain { dim: p, top });
    }
    Ok(())
}

pub fn betti(k: &SimplicialComplex, p: isize, reduced: bool) -> Result<usize> {
    check_materialized(k, p)?;
    if p > k.top_dim() {
        return Ok(0);
    }
    let f = k.face_count(p);
    Ok(f - boundary_rank(k, p, reduced) - boundary_rank(k, p + 1, reduced))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub f_vector: Vec<usize>,
    pub betti: Vec<usize>,
    pub betti_reduced: Vec<usize>,
    pub euler: i64,
    pub euler_reduced: i64,
}

/// Betti numbers in every dimension of a fully materialized complex. The
/// ranks of the boundary maps are computed concurrently under `exec`.
pub fn homology_report(k: &SimplicialComplex, exec: Exec) -> Result<HomologyReport> {
    if !k.is_complete() {
        return Err(TopoError::Resource("complex is truncated; its homology is not fully determined".into()));
    }
    let top = k.top_dim();
    let f = k.f_vector();
    // ranks[p] = rank ∂_p for p = 1..=top
    let ranks = exec::map_range(exec, f.len(), |p| if p == 0 { 0 } else { boundary_rank(k, p as isize, false) });
    let rank = |p: usize| ranks.get(p).copied().unwrap_or(0);
    let betti: Vec<usize> = (0..f.len()).map(|p| f[p] - rank(p) - rank(p + 1)).collect();
    let mut betti_reduced = betti.clone();
    if let Some(b0) = betti_reduced.first_mut() {
        *b0 -= 1;
    }
    let euler: i64 = f.iter().enumerate().map(|(p, &n)| if p % 2 == 0 { n as i64 } else { -(n as i64) }).sum();
    debug_assert_eq!(
        euler,
        betti.iter().enumerate().map(|(p, &n)| if p % 2 == 0 { n as i64 } else { -(n as i64) }).sum::<i64>()
    );
    let _ = top;
    Ok(HomologyReport { f_vector: f, betti, betti_reduced, euler, euler_reduced: 1 - euler })
}

/// Betti number β_p of the clique complex of `g`, enumerating only the
/// cliques with p, p+1 and p+2 vertices.
pub fn clique_betti(g: &Graph, p: usize, reduced: bool, exec: Exec) -> usize {
    let lo = p.max(1);
    let (tables, _) = enumerate_cliques(g, lo, p + 2, exec);
    let table = |w: usize| -> Option<&FaceTable> { if w < lo { None } else { tables.get(w - lo) } };
    let (below, at, above) = (table(p), table(p + 1).expect("enumerated"), table(p + 2).expect("enumerated"));
    let (r_p, r_up) = exec::join(
        exec,
        || match below {
            Some(b) => linalg::rank(b.len(), &boundary_columns(b, at)),
            None => usize::from(reduced && !at.is_empty()),
        },
        || linalg::rank(at.len(), &boundary_columns(at, above)),
    );
    at.len() - r_p - r_up
}

fn chain_vector(table: &FaceTable, c: &Chain) -> Result<(Vec<(u32, BigInt)>, BigInt)> {
    let mut den = BigInt::one();
    for (_, q) in c.terms() {
        den = den.lcm(q.denom());
    }
    let mut v = Vec::with_capacity(c.len());
    for (s, q) in c.terms() {
        let i = table.index_of(s.vertices()).ok_or_else(|| TopoError::NotAFace(s.vertices().to_vec()))?;
        v.push((i as u32, q.numer() * (&den / q.denom())));
    }
    v.sort_by_key(|e| e.0);
    Ok((v, den))
}

/// Image of ∂_{p+1} inside the p-chains of a complex, prepared for repeated
/// membership queries. Optionally tracks preimages.
pub struct BoundaryImage<'a> {
    lower: &'a FaceTable,
    upper: Option<&'a FaceTable>,
    echelon: Echelon,
    witness: bool,
}

impl<'a> BoundaryImage<'a> {
    pub fn new(k: &'a SimplicialComplex, p: usize, witness: bool) -> Result<Self> {
        let top = k.top_dim();
        if p as isize > top {
            return Err(TopoError::Domain { dim: p as isize, top });
        }
        if !k.is_complete() && p as isize >= top {
            return Err(TopoError::Domain { dim: p as isize + 1, top });
        }
        let lower = k.faces(p as isize).expect("within range");
        Ok(Self::from_tables(lower, k.faces(p as isize + 1), witness))
    }

    /// Image of the boundary from `upper` into `lower` (widths w+1 and w).
    pub fn from_tables(lower: &'a FaceTable, upper: Option<&'a FaceTable>, witness: bool) -> Self {
        let rows = lower.len();
        let mut cols = match upper {
            Some(u) if !u.is_empty() => boundary_columns(lower, u),
            _ => Vec::new(),
        };
        if witness {
            for (j, col) in cols.iter_mut().enumerate() {
                col.push(((rows + j) as u32, 1));
            }
        }
        let dim = if witness { rows + cols.len() } else { rows };
        let echelon = Echelon::new(dim, &cols, Some(rows));
        BoundaryImage { lower, upper, echelon, witness }
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    fn rows(&self) -> usize {
        self.lower.len()
    }

    /// Canonical representative of the class of `c` modulo the image: equal
    /// outputs iff the chains differ by a boundary.
    pub fn normal_form(&self, c: &Chain) -> Result<Vec<(u32, BigRational)>> {
        let (v, den) = self.vector(c)?;
        let r = self.echelon.reduce(&v);
        let total = &r.scale * den;
        Ok(r
            .entries
            .into_iter()
            .filter(|(i, _)| (*i as usize) < self.rows())
            .map(|(i, x)| (i, BigRational::new(x, total.clone())))
            .collect())
    }

    pub fn contains(&self, c: &Chain) -> Result<bool> {
        Ok(self.normal_form(c)?.is_empty())
    }

    fn vector(&self, c: &Chain) -> Result<(Vec<(u32, BigInt)>, BigInt)> {
        let p = self.lower.width() as isize - 1;
        if let Some(d) = c.dim().filter(|&d| d != p) {
            return Err(TopoError::Domain { dim: d, top: p + 1 });
        }
        chain_vector(self.lower, c)
    }

    /// A (p+1)-chain whose boundary is `c`, if one exists. Requires the
    /// image to have been built with `witness`.
    pub fn preimage(&self, c: &Chain) -> Result<Option<Chain>> {
        assert!(self.witness, "preimage needs witness tracking");
        let (v, den) = self.vector(c)?;
        let r = self.echelon.reduce(&v);
        if !r.vanishes_below(self.rows()) {
            return Ok(None);
        }
        let total = -(&r.scale * den);
        let mut psi = Chain::zero();
        for (i, x) in r.entries {
            let j = i as usize - self.rows();
            let s = Simplex::sorted(self.upper.expect("nonempty image").get(j).to_vec());
            psi.add_term(s, BigRational::new(x, total.clone()));
        }
        Ok(Some(psi))
    }
}

/// A chain Ψ with ∂Ψ = c, or `None` when c is not a boundary.
pub fn solve_boundary_membership(k: &SimplicialComplex, c: &Chain) -> Result<Option<Chain>> {
    if !c.boundary().is_zero() {
        return Err(TopoError::NotCycle);
    }
    if c.is_zero() {
        return Ok(Some(Chain::zero()));
    }
    let p = c.dim().expect("nonzero chain");
    BoundaryImage::new(k, p as usize, true)?.preimage(c)
}

/// Whether every coefficient of a rational vector is an integer.
pub fn is_integral(v: &[(u32, BigRational)]) -> bool {
    v.iter().all(|(_, q)| q.is_integer())
}

/// Largest absolute numerator among the coefficients.
pub fn max_abs(v: &[(u32, BigRational)]) -> BigRational {
    v.iter().map(|(_, q)| q.abs()).fold(BigRational::zero(), |a, b| if b > a { b } else { a })
}
