//! Hard-core fermions on a graph. Fermion-number sectors are spanned by
//! independent sets, and the zero-energy states of sector p match the
//! reduced homology of the independence complex in degree p − 1.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use topo::complex::enumerate_cliques;
use topo::homology::boundary_columns;
use topo::{exec, linalg, Exec, FaceTable, Graph};

#[derive(Debug, Error)]
pub enum SusyError {
    #[error("{states} independent sets exceed the cap of {cap}")]
    Resource { states: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, SusyError>;

/// Largest number of basis states built by default.
pub const DEFAULT_STATE_CAP: usize = 1 << 18;

/// Square integer matrix stored as sorted sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorMatrix {
    pub dim: usize,
    pub columns: Vec<Vec<(u32, i64)>>,
}

impl SectorMatrix {
    fn from_entries(dim: usize, entries: BTreeMap<(u32, u32), i64>) -> SectorMatrix {
        let mut columns = vec![Vec::new(); dim];
        for ((r, c), v) in entries {
            if v != 0 {
                columns[c as usize].push((r, v));
            }
        }
        SectorMatrix { dim, columns }
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.columns[col].binary_search_by_key(&(row as u32), |e| e.0).map_or(0, |i| self.columns[col][i].1)
    }

    /// Exact rank by direct elimination; fine for small sectors, slow once
    /// entries grow (see [`groundspace_dim`]).
    pub fn rank(&self) -> usize {
        linalg::rank(self.dim, &self.columns)
    }

    pub fn kernel_dim(&self) -> usize {
        self.dim - self.rank()
    }

    pub fn is_symmetric(&self) -> bool {
        self.columns.iter().enumerate().all(|(c, col)| col.iter().all(|&(r, v)| self.get(c, r as usize) == v))
    }

    /// xᵀ M x.
    pub fn quadratic_form(&self, x: &[i64]) -> i128 {
        let mut s = 0i128;
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                s += x[r as usize] as i128 * v as i128 * x[c] as i128;
            }
        }
        s
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.dim]; self.dim];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                d[r as usize][c] = v;
            }
        }
        d
    }
}

/// Basis of every fermion-number sector: sector p ≥ 1 lists the
/// independent sets of size p in lexicographic order; sector 0 holds only
/// the empty set.
pub struct Sectors {
    /// `tables[p - 1]` is sector p
    tables: Vec<FaceTable>,
}

impl Sectors {
    pub fn new(g: &Graph, cap: usize, exec: Exec) -> Result<Sectors> {
        let n = g.vertex_count();
        let (found, _) = enumerate_cliques(&g.complement(), 1, n.max(1), exec);
        let tables: Vec<FaceTable> = found.into_iter().take_while(|t| !t.is_empty()).collect();
        let states: usize = 1 + tables.iter().map(FaceTable::len).sum::<usize>();
        if states > cap {
            return Err(SusyError::Resource { states, cap });
        }
        Ok(Sectors { tables })
    }

    /// Sector dimensions for p = 0, 1, …, largest independent set.
    pub fn dims(&self) -> Vec<usize> {
        (0..=self.tables.len()).map(|p| self.len(p)).collect()
    }

    /// Independent sets of size p, in basis order.
    pub fn states(&self, p: usize) -> Vec<&[u32]> {
        match p {
            0 => vec![&[]],
            _ => self.tables.get(p - 1).map_or_else(Vec::new, |t| t.iter().collect()),
        }
    }

    fn index(&self, set: &[u32]) -> Option<usize> {
        match set.len() {
            0 => Some(0),
            p => self.tables.get(p - 1)?.index_of(set),
        }
    }

    fn len(&self, p: usize) -> usize {
        match p {
            0 => 1,
            _ => self.tables.get(p - 1).map_or(0, FaceTable::len),
        }
    }

    /// The supercharge from sector p to sector p − 1, which is the boundary
    /// map of the independence complex augmented onto the empty face.
    pub fn supercharge(&self, p: usize) -> Vec<Vec<(u32, i64)>> {
        match p {
            0 => Vec::new(),
            1 => (0..self.len(1)).map(|_| vec![(0, 1)]).collect(),
            _ => match self.tables.get(p - 1) {
                Some(upper) => boundary_columns(&self.tables[p - 2], upper),
                None => Vec::new(),
            },
        }
    }
}

/// Q Q† + Q† Q on sector p from the boundary maps:
/// ∂_pᵀ ∂_p + ∂_{p+1} ∂_{p+1}ᵀ.
pub fn boundary_form(s: &Sectors, p: usize) -> SectorMatrix {
    let dim = s.len(p);
    let mut e: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    // ∂ᵀ∂: columns of ∂_p meeting in a common row
    let down = s.supercharge(p);
    let mut by_row: BTreeMap<u32, Vec<(u32, i64)>> = BTreeMap::new();
    for (c, col) in down.iter().enumerate() {
        for &(r, v) in col {
            by_row.entry(r).or_default().push((c as u32, v));
        }
    }
    for entries in by_row.values() {
        for &(i, a) in entries {
            for &(j, b) in entries {
                *e.entry((i, j)).or_insert(0) += a * b;
            }
        }
    }
    // ∂∂ᵀ: rows of ∂_{p+1} meeting in a common column
    for col in s.supercharge(p + 1) {
        for &(i, a) in &col {
            for &(j, b) in &col {
                *e.entry((i, j)).or_insert(0) += a * b;
            }
        }
    }
    SectorMatrix::from_entries(dim, e)
}

/// Σ_{(i,j) ∈ E} P_i a_i† a_j P_j + Σ_i P_i on sector p, where P_i projects
/// onto configurations with every neighbour of i empty. Fermion operators
/// carry the Jordan–Wigner sign of the occupied sites before them.
pub fn hopping_form(g: &Graph, s: &Sectors, p: usize) -> SectorMatrix {
    let dim = s.len(p);
    let n = g.vertex_count() as u32;
    let free = |occ: &[u32], i: u32| occ.iter().all(|&u| !g.has_edge(u, i));
    let sign_before = |occ: &[u32], v: u32| if occ.iter().filter(|&&u| u < v).count() % 2 == 0 { 1 } else { -1 };
    let mut e: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for (c, occ) in s.states(p).into_iter().enumerate() {
        let diag = (0..n).filter(|&i| free(occ, i)).count() as i64;
        e.insert((c as u32, c as u32), diag);
        for &j in occ {
            let sj = sign_before(occ, j);
            let rest: Vec<u32> = occ.iter().copied().filter(|&u| u != j).collect();
            for i in (0..n).filter(|&i| g.has_edge(i, j) && free(&rest, i) && !rest.contains(&i)) {
                let mut next = rest.clone();
                next.push(i);
                next.sort_unstable();
                let r = s.index(&next).expect("independent set in basis");
                *e.entry((r as u32, c as u32)).or_insert(0) += sign_before(&rest, i) * sj;
            }
        }
    }
    SectorMatrix::from_entries(dim, e)
}

/// Dᵀ for the stacked map D = [∂_p ; ∂_{p+1}ᵀ] out of sector p, as columns
/// over sector p: the rows of ∂_p, then the columns of ∂_{p+1}. The sector
/// Hamiltonian is DᵀD, and these ±1 columns keep exact elimination cheap
/// where eliminating DᵀD itself suffers coefficient growth.
pub fn stacked_supercharges(s: &Sectors, p: usize) -> Vec<Vec<(u32, i64)>> {
    let mut cols = vec![Vec::new(); if p == 0 { 0 } else { s.len(p - 1) }];
    for (c, col) in s.supercharge(p).iter().enumerate() {
        for &(r, v) in col {
            cols[r as usize].push((c as u32, v));
        }
    }
    cols.extend(s.supercharge(p + 1));
    cols
}

/// Zero-energy dimension of sector p: dim ker DᵀD = dim ker D over the reals.
pub fn groundspace_dim(s: &Sectors, p: usize) -> usize {
    s.len(p) - linalg::rank(s.len(p), &stacked_supercharges(s, p))
}

/// Zero-energy dimension of every sector.
pub fn susy_groundspace_dims(g: &Graph, cap: usize, ex: Exec) -> Result<Vec<usize>> {
    let s = Sectors::new(g, cap, ex)?;
    Ok(exec::map_range(ex, s.dims().len(), |p| groundspace_dim(&s, p)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SusyReport {
    pub sector_dims: Vec<usize>,
    pub groundspace_dims: Vec<usize>,
    /// β̃_{p−1} of the independence complex, listed by p
    pub reduced_betti_shifted: Vec<usize>,
    pub forms_agree: bool,
    pub matches_homology: bool,
}

/// β̃_{p−1} from ranks of the supercharges: dim ker ∂_{p} − rank ∂_{p+1}.
fn shifted_reduced_betti(s: &Sectors, ex: Exec) -> Vec<usize> {
    let dims = s.dims();
    let ranks = exec::map_range(ex, dims.len() + 1, |p| if p == 0 { 0 } else { linalg::rank(s.len(p - 1), &s.supercharge(p)) });
    (0..dims.len()).map(|p| dims[p] - ranks[p] - ranks[p + 1]).collect()
}

/// Both Hamiltonian forms on every sector, their kernels, and the reduced
/// Betti numbers they should reproduce.
pub fn susy_check(g: &Graph, cap: usize, ex: Exec) -> Result<SusyReport> {
    let s = Sectors::new(g, cap, ex)?;
    let sector_dims = s.dims();
    let per = exec::map_range(ex, sector_dims.len(), |p| {
        let agree = boundary_form(&s, p) == hopping_form(g, &s, p);
        (groundspace_dim(&s, p), agree)
    });
    let groundspace_dims: Vec<usize> = per.iter().map(|x| x.0).collect();
    let reduced_betti_shifted = shifted_reduced_betti(&s, ex);
    Ok(SusyReport {
        matches_homology: groundspace_dims == reduced_betti_shifted,
        forms_agree: per.iter().all(|x| x.1),
        sector_dims,
        groundspace_dims,
        reduced_betti_shifted,
    })
}
