//! Finite abstract simplicial complexes stored as per-dimension face tables,
//! and clique / independence complexes of graphs.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::chain::Simplex;
use crate::error::{Result, TopoError};
use crate::exec::{self, Exec};
use crate::graph::Graph;
use crate::limits::Limits;

/// All faces of one dimension, flattened, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FaceTable {
    width: usize,
    verts: Vec<u32>,
}

impl FaceTable {
    pub fn empty(width: usize) -> FaceTable {
        FaceTable { width, verts: Vec::new() }
    }

    /// Build from faces in any order; each face is sorted, duplicates removed.
    pub fn from_faces(width: usize, faces: impl IntoIterator<Item = Vec<u32>>) -> FaceTable {
        let mut fs: Vec<Vec<u32>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f
            })
            .collect();
        fs.sort_unstable();
        fs.dedup();
        assert!(fs.iter().all(|f| f.len() == width), "face width mismatch");
        FaceTable { width, verts: fs.concat() }
    }

    fn from_sorted_flat(width: usize, verts: Vec<u32>) -> FaceTable {
        FaceTable { width, verts }
    }

    /// Number of vertices per face (dimension + 1).
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        if self.width == 0 {
            0
        } else {
            self.verts.len() / self.width
        }
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.verts[i * self.width..(i + 1) * self.width]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.verts.chunks_exact(self.width.max(1))
    }

    pub fn index_of(&self, face: &[u32]) -> Option<usize> {
        if face.len() != self.width {
            return None;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    names: Vec<String>,
    faces: Vec<FaceTable>,
    complete: bool,
}

impl SimplicialComplex {
    /// Assemble from per-dimension tables (index = dimension). `complete`
    /// records whether nothing above the last table was left out.
    pub fn from_tables(names: Vec<String>, mut faces: Vec<FaceTable>, complete: bool) -> Self {
        while faces.last().is_some_and(FaceTable::is_empty) && complete {
            faces.pop();
        }
        SimplicialComplex { names, faces, complete }
    }

    /// Downward closure of the given faces (vertex ids index into `names`).
    pub fn from_maximal_faces(names: Vec<String>, maximal: &[Vec<u32>]) -> Result<Self> {
        let top = maximal.iter().map(Vec::len).max().unwrap_or(0);
        let mut by_width: Vec<Vec<Vec<u32>>> = vec![Vec::new(); top + 1];
        for f in maximal {
            if f.iter().any(|&v| v as usize >= names.len()) {
                return Err(TopoError::Parse(format!("face {f:?} uses an undeclared vertex")));
            }
            let mut f = f.clone();
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(TopoError::Parse(format!("face {f:?} repeats a vertex")));
            }
            let k = f.len();
            // every nonempty subset
            for mask in 1u64..(1u64 << k) {
                let sub: Vec<u32> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                by_width[sub.len()].push(sub);
            }
        }
        let mut faces: Vec<FaceTable> =
            (1..=top).map(|w| FaceTable::from_faces(w, std::mem::take(&mut by_width[w]))).collect();
        // isolated vertices declared in `names` but absent from faces are
        // still 0-simplices
        if faces.is_empty() {
            faces.push(FaceTable::empty(1));
        }
        faces[0] = FaceTable::from_faces(1, (0..names.len() as u32).map(|v| vec![v]));
        Ok(SimplicialComplex::from_tables(names, faces, true))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Highest materialized dimension (−1 for the void complex).
    pub fn top_dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// False when faces above `top_dim` exist but were not built.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn faces(&self, dim: isize) -> Option<&FaceTable> {
        if dim < 0 {
            return None;
        }
        self.faces.get(dim as usize)
    }

    pub fn face_count(&self, dim: isize) -> usize {
        self.faces(dim).map_or(0, FaceTable::len)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(FaceTable::len).collect()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.faces(s.dim()).is_some_and(|t| t.index_of(s.vertices()).is_some())
    }

    /// Graph on the vertices with the edges of the complex.
    pub fn one_skeleton(&self) -> Graph {
        let mut g = Graph::new(self.names.iter().cloned()).expect("names are distinct");
        if let Some(edges) = self.faces(1) {
            for e in edges.iter() {
                g.add_edge(e[0], e[1]).expect("valid edge");
            }
        }
        g
    }

    /// Every clique of the 1-skeleton is a face.
    pub fn is_flag(&self, exec: Exec) -> bool {
        let g = self.one_skeleton();
        let top = self.top_dim().max(1) as usize;
        let (tables, more) = enumerate_cliques(&g, 1, top + 1, exec);
        !more && tables.iter().enumerate().all(|(d, t)| t.len() == self.face_count(d as isize))
    }

    pub fn maximal_faces(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for d in 0..self.faces.len() {
            let mut covered = vec![false; self.faces[d].len()];
            if let Some(up) = self.faces.get(d + 1) {
                for f in up.iter() {
                    for skip in 0..f.len() {
                        let sub: Vec<u32> =
                            f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                        if let Some(i) = self.faces[d].index_of(&sub) {
                            covered[i] = true;
                        }
                    }
                }
            }
            for (i, c) in covered.iter().enumerate() {
                if !c {
                    out.push(self.faces[d].get(i).to_vec());
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            vertices: Some(self.names.clone()),
            maximal_faces: self
                .maximal_faces()
                .into_iter()
                .map(|f| f.iter().map(|&v| self.names[v as usize].clone()).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &ComplexJson) -> Result<Self> {
        let names: Vec<String> = match &j.vertices {
            Some(v) => v.clone(),
            None => {
                let mut seen = Vec::new();
                for f in &j.maximal_faces {
                    for v in f {
                        if !seen.contains(v) {
                            seen.push(v.clone());
                        }
                    }
                }
                seen
            }
        };
        let lookup = |n: &String| {
            names
                .iter()
                .position(|m| m == n)
                .map(|i| i as u32)
                .ok_or_else(|| TopoError::Parse(format!("undeclared vertex `{n}`")))
        };
        let faces: Vec<Vec<u32>> = j
            .maximal_faces
            .iter()
            .map(|f| f.iter().map(lookup).collect::<Result<Vec<u32>>>())
            .collect::<Result<_>>()?;
        SimplicialComplex::from_maximal_faces(names, &faces)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    pub maximal_faces: Vec<Vec<String>>,
}

/// Cliques with `min_size..=max_size` vertices in lexicographic order per
/// size, plus whether any clique larger than `max_size` exists.
///
/// Each clique is grown only by common neighbours ordered after its last
/// vertex, so nothing beyond `max_size` vertices is ever built.
pub fn enumerate_cliques(
    g: &Graph,
    min_size: usize,
    max_size: usize,
    exec: Exec,
) -> (Vec<FaceTable>, bool) {
    let min_size = min_size.max(1);
    let n = g.vertex_count();
    let sizes = max_size.saturating_sub(min_size) + 1;
    if max_size < min_size {
        return (Vec::new(), false);
    }
    let per_root = exec::map_range(exec, n, |v| {
        let mut acc: Vec<Vec<u32>> = vec![Vec::new(); sizes];
        let mut more = false;
        let mut stack = vec![v as u32];
        let cand = g.neighbors(v as u32).above(v);
        extend(g, &mut stack, &cand, min_size, max_size, &mut acc, &mut more);
        (acc, more)
    });
    let mut tables = vec![Vec::new(); sizes];
    let mut more = false;
    for (acc, m) in per_root {
        more |= m;
        for (t, a) in tables.iter_mut().zip(acc) {
            t.extend(a);
        }
    }
    let tables = tables
        .into_iter()
        .enumerate()
        .map(|(i, flat)| FaceTable::from_sorted_flat(min_size + i, flat))
        .collect();
    (tables, more)
}

fn extend(
    g: &Graph,
    stack: &mut Vec<u32>,
    cand: &BitSet,
    min_size: usize,
    max_size: usize,
    acc: &mut [Vec<u32>],
    more: &mut bool,
) {
    let k = stack.len();
    if k >= min_size {
        acc[k - min_size].extend_from_slice(stack);
    }
    if k == max_size {
        if !cand.is_empty() {
            *more = true;
        }
        return;
    }
    for w in cand.iter() {
        let next = cand.and(g.neighbors(w as u32)).above(w);
        stack.push(w as u32);
        extend(g, stack, &next, min_size, max_size, acc, more);
        stack.pop();
    }
}

/// Clique complex truncated at `max_dim`.
pub fn clique_complex(g: &Graph, max_dim: usize, limits: &Limits, exec: Exec) -> Result<SimplicialComplex> {
    if max_dim > limits.max_dim {
        return Err(TopoError::Resource(format!(
            "requested dimension {max_dim} exceeds the cap {}",
            limits.max_dim
        )));
    }
    let (tables, more) = enumerate_cliques(g, 1, max_dim + 1, exec);
    Ok(SimplicialComplex::from_tables(g.names().to_vec(), tables, !more))
}

/// Independence complex: the clique complex of the complement.
pub fn independence_complex(
    g: &Graph,
    max_dim: usize,
    limits: &Limits,
    exec: Exec,
) -> Result<SimplicialComplex> {
    clique_complex(&g.complement(), max_dim, limits, exec)
}

/// Whole clique complex, provided its dimension stays under the cap.
pub fn full_clique_complex(g: &Graph, limits: &Limits, exec: Exec) -> Result<SimplicialComplex> {
    let c = clique_complex(g, limits.max_dim, limits, exec)?;
    if !c.is_complete() {
        return Err(TopoError::Resource(format!(
            "clique complex has dimension above the cap {}",
            limits.max_dim
        )));
    }
    Ok(c)
}
