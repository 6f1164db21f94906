//! Closed pseudo-surfaces with labelled vertices, and their filling.
//!
//! A label names a vertex of the surface; several labels may sit over the
//! same qubit vertex (copies made during cutting and gluing). Filling adds one
//! mediator per face, joined in the complex to the qubit vertices under that
//! face, plus an apex mediator joined to every face mediator.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{GadgetError, Result};
use crate::gadget::{ComplexSpec, GadgetGraph};
use crate::register::{mediator_name, Corner};

/// Which face mediators are joined to each other.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum FillPolicy {
    /// faces sharing a ridge; too sparse from three qubits on
    Edge,
    /// faces sharing at least one vertex
    #[default]
    EdgeOrVertex,
    /// faces sharing a ridge, plus a fan triangulating the ring of faces
    /// around every vertex (two-dimensional surfaces only)
    EdgeAndVertexFans,
}

impl std::str::FromStr for FillPolicy {
    type Err = GadgetError;
    fn from_str(s: &str) -> Result<FillPolicy> {
        match s {
            "edge" => Ok(FillPolicy::Edge),
            "edge-or-vertex" => Ok(FillPolicy::EdgeOrVertex),
            "edge-and-fans" => Ok(FillPolicy::EdgeAndVertexFans),
            _ => Err(GadgetError::Construction(format!("unknown fill policy `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Surface {
    faces: Vec<Vec<String>>,
    origin: BTreeMap<String, (usize, Corner)>,
}

impl Surface {
    /// Faces as label lists of equal length; every label needs an origin.
    /// Each ridge must lie on exactly two faces and the faces must be
    /// connected through ridges.
    pub fn new(faces: Vec<Vec<String>>, origin: BTreeMap<String, (usize, Corner)>) -> Result<Surface> {
        let width = faces.first().map_or(0, Vec::len);
        if faces.is_empty() || faces.iter().any(|f| f.len() != width) {
            return Err(GadgetError::Construction("faces must be nonempty and of one dimension".into()));
        }
        for f in &faces {
            if let Some(l) = f.iter().find(|l| !origin.contains_key(*l)) {
                return Err(GadgetError::Construction(format!("label `{l}` has no origin")));
            }
            let set: BTreeSet<&String> = f.iter().collect();
            if set.len() != f.len() {
                return Err(GadgetError::Construction(format!("degenerate face {f:?}")));
            }
        }
        let s = Surface { faces, origin };
        s.check_closed()?;
        Ok(s)
    }

    fn ridges(&self) -> HashMap<Vec<&str>, Vec<usize>> {
        let mut map: HashMap<Vec<&str>, Vec<usize>> = HashMap::new();
        for (i, f) in self.faces.iter().enumerate() {
            for skip in 0..f.len() {
                let mut r: Vec<&str> =
                    f.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, l)| l.as_str()).collect();
                r.sort_unstable();
                map.entry(r).or_default().push(i);
            }
        }
        map
    }

    fn check_closed(&self) -> Result<()> {
        let ridges = self.ridges();
        if let Some((r, fs)) = ridges.iter().find(|(_, fs)| fs.len() != 2) {
            return Err(GadgetError::Construction(format!(
                "ridge {r:?} lies on {} faces; the support is not a closed surface",
                fs.len()
            )));
        }
        let mut adj = vec![Vec::new(); self.faces.len()];
        for fs in ridges.values() {
            adj[fs[0]].push(fs[1]);
            adj[fs[1]].push(fs[0]);
        }
        let mut seen = vec![false; self.faces.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(GadgetError::Construction("surface is not connected".into()));
        }
        Ok(())
    }

    pub fn faces(&self) -> &[Vec<String>] {
        &self.faces
    }

    pub fn origin(&self, label: &str) -> Option<(usize, Corner)> {
        self.origin.get(label).copied()
    }

    pub fn labels(&self) -> BTreeSet<&str> {
        self.faces.iter().flatten().map(String::as_str).collect()
    }

    /// V − E + F for two-dimensional surfaces.
    pub fn euler_characteristic(&self) -> i64 {
        let v = self.labels().len() as i64;
        let mut edges = BTreeSet::new();
        for f in &self.faces {
            for i in 0..f.len() {
                for j in i + 1..f.len() {
                    let (a, b) = (&f[i], &f[j]);
                    edges.insert(if a < b { (a, b) } else { (b, a) });
                }
            }
        }
        v - edges.len() as i64 + self.faces.len() as i64
    }

    fn shared(&self, i: usize, j: usize) -> usize {
        self.faces[i].iter().filter(|l| self.faces[j].contains(l)).count()
    }

    /// Faces around `label` in cyclic order, starting at face `start`.
    pub fn ring(&self, label: &str, start: usize) -> Result<Vec<usize>> {
        let star: Vec<usize> = (0..self.faces.len()).filter(|&i| self.faces[i].iter().any(|l| l == label)).collect();
        if !star.contains(&start) {
            return Err(GadgetError::Construction(format!("face {start} does not contain `{label}`")));
        }
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = star.iter().copied().find(|&j| j != cur && j != prev && self.shared(cur, j) >= 2);
            match next {
                Some(n) if n == start => break,
                Some(n) if order.contains(&n) => {
                    return Err(GadgetError::Construction(format!("faces around `{label}` do not form a disk")))
                }
                Some(n) => {
                    order.push(n);
                    prev = cur;
                    cur = n;
                }
                None => break,
            }
        }
        if order.len() != star.len() {
            return Err(GadgetError::Construction(format!("faces around `{label}` do not form a single ring")));
        }
        Ok(order)
    }

    /// Fill the surface. With `EdgeAndVertexFans`, `fan_start` may pick the
    /// face each vertex fan starts from (given as the face's label set);
    /// otherwise the first face containing the vertex is used.
    pub fn fill(
        &self,
        id: &str,
        qubits: &[usize],
        policy: FillPolicy,
        fan_start: Option<&BTreeMap<String, BTreeSet<String>>>,
    ) -> Result<GadgetGraph> {
        let n = self.faces.len();
        let width = self.faces[0].len();
        let mut links: Vec<BTreeSet<(usize, Corner)>> =
            self.faces.iter().map(|f| f.iter().map(|l| self.origin[l]).collect()).collect();
        links.push(BTreeSet::new()); // apex
        let mut joined: BTreeSet<(usize, usize)> = (0..n).map(|i| (i, n)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let s = self.shared(i, j);
                let join = match policy {
                    FillPolicy::EdgeOrVertex => s >= 1,
                    FillPolicy::Edge | FillPolicy::EdgeAndVertexFans => s + 1 >= width,
                };
                if join {
                    joined.insert((i, j));
                }
            }
        }
        let mut fan_log = Vec::new();
        if policy == FillPolicy::EdgeAndVertexFans {
            if width != 3 {
                return Err(GadgetError::Construction("vertex fans need a two-dimensional surface".into()));
            }
            for label in self.labels() {
                let start = match fan_start.and_then(|m| m.get(label)) {
                    Some(set) => self
                        .faces
                        .iter()
                        .position(|f| f.iter().cloned().collect::<BTreeSet<_>>() == *set)
                        .ok_or_else(|| GadgetError::Construction(format!("no face {set:?} for fan at `{label}`")))?,
                    None => self.faces.iter().position(|f| f.iter().any(|l| l == label)).expect("label occurs"),
                };
                let ring = self.ring(label, start)?;
                for t in 2..ring.len().saturating_sub(1) {
                    let (a, b) = (ring[0].min(ring[t]), ring[0].max(ring[t]));
                    joined.insert((a, b));
                }
                fan_log.push(format!("fan {label} from face {start} over {} faces", ring.len()));
            }
        }
        let names: Vec<String> = (0..=n).map(|i| mediator_name(id, i)).collect();
        let mut g = ComplexSpec { id, qubits, links, joined }.build(&names);
        g.log(format!("filled {n} faces of {id} with apex {}", names[n]));
        for l in fan_log {
            g.log(l);
        }
        Ok(g)
    }
}
