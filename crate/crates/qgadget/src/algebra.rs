//! Composition of gadgets: sums of projectors, tensor factors.

use std::collections::{BTreeSet, HashMap};
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use topo::{linalg, Graph};

use crate::error::{GadgetError, Result};
use crate::gadget::GadgetGraph;
use crate::register::{parse_vertex, vertex_name, Corner};
use crate::state::IntState;

/// Which pairs of mediators from the two summands get joined by graph edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step4 {
    /// every remaining mediator of one summand to every one of the other
    #[default]
    Full,
    /// only pairs whose supports share a qubit
    OverlappingSupports,
    /// no cross edges; known to break for entangled summands
    Omit,
}

impl FromStr for Step4 {
    type Err = GadgetError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Step4::Full),
            "overlapping" => Ok(Step4::OverlappingSupports),
            "omit" => Ok(Step4::Omit),
            _ => Err(GadgetError::Construction(format!("unknown composition policy `{s}`"))),
        }
    }
}

pub fn add_gadgets(g1: &GadgetGraph, g2: &GadgetGraph) -> Result<GadgetGraph> {
    add_gadgets_with(g1, g2, Step4::Full)
}

/// Sum of two gadgets over the union of their qubits. Single-mediator
/// gadgets with the same qubit-vertex adjacency are merged; all other
/// mediators are cross-connected according to `step4`. Merging mediators
/// of larger gadgets can identify unrelated faces of their fillings, so
/// those are never merged. Targets are extended to the union by identity and
/// reduced to an independent set.
pub fn add_gadgets_with(g1: &GadgetGraph, g2: &GadgetGraph, step4: Step4) -> Result<GadgetGraph> {
    let mut sum = GadgetSum::new(&[], step4, true);
    sum.add(g1)?;
    sum.add(g2)?;
    Ok(sum.finish())
}

/// Running sum of many gadgets, indexed so that each addition costs time
/// proportional to the added gadget and the mediators it must be joined to.
pub struct GadgetSum {
    step4: Step4,
    qubits: BTreeSet<usize>,
    mediators: Vec<String>,
    supports: Vec<BTreeSet<usize>>,
    index: HashMap<String, usize>,
    /// qubit-vertex neighbours of each mediator; doubles as the merge key
    links: Vec<BTreeSet<(usize, Corner)>>,
    /// whether the mediator was a whole gadget by itself
    solo: Vec<bool>,
    /// mediator–mediator graph edges, possibly with repeats
    adj: Vec<Vec<u32>>,
    by_key: HashMap<BTreeSet<(usize, Corner)>, Vec<usize>>,
    by_qubit: HashMap<usize, Vec<usize>>,
    /// targets in (qubits, state) form, if tracked
    targets: Option<Vec<(Vec<usize>, IntState)>>,
    log: Vec<String>,
}

/// Adjacency-list graph for sums too large for a dense bitset graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseGraph {
    pub names: Vec<String>,
    pub adj: Vec<Vec<u32>>,
}

impl SparseGraph {
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Same JSON shape as a dense graph, without building one.
    pub fn to_json(&self) -> topo::graph::GraphJson {
        let edges = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v as usize > u).map(move |&v| (u, v as usize)))
            .map(|(u, v)| [self.names[u].clone(), self.names[v].clone()])
            .collect();
        topo::graph::GraphJson { vertices: self.names.clone(), edges }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let mut g = Graph::new(self.names.iter().cloned())?;
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs.iter().filter(|&&v| v as usize > u) {
                g.add_edge(u as u32, v)?;
            }
        }
        Ok(g)
    }
}

impl GadgetSum {
    /// Start from bare triangles on `qubits`. With `track_targets` off the
    /// result has no targets, which avoids extending every target over the
    /// whole register.
    pub fn new(qubits: &[usize], step4: Step4, track_targets: bool) -> GadgetSum {
        GadgetSum {
            step4,
            qubits: qubits.iter().copied().collect(),
            mediators: Vec::new(),
            supports: Vec::new(),
            index: HashMap::new(),
            links: Vec::new(),
            solo: Vec::new(),
            adj: Vec::new(),
            by_key: HashMap::new(),
            by_qubit: HashMap::new(),
            targets: track_targets.then(Vec::new),
            log: Vec::new(),
        }
    }

    pub fn mediator_count(&self) -> usize {
        self.mediators.len()
    }

    pub fn add(&mut self, g: &GadgetGraph) -> Result<()> {
        if let Some(m) = g.mediators.iter().find(|m| self.index.contains_key(*m)) {
            return Err(GadgetError::Construction(format!("mediator `{m}` occurs in both summands")));
        }
        let local: HashMap<&str, usize> = g.mediators.iter().enumerate().map(|(i, m)| (m.as_str(), i)).collect();
        let mut links = vec![BTreeSet::new(); g.mediators.len()];
        let mut pairs = Vec::new();
        for (u, v) in &g.edges {
            match (local.get(u.as_str()), local.get(v.as_str())) {
                (Some(&i), Some(&j)) => pairs.push((i, j)),
                (Some(&i), None) | (None, Some(&i)) => {
                    let q = if local.contains_key(u.as_str()) { v } else { u };
                    let parsed = parse_vertex(q).ok_or_else(|| GadgetError::Construction(format!("unknown vertex `{q}`")))?;
                    links[i].insert(parsed);
                }
                (None, None) => return Err(GadgetError::Construction(format!("edge {u}–{v} joins two qubit vertices"))),
            }
        }

        let before = self.mediators.len();
        let mut global = Vec::with_capacity(g.mediators.len());
        let mut taken: BTreeSet<usize> = BTreeSet::new();
        let mut fresh = Vec::new();
        for (m, key) in g.mediators.iter().zip(links) {
            let support: BTreeSet<usize> =
                g.supports.get(m).map_or_else(|| g.qubits.iter().copied().collect(), |s| s.iter().copied().collect());
            let hit = if g.mediators.len() == 1 {
                self.by_key.get(&key).and_then(|c| c.iter().copied().find(|i| self.solo[*i] && *i < before && !taken.contains(i)))
            } else {
                None
            };
            let i = match hit {
                Some(i) => {
                    taken.insert(i);
                    i
                }
                None => {
                    let i = self.mediators.len();
                    self.mediators.push(m.clone());
                    self.index.insert(m.clone(), i);
                    self.supports.push(BTreeSet::new());
                    self.links.push(key.clone());
                    self.solo.push(g.mediators.len() == 1);
                    self.adj.push(Vec::new());
                    self.by_key.entry(key).or_default().push(i);
                    fresh.push(i);
                    i
                }
            };
            for q in support {
                if self.supports[i].insert(q) {
                    self.by_qubit.entry(q).or_default().push(i);
                }
            }
            global.push(i);
        }
        self.qubits.extend(&g.qubits);
        for (i, j) in pairs {
            self.join(global[i], global[j]);
        }

        let mut cross = 0;
        for &b in &fresh {
            let partners: Vec<usize> = match self.step4 {
                Step4::Full => (0..before).collect(),
                Step4::OverlappingSupports => {
                    let mut p: Vec<usize> = self.supports[b]
                        .iter()
                        .flat_map(|q| self.by_qubit.get(q).into_iter().flatten().copied())
                        .filter(|&i| i < before)
                        .collect();
                    p.sort_unstable();
                    p.dedup();
                    p
                }
                Step4::Omit => Vec::new(),
            };
            for a in partners.into_iter().filter(|a| !taken.contains(a)) {
                self.join(a, b);
                cross += 1;
            }
        }

        if let Some(t) = self.targets.as_mut() {
            t.extend(g.targets.iter().map(|s| (g.qubits.clone(), s.clone())));
        }
        self.log.extend(g.construction_log.iter().cloned());
        if before > 0 {
            self.log.push(format!(
                "added gadget on {:?}: {} merged mediators, {cross} cross edges ({:?})",
                g.qubits,
                taken.len(),
                self.step4
            ));
        }
        Ok(())
    }

    fn join(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a].push(b as u32);
            self.adj[b].push(a as u32);
        }
    }

    fn deduped(&mut self) {
        for nbrs in &mut self.adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
    }

    pub fn finish(mut self) -> GadgetGraph {
        self.deduped();
        let qubits: Vec<usize> = self.qubits.iter().copied().collect();
        let mut out = GadgetGraph::empty(&qubits);
        for (i, m) in self.mediators.iter().enumerate() {
            out.add_mediator(m.clone(), &self.supports[i].iter().copied().collect::<Vec<_>>());
            for &(q, c) in &self.links[i] {
                out.add_edge(m.clone(), vertex_name(q, c));
            }
            for &j in self.adj[i].iter().filter(|&&j| j as usize > i) {
                out.add_edge(m.clone(), self.mediators[j as usize].clone());
            }
        }
        if let Some(ts) = self.targets.take() {
            let extended = ts.iter().flat_map(|(from, t)| extend_identity(t, from, &qubits)).collect();
            out.targets = independent(extended);
        }
        out.construction_log = self.log;
        out
    }

    /// The summed graph as adjacency lists: qubit triangles in ascending
    /// qubit order (x, a, b), then mediators in order of addition.
    pub fn finish_sparse(mut self) -> SparseGraph {
        self.deduped();
        let qubits: Vec<usize> = self.qubits.iter().copied().collect();
        let slot: HashMap<usize, usize> = qubits.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let qv = |q: usize, c: Corner| (3 * slot[&q] + Corner::ALL.iter().position(|&d| d == c).expect("corner")) as u32;
        let base = 3 * qubits.len();
        let mut names: Vec<String> = qubits.iter().flat_map(|&q| Corner::ALL.map(|c| vertex_name(q, c))).collect();
        names.extend(self.mediators.iter().cloned());
        let mut adj = vec![Vec::new(); names.len()];
        for s in 0..qubits.len() {
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                adj[3 * s + a].push((3 * s + b) as u32);
                adj[3 * s + b].push((3 * s + a) as u32);
            }
        }
        for (i, links) in self.links.iter().enumerate() {
            for &(q, c) in links {
                adj[base + i].push(qv(q, c));
                adj[qv(q, c) as usize].push((base + i) as u32);
            }
            adj[base + i].extend(self.adj[i].iter().map(|&j| (base + j as usize) as u32));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        SparseGraph { names, adj }
    }
}

/// Every extension of `t` (over `from`) to `to` ⊇ `from` with computational
/// basis states on the new qubits.
fn extend_identity(t: &IntState, from: &[usize], to: &[usize]) -> Vec<IntState> {
    let mut out = vec![t.clone()];
    for (pos, q) in to.iter().enumerate() {
        if !from.contains(q) {
            out = out.iter().flat_map(|s| [s.insert_bit(pos, 0), s.insert_bit(pos, 1)]).collect();
        }
    }
    out
}

/// Greedy maximal linearly independent subsequence.
fn independent(states: Vec<IntState>) -> Vec<IntState> {
    let mut kept: Vec<IntState> = Vec::new();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for s in states {
        let v: Vec<BigRational> = s.to_dense().into_iter().map(|c| BigRational::from_integer(c.into())).collect();
        rows.push(v);
        if linalg::rank_rational(&rows) == rows.len() {
            kept.push(s);
        } else {
            rows.pop();
        }
    }
    kept
}

fn insertion_slot(g: &GadgetGraph, qubit: usize) -> Result<usize> {
    match g.qubits.binary_search(&qubit) {
        Ok(_) => Err(GadgetError::QubitCollision(qubit)),
        Err(pos) => Ok(pos),
    }
}

/// Tensor with |bit⟩ on a fresh qubit: every mediator is joined in the graph
/// to that qubit's corner off the bit's cycle.
pub fn tensor_classical(g: &GadgetGraph, qubit: usize, bit: u8) -> Result<GadgetGraph> {
    let pos = insertion_slot(g, qubit)?;
    let mut out = g.clone();
    out.qubits.insert(pos, qubit);
    let corner = vertex_name(qubit, Corner::off_cycle(bit));
    for m in &g.mediators {
        out.add_edge(m.clone(), corner.clone());
        let s = out.supports.entry(m.clone()).or_insert_with(|| g.qubits.clone());
        s.push(qubit);
        s.sort_unstable();
    }
    out.targets = g.targets.iter().map(|t| t.insert_bit(pos, bit)).collect();
    out.log(format!("tensor |{bit}> on qubit {qubit}"));
    Ok(out)
}

/// Tensor with the identity on a fresh qubit: its triangle stays disjoint
/// and both extensions of every target are lifted.
pub fn tensor_identity(g: &GadgetGraph, qubit: usize) -> Result<GadgetGraph> {
    let pos = insertion_slot(g, qubit)?;
    let mut out = g.clone();
    out.qubits.insert(pos, qubit);
    out.targets = g.targets.iter().flat_map(|t| [t.insert_bit(pos, 0), t.insert_bit(pos, 1)]).collect();
    out.log(format!("tensor identity on qubit {qubit}"));
    Ok(out)
}

/// Exchange the a and b corners of `qubit`: swaps its |0⟩ and |1⟩ cycles,
/// so every target has that bit flipped.
pub fn flip_qubit(g: &GadgetGraph, qubit: usize) -> Result<GadgetGraph> {
    let slot = g.slot(qubit).ok_or_else(|| GadgetError::Construction(format!("qubit {qubit} is not in the gadget")))?;
    let (a, b) = (vertex_name(qubit, Corner::A), vertex_name(qubit, Corner::B));
    let swap = |v: &String| {
        if *v == a {
            b.clone()
        } else if *v == b {
            a.clone()
        } else {
            v.clone()
        }
    };
    let mut out = g.clone();
    out.edges.clear();
    for (u, v) in &g.edges {
        out.add_edge(swap(u), swap(v));
    }
    let mut mask = vec![false; g.qubits.len()];
    mask[slot] = true;
    out.targets = g.targets.iter().map(|t| t.flip(&mask)).collect();
    out.log(format!("relabel a/b on qubit {qubit}"));
    Ok(out)
}
