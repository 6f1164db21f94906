//! Graph fragments attached to qubit triangles.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use topo::Graph;

use crate::error::{GadgetError, Result};
use crate::register::{parse_vertex, triangle_graph_on, vertex_name, Corner};
use crate::state::IntState;

/// Mediator vertices plus their graph edges, over a set of qubit slots.
///
/// Triangle edges are implicit. `edges` holds every other graph edge; each
/// involves at least one mediator. Targets are states over `qubits` in
/// ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetGraph {
    pub qubits: Vec<usize>,
    pub mediators: Vec<String>,
    /// qubits each mediator was built for; used when composing gadgets
    #[serde(default)]
    pub supports: BTreeMap<String, Vec<usize>>,
    pub edges: BTreeSet<(String, String)>,
    pub targets: Vec<IntState>,
    #[serde(default)]
    pub construction_log: Vec<String>,
}

fn ordered(u: String, v: String) -> (String, String) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl GadgetGraph {
    /// Bare triangles: no mediators, nothing lifted.
    pub fn empty(qubits: &[usize]) -> GadgetGraph {
        let mut q = qubits.to_vec();
        q.sort_unstable();
        q.dedup();
        GadgetGraph {
            qubits: q,
            mediators: Vec::new(),
            supports: BTreeMap::new(),
            edges: BTreeSet::new(),
            targets: Vec::new(),
            construction_log: Vec::new(),
        }
    }

    pub fn add_mediator(&mut self, name: String, support: &[usize]) {
        let mut s = support.to_vec();
        s.sort_unstable();
        self.supports.insert(name.clone(), s);
        self.mediators.push(name);
    }

    pub fn add_edge(&mut self, u: String, v: String) {
        assert_ne!(u, v, "self-loop");
        self.edges.insert(ordered(u, v));
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        let key = ordered(u.to_string(), v.to_string());
        self.edges.contains(&key)
    }

    pub fn log(&mut self, line: impl Into<String>) {
        self.construction_log.push(line.into());
    }

    /// Slot position of a global qubit index.
    pub fn slot(&self, qubit: usize) -> Option<usize> {
        self.qubits.binary_search(&qubit).ok()
    }

    /// Qubit-vertex neighbours of a mediator.
    pub fn qubit_neighbors(&self, m: &str) -> BTreeSet<String> {
        self.neighbors(m).into_iter().filter(|v| parse_vertex(v).is_some()).collect()
    }

    pub fn neighbors(&self, m: &str) -> BTreeSet<String> {
        self.edges
            .iter()
            .filter_map(|(u, v)| {
                if u == m {
                    Some(v.clone())
                } else if v == m {
                    Some(u.clone())
                } else {
                    None
                }
            })
            .collect()
    }

    /// Full graph: triangles for every slot qubit, then mediators.
    pub fn to_graph(&self) -> Result<Graph> {
        let mut g = triangle_graph_on(&self.qubits);
        for m in &self.mediators {
            g.add_vertex(m)?;
        }
        for (u, v) in &self.edges {
            g.add_edge_by_name(u, v)?;
        }
        Ok(g)
    }

    /// Structural checks: known endpoints, no triangle-internal edges,
    /// targets sized to the slots.
    pub fn validate(&self) -> Result<()> {
        let meds: BTreeSet<&String> = self.mediators.iter().collect();
        if meds.len() != self.mediators.len() {
            return Err(GadgetError::Construction("duplicate mediator names".into()));
        }
        for (u, v) in &self.edges {
            let (pu, pv) = (parse_vertex(u), parse_vertex(v));
            for (name, parsed) in [(u, pu), (v, pv)] {
                match parsed {
                    Some((q, _)) if self.slot(q).is_none() => {
                        return Err(GadgetError::Construction(format!("`{name}` is not on a slot qubit")))
                    }
                    None if !meds.contains(name) => {
                        return Err(GadgetError::Construction(format!("unknown vertex `{name}`")))
                    }
                    _ => {}
                }
            }
            if pu.is_some() && pv.is_some() {
                return Err(GadgetError::Construction(format!("edge {u}–{v} joins two qubit vertices")));
            }
        }
        for t in &self.targets {
            if t.n() != self.qubits.len() {
                return Err(GadgetError::InvalidState(format!("target {t} does not span {} qubits", self.qubits.len())));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<GadgetGraph> {
        let g: GadgetGraph =
            serde_json::from_str(text).map_err(|e| GadgetError::Construction(format!("gadget JSON: {e}")))?;
        g.validate()?;
        Ok(g)
    }
}

/// Build a gadget from a complex-level description: each mediator lists the
/// qubit vertices it is joined to, and `joined` lists mediator pairs joined
/// in the complex. Every non-joined pair that is not triangle-internal
/// becomes a graph edge.
pub struct ComplexSpec<'a> {
    pub id: &'a str,
    pub qubits: &'a [usize],
    /// per mediator: joined qubit vertices as (slot, corner)
    pub links: Vec<BTreeSet<(usize, Corner)>>,
    pub joined: BTreeSet<(usize, usize)>,
}

impl ComplexSpec<'_> {
    pub fn build(&self, names: &[String]) -> GadgetGraph {
        let mut g = GadgetGraph::empty(self.qubits);
        for name in names {
            g.add_mediator(name.clone(), self.qubits);
        }
        for (i, link) in self.links.iter().enumerate() {
            for (slot, &q) in self.qubits.iter().enumerate() {
                for c in Corner::ALL {
                    if !link.contains(&(slot, c)) {
                        g.add_edge(names[i].clone(), vertex_name(q, c));
                    }
                }
            }
        }
        for i in 0..self.links.len() {
            for j in i + 1..self.links.len() {
                if !self.joined.contains(&(i, j)) && !self.joined.contains(&(j, i)) {
                    g.add_edge(names[i].clone(), names[j].clone());
                }
            }
        }
        g
    }
}
