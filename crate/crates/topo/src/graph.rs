//! Simple undirected graphs with named vertices.
//!
//! Vertex order is the order of construction; it fixes simplex orientation
//! in every complex derived from the graph.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Result, TopoError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, u32>,
    adj: Vec<BitSet>,
}

impl Graph {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Graph> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i as u32).is_some() {
                return Err(TopoError::InvalidGraph(format!("duplicate vertex `{n}`")));
            }
        }
        let adj = vec![BitSet::new(names.len()); names.len()];
        Ok(Graph { names, index, adj })
    }

    /// Graph on vertices `0..n` named by their index.
    pub fn with_vertices(n: usize) -> Graph {
        Graph::new((0..n).map(|i| i.to_string())).expect("distinct names")
    }

    pub fn from_edges<S: AsRef<str>>(names: &[S], edges: &[(S, S)]) -> Result<Graph> {
        let mut g = Graph::new(names.iter().map(|s| s.as_ref().to_string()))?;
        for (u, v) in edges {
            g.add_edge_by_name(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: u32) -> &str {
        &self.names[v as usize]
    }

    pub fn id(&self, name: &str) -> Option<u32> {
        self.index.get(name).copied()
    }

    pub fn id_or_err(&self, name: &str) -> Result<u32> {
        self.id(name).ok_or_else(|| TopoError::InvalidGraph(format!("unknown vertex `{name}`")))
    }

    /// Append a vertex; returns its id.
    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<u32> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(TopoError::InvalidGraph(format!("duplicate vertex `{name}`")));
        }
        let id = self.names.len() as u32;
        self.index.insert(name.clone(), id);
        self.names.push(name);
        let n = self.names.len();
        for row in &mut self.adj {
            row.grow(n);
        }
        self.adj.push(BitSet::new(n));
        Ok(id)
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<()> {
        if u == v {
            return Err(TopoError::InvalidGraph(format!("self-loop at `{}`", self.name(u))));
        }
        let n = self.names.len() as u32;
        if u >= n || v >= n {
            return Err(TopoError::InvalidGraph(format!("edge endpoint out of range ({u}, {v})")));
        }
        self.adj[u as usize].insert(v as usize);
        self.adj[v as usize].insert(u as usize);
        Ok(())
    }

    pub fn add_edge_by_name(&mut self, u: &str, v: &str) -> Result<()> {
        let (u, v) = (self.id_or_err(u)?, self.id_or_err(v)?);
        self.add_edge(u, v)
    }

    pub fn remove_edge(&mut self, u: u32, v: u32) {
        self.adj[u as usize].remove(v as usize);
        self.adj[v as usize].remove(u as usize);
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(v as usize)
    }

    pub fn neighbors(&self, v: u32) -> &BitSet {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count() as u32).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, row) in self.adj.iter().enumerate() {
            for v in row.above(u).iter() {
                out.push((u as u32, v as u32));
            }
        }
        out
    }

    /// Same vertices; an edge exactly where `self` has none.
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut adj = vec![BitSet::new(n); n];
        for (u, row) in adj.iter_mut().enumerate() {
            for v in 0..n {
                if v != u && !self.adj[u].contains(v) {
                    row.insert(v);
                }
            }
        }
        Graph { names: self.names.clone(), index: self.index.clone(), adj }
    }

    /// Vertex-disjoint union; names of `other` must not clash with ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::new(self.names.iter().chain(other.names.iter()).cloned())?;
        let off = self.vertex_count() as u32;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off)?;
        }
        Ok(g)
    }

    /// Parse `u v` lines (`#` starts a comment). A line with a single token
    /// declares a vertex, which lets isolated vertices and vertex order
    /// round-trip.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut names: Vec<String> = Vec::new();
        let mut seen: HashMap<String, ()> = HashMap::new();
        let mut pairs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() > 2 {
                return Err(TopoError::Parse(format!("line {}: expected `u v`", lineno + 1)));
            }
            for t in &toks {
                if seen.insert(t.to_string(), ()).is_none() {
                    names.push(t.to_string());
                }
            }
            if toks.len() == 2 {
                if toks[0] == toks[1] {
                    return Err(TopoError::Parse(format!("line {}: self-loop", lineno + 1)));
                }
                pairs.push((toks[0].to_string(), toks[1].to_string()));
            }
        }
        let mut g = Graph::new(names)?;
        for (u, v) in pairs {
            g.add_edge_by_name(&u, &v)?;
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for n in &self.names {
            s.push_str(n);
            s.push('\n');
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", self.name(u), self.name(v)));
        }
        s
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.names.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v)| [self.name(u).to_string(), self.name(v).to_string()])
                .collect(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Graph> {
        let mut g = Graph::new(j.vertices.iter().cloned())?;
        for [u, v] in &j.edges {
            g.add_edge_by_name(u, v)?;
        }
        Ok(g)
    }

    /// Accept either JSON (`{"vertices":..}`) or the edge-list text.
    pub fn parse_any(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            let j: GraphJson =
                serde_json::from_str(text).map_err(|e| TopoError::Parse(e.to_string()))?;
            Graph::from_json(&j)
        } else {
            Graph::parse_edge_list(text)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap()
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        let g = triangle();
        assert_eq!(g.complement().edge_count(), 0);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(Graph::new(["a", "a"]).is_err());
        let mut g = Graph::with_vertices(2);
        assert!(g.add_edge(1, 1).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let mut g = triangle();
        g.add_vertex("lonely").unwrap();
        let back = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_edge_list(), g.to_edge_list());
    }

    #[test]
    fn json_round_trip() {
        let g = triangle();
        let s = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(Graph::parse_any(&s).unwrap(), g);
    }
}
