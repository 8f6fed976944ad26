//! Simple undirected graphs over named vertices.
//!
//! Vertices keep their insertion order, which for edge-list input is the
//! order of first appearance. Adjacency is kept as one `u64` bitmask per
//! vertex, so a graph holds at most [`MAX_VERTICES`] vertices.

mod cycle;
mod families;
mod parse;

pub use cycle::{
    cycle_complement, cycle_neighborhood, hypothesis_violation, induced_chordless_cycles,
    make_cycle_partition, splitting_condition, CyclePartition, PartitionSummary,
};
pub use families::{cycle_graph, spoke_deleted_wheel, star_graph, wheel_graph};
pub use parse::{parse_graph, ParseWarning, ParsedGraph};

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// An edge as a pair of vertex indices with the smaller index first.
pub type Edge = (usize, usize);

pub(crate) fn normalize(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeSet<Edge>,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a graph from an explicit vertex list and named edges.
    ///
    /// Repeated edges are collapsed; loops and endpoints missing from the
    /// vertex list are errors.
    pub fn new<V, E, A, B>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut g = Graph::empty();
        for v in vertices {
            let v = v.as_ref();
            if g.index.contains_key(v) {
                return Err(Error::DuplicateVertex(v.to_string()));
            }
            g.push_vertex(v)?;
        }
        for (a, b) in edges {
            let ia = g
                .index_of(a.as_ref())
                .ok_or_else(|| Error::UnknownVertex(a.as_ref().to_string()))?;
            let ib = g
                .index_of(b.as_ref())
                .ok_or_else(|| Error::UnknownVertex(b.as_ref().to_string()))?;
            g.insert_edge(ia, ib)?;
        }
        Ok(g)
    }

    /// Builds a graph from named edges, inferring vertices in order of
    /// first appearance.
    pub fn from_edges<A: AsRef<str>, B: AsRef<str>>(edges: &[(A, B)]) -> Result<Self> {
        let mut g = Graph::empty();
        for (a, b) in edges {
            let ia = g.intern(a.as_ref())?;
            let ib = g.intern(b.as_ref())?;
            g.insert_edge(ia, ib)?;
        }
        Ok(g)
    }

    pub(crate) fn intern(&mut self, name: &str) -> Result<usize> {
        match self.index.get(name) {
            Some(&i) => Ok(i),
            None => self.push_vertex(name),
        }
    }

    fn push_vertex(&mut self, name: &str) -> Result<usize> {
        if self.vertices.len() == MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "vertex count",
                limit: MAX_VERTICES,
                actual: MAX_VERTICES + 1,
            });
        }
        let i = self.vertices.len();
        self.vertices.push(name.to_string());
        self.index.insert(name.to_string(), i);
        self.adj.push(0);
        Ok(i)
    }

    /// Returns `Ok(false)` when the edge was already present.
    pub(crate) fn insert_edge(&mut self, a: usize, b: usize) -> Result<bool> {
        if a == b {
            return Err(Error::LoopEdge(self.vertices[a].clone()));
        }
        let fresh = self.edges.insert(normalize(a, b));
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(fresh)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_names(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges
            .iter()
            .map(|&(a, b)| (self.vertices[a].as_str(), self.vertices[b].as_str()))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Open neighbourhood of vertex `i` as a bitmask over vertex indices.
    pub fn neighbor_mask(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn degree_of(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn degree(&self, v: &str) -> Result<usize> {
        self.index_of(v)
            .map(|i| self.degree_of(i))
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    /// Same vertex list, keeping only the edges accepted by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(Edge) -> bool) -> Graph {
        let mut g = Graph {
            vertices: self.vertices.clone(),
            index: self.index.clone(),
            edges: BTreeSet::new(),
            adj: vec![0; self.vertices.len()],
        };
        for e in self.edges() {
            if keep(e) {
                g.insert_edge(e.0, e.1).expect("edges of a simple graph");
            }
        }
        g
    }

    /// Induced subgraph on the named vertices, in the order given.
    pub fn induced_subgraph<S: AsRef<str>>(&self, names: &[S]) -> Result<Graph> {
        let idx = names
            .iter()
            .map(|n| {
                self.index_of(n.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut g = Graph::empty();
        for &i in &idx {
            if g.index.contains_key(&self.vertices[i]) {
                return Err(Error::DuplicateVertex(self.vertices[i].clone()));
            }
            g.push_vertex(&self.vertices[i])?;
        }
        for (p, &a) in idx.iter().enumerate() {
            for (q, &b) in idx.iter().enumerate().skip(p + 1) {
                if self.has_edge(a, b) {
                    g.insert_edge(p, q)?;
                }
            }
        }
        Ok(g)
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            vertices: Some(self.vertices.clone()),
            edges: self
                .edge_names()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
        }
    }
}

/// The structured (JSON) graph format.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    pub edges: Vec<[String; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_document().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::example1;

    #[test]
    fn degrees_in_first_example() {
        let g = example1();
        assert_eq!(g.degree("u1").unwrap(), 3);
        assert_eq!(g.degree("u2").unwrap(), 3);
        assert_eq!(g.degree("u3").unwrap(), 2);
        assert_eq!(g.degree("w1").unwrap(), 2);
        assert!(matches!(g.degree("zz"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn isolated_vertex_has_degree_zero() {
        let g = Graph::new(["a", "b", "c"], [("a", "b")]).unwrap();
        assert_eq!(g.degree("c").unwrap(), 0);
    }

    #[test]
    fn new_rejects_bad_input() {
        assert!(matches!(
            Graph::new(["a", "b"], [("a", "a")]),
            Err(Error::LoopEdge(_))
        ));
        assert!(matches!(
            Graph::new(["a", "b"], [("a", "c")]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            Graph::new(["a", "a"], Vec::<(&str, &str)>::new()),
            Err(Error::DuplicateVertex(_))
        ));
    }

    #[test]
    fn induced_subgraph_keeps_only_internal_edges() {
        let g = example1();
        let h = g.induced_subgraph(&["u1", "u2", "u3", "u4"]).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 4);
    }

    #[test]
    fn too_many_vertices_is_a_cap_refusal() {
        let edges: Vec<(String, String)> = (0..MAX_VERTICES)
            .map(|i| (format!("a{i}"), format!("b{i}")))
            .collect();
        let err = Graph::from_edges(&edges).unwrap_err();
        assert!(err.is_resource_limit());
    }
}
