use std::collections::BTreeMap;

use super::AttrValue;
use crate::error::{invalid, Result};

/// One time step: node attributes plus the present edges and their attributes.
///
/// Absent pairs are implicitly Null, so [`SnapshotGraph::set_edge`] with a
/// Null attribute removes the edge. Undirected graphs store both orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnapshotGraph {
    pub node_count: usize,
    pub directed: bool,
    pub self_loops: bool,
    pub node_attrs: Vec<AttrValue>,
    pub edges: BTreeMap<(usize, usize), AttrValue>,
}

impl SnapshotGraph {
    /// Edgeless graph with every node carrying [`AttrValue::unit`].
    pub fn new(node_count: usize, directed: bool) -> Self {
        SnapshotGraph {
            node_count,
            directed,
            self_loops: false,
            node_attrs: vec![AttrValue::unit(); node_count],
            edges: BTreeMap::new(),
        }
    }

    pub fn set_edge(&mut self, u: usize, v: usize, attr: AttrValue) -> Result<()> {
        if u >= self.node_count || v >= self.node_count {
            return Err(invalid(format!(
                "edge ({u},{v}) out of range for {} nodes",
                self.node_count
            )));
        }
        if u == v && !self.self_loops {
            return Err(invalid(format!("self-loop at node {u}")));
        }
        let mut put = |a, b| {
            if attr.is_null() {
                self.edges.remove(&(a, b));
            } else {
                self.edges.insert((a, b), attr.clone());
            }
        };
        put(u, v);
        if !self.directed {
            put(v, u);
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.set_edge(u, v, AttrValue::unit())
    }

    pub fn edge(&self, u: usize, v: usize) -> &AttrValue {
        const NULL: AttrValue = AttrValue::Null;
        self.edges.get(&(u, v)).unwrap_or(&NULL)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains_key(&(u, v))
    }

    /// Canonical edge keys: every directed pair, or `u <= v` for undirected graphs.
    pub fn canonical_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let directed = self.directed;
        self.edges
            .keys()
            .copied()
            .filter(move |&(u, v)| directed || u <= v)
    }

    pub fn edge_count(&self) -> usize {
        self.canonical_edges().count()
    }

    /// Number of incident edges per node (in-degree for directed graphs).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.node_count];
        for &(_, v) in self.edges.keys() {
            deg[v] += 1;
        }
        deg
    }

    /// For each node `v`, the list of `(u, attr(u,v))` over edges `u -> v`.
    pub fn in_adjacency(&self) -> Vec<Vec<(usize, &AttrValue)>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for (&(u, v), a) in &self.edges {
            adj[v].push((u, a));
        }
        adj
    }
}
