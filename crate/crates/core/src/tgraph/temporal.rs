use std::collections::BTreeMap;
use std::ops::Range;

use super::{AttrValue, Permutation, SnapshotGraph};
use crate::error::{invalid, Result};

/// Aggregated temporal graph: node and edge attribute sequences of length `horizon`.
///
/// Edges never present at any step are omitted from `edge_seqs`. Undirected
/// graphs store both orientations with identical sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalGraph {
    pub node_count: usize,
    pub horizon: usize,
    pub directed: bool,
    pub self_loops: bool,
    pub node_seqs: Vec<Vec<AttrValue>>,
    pub edge_seqs: BTreeMap<(usize, usize), Vec<AttrValue>>,
}

impl TemporalGraph {
    /// Edgeless graph whose nodes carry [`AttrValue::unit`] at every step.
    pub fn new(node_count: usize, horizon: usize, directed: bool) -> Self {
        TemporalGraph {
            node_count,
            horizon,
            directed,
            self_loops: false,
            node_seqs: vec![vec![AttrValue::unit(); horizon]; node_count],
            edge_seqs: BTreeMap::new(),
        }
    }

    /// Sets the full sequence of edge `(u,v)` (and `(v,u)` when undirected).
    /// An all-Null sequence removes the edge.
    pub fn set_edge_seq(&mut self, u: usize, v: usize, seq: Vec<AttrValue>) -> Result<()> {
        if u >= self.node_count || v >= self.node_count {
            return Err(invalid(format!(
                "edge ({u},{v}) out of range for {} nodes",
                self.node_count
            )));
        }
        if u == v && !self.self_loops {
            return Err(invalid(format!("self-loop at node {u}")));
        }
        if seq.len() != self.horizon {
            return Err(invalid(format!(
                "edge ({u},{v}) sequence has length {}, expected {}",
                seq.len(),
                self.horizon
            )));
        }
        let absent = seq.iter().all(AttrValue::is_null);
        if !self.directed {
            if absent {
                self.edge_seqs.remove(&(v, u));
            } else {
                self.edge_seqs.insert((v, u), seq.clone());
            }
        }
        if absent {
            self.edge_seqs.remove(&(u, v));
        } else {
            self.edge_seqs.insert((u, v), seq);
        }
        Ok(())
    }

    pub fn edge_seq(&self, u: usize, v: usize) -> Option<&[AttrValue]> {
        self.edge_seqs.get(&(u, v)).map(Vec::as_slice)
    }

    /// Canonical edge keys of the aggregated (union) edge set.
    pub fn canonical_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let directed = self.directed;
        self.edge_seqs
            .keys()
            .copied()
            .filter(move |&(u, v)| directed || u <= v)
    }

    pub fn edge_count(&self) -> usize {
        self.canonical_edges().count()
    }

    /// For each node `v`, `(u, seq(u,v))` over aggregated edges `u -> v`.
    pub fn in_adjacency(&self) -> Vec<Vec<(usize, &[AttrValue])>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for (&(u, v), seq) in &self.edge_seqs {
            adj[v].push((u, seq.as_slice()));
        }
        adj
    }

    /// Snapshot view of every step, in order.
    pub fn snapshots(&self) -> Vec<SnapshotGraph> {
        (1..=self.horizon)
            .map(|t| slice(self, t).expect("t in range"))
            .collect()
    }

    /// Per-step degree vector of every node (in-degree when directed).
    pub fn degree_profile(&self) -> Vec<Vec<usize>> {
        let mut deg = vec![vec![0; self.horizon]; self.node_count];
        for (&(_, v), seq) in &self.edge_seqs {
            for (t, a) in seq.iter().enumerate() {
                if !a.is_null() {
                    deg[v][t] += 1;
                }
            }
        }
        deg
    }
}

/// Builds the aggregated form from a nonempty sequence of snapshots.
pub fn aggregate(snapshots: &[SnapshotGraph]) -> Result<TemporalGraph> {
    let first = snapshots
        .first()
        .ok_or_else(|| invalid("cannot aggregate an empty snapshot sequence"))?;
    let (n, directed) = (first.node_count, first.directed);
    let horizon = snapshots.len();
    for (t, s) in snapshots.iter().enumerate() {
        if s.node_count != n || s.directed != directed {
            return Err(invalid(format!(
                "snapshot {} has {} nodes (directed={}), expected {} (directed={})",
                t + 1,
                s.node_count,
                s.directed,
                n,
                directed
            )));
        }
        if s.node_attrs.len() != n {
            return Err(invalid(format!("snapshot {} has a short node attribute list", t + 1)));
        }
    }
    let node_seqs = (0..n)
        .map(|i| snapshots.iter().map(|s| s.node_attrs[i].clone()).collect())
        .collect();
    let mut edge_seqs: BTreeMap<(usize, usize), Vec<AttrValue>> = BTreeMap::new();
    for (t, s) in snapshots.iter().enumerate() {
        for (&key, a) in &s.edges {
            if a.is_null() {
                continue;
            }
            edge_seqs
                .entry(key)
                .or_insert_with(|| vec![AttrValue::Null; horizon])[t] = a.clone();
        }
    }
    Ok(TemporalGraph {
        node_count: n,
        horizon,
        directed,
        self_loops: snapshots.iter().any(|s| s.self_loops),
        node_seqs,
        edge_seqs,
    })
}

/// Snapshot at step `t`, counted from 1.
pub fn slice(tg: &TemporalGraph, t: usize) -> Result<SnapshotGraph> {
    if t == 0 || t > tg.horizon {
        return Err(invalid(format!("time step {t} outside 1..={}", tg.horizon)));
    }
    let k = t - 1;
    let edges = tg
        .edge_seqs
        .iter()
        .filter(|(_, seq)| !seq[k].is_null())
        .map(|(&key, seq)| (key, seq[k].clone()))
        .collect();
    Ok(SnapshotGraph {
        node_count: tg.node_count,
        directed: tg.directed,
        self_loops: tg.self_loops,
        node_attrs: tg.node_seqs.iter().map(|s| s[k].clone()).collect(),
        edges,
    })
}

/// Relabels nodes: the data of node `i` moves to `π(i)`.
pub fn apply_permutation(tg: &TemporalGraph, perm: &Permutation) -> Result<TemporalGraph> {
    if perm.len() != tg.node_count {
        return Err(invalid(format!(
            "permutation of length {} applied to {} nodes",
            perm.len(),
            tg.node_count
        )));
    }
    let mut node_seqs = vec![Vec::new(); tg.node_count];
    for (i, seq) in tg.node_seqs.iter().enumerate() {
        node_seqs[perm.apply(i)] = seq.clone();
    }
    let edge_seqs = tg
        .edge_seqs
        .iter()
        .map(|(&(u, v), seq)| ((perm.apply(u), perm.apply(v)), seq.clone()))
        .collect();
    Ok(TemporalGraph {
        node_seqs,
        edge_seqs,
        ..tg.clone()
    })
}

/// Places `b` after `a` with no edges between them.
///
/// Returns the union and, for each input, the map from its node indices to
/// union indices.
pub fn disjoint_union(
    a: &TemporalGraph,
    b: &TemporalGraph,
) -> Result<(TemporalGraph, Vec<usize>, Vec<usize>)> {
    let (g, ranges) = disjoint_union_all(&[a, b])?;
    let map_a = ranges[0].clone().collect();
    let map_b = ranges[1].clone().collect();
    Ok((g, map_a, map_b))
}

/// Disjoint union of any number of graphs; part `k` occupies `ranges[k]`.
pub fn disjoint_union_all<G: AsRef<TemporalGraph>>(
    parts: &[G],
) -> Result<(TemporalGraph, Vec<Range<usize>>)> {
    let first = parts
        .first()
        .ok_or_else(|| invalid("disjoint union of zero graphs"))?
        .as_ref();
    let (horizon, directed) = (first.horizon, first.directed);
    let mut out = TemporalGraph {
        node_count: 0,
        horizon,
        directed,
        self_loops: false,
        node_seqs: Vec::new(),
        edge_seqs: BTreeMap::new(),
    };
    let mut ranges = Vec::with_capacity(parts.len());
    for part in parts {
        let g = part.as_ref();
        if g.horizon != horizon {
            return Err(invalid(format!(
                "horizon mismatch in disjoint union: {} vs {}",
                g.horizon, horizon
            )));
        }
        if g.directed != directed {
            return Err(invalid("directedness mismatch in disjoint union"));
        }
        let offset = out.node_count;
        out.node_seqs.extend(g.node_seqs.iter().cloned());
        out.edge_seqs.extend(
            g.edge_seqs
                .iter()
                .map(|(&(u, v), seq)| ((u + offset, v + offset), seq.clone())),
        );
        out.self_loops |= g.self_loops;
        out.node_count += g.node_count;
        ranges.push(offset..out.node_count);
    }
    Ok((out, ranges))
}

impl AsRef<TemporalGraph> for TemporalGraph {
    fn as_ref(&self) -> &TemporalGraph {
        self
    }
}
