use std::fmt;

use serde::Serialize;

use super::TemporalGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    ZeroHorizon,
    NodeCount { expected: usize, found: usize },
    NodeSeqLength { node: usize, len: usize },
    EdgeOutOfRange { u: usize, v: usize },
    EdgeSeqLength { u: usize, v: usize, len: usize },
    AllNullEdge { u: usize, v: usize },
    SelfLoop { node: usize },
    Asymmetric { u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::ZeroHorizon => f.write_str("horizon must be at least 1"),
            Violation::NodeCount { expected, found } => {
                write!(f, "{found} node sequences for {expected} nodes")
            }
            Violation::NodeSeqLength { node, len } => {
                write!(f, "node {node} sequence has length {len}")
            }
            Violation::EdgeOutOfRange { u, v } => write!(f, "edge ({u},{v}) out of range"),
            Violation::EdgeSeqLength { u, v, len } => {
                write!(f, "edge ({u},{v}) sequence has length {len}")
            }
            Violation::AllNullEdge { u, v } => write!(f, "edge ({u},{v}) is Null at every step"),
            Violation::SelfLoop { node } => write!(f, "unflagged self-loop at node {node}"),
            Violation::Asymmetric { u, v } => {
                write!(f, "undirected edge ({u},{v}) differs from ({v},{u})")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every structural invariant of a temporal graph and lists what is broken.
pub fn validate(tg: &TemporalGraph) -> ValidationReport {
    let mut out = Vec::new();
    if tg.horizon == 0 {
        out.push(Violation::ZeroHorizon);
    }
    if tg.node_seqs.len() != tg.node_count {
        out.push(Violation::NodeCount {
            expected: tg.node_count,
            found: tg.node_seqs.len(),
        });
    }
    for (node, seq) in tg.node_seqs.iter().enumerate() {
        if seq.len() != tg.horizon {
            out.push(Violation::NodeSeqLength { node, len: seq.len() });
        }
    }
    for (&(u, v), seq) in &tg.edge_seqs {
        if u >= tg.node_count || v >= tg.node_count {
            out.push(Violation::EdgeOutOfRange { u, v });
            continue;
        }
        if seq.len() != tg.horizon {
            out.push(Violation::EdgeSeqLength { u, v, len: seq.len() });
        }
        if seq.iter().all(|a| a.is_null()) {
            out.push(Violation::AllNullEdge { u, v });
        }
        if u == v && !tg.self_loops {
            out.push(Violation::SelfLoop { node: u });
        }
        // report each asymmetric pair once, from its smaller endpoint
        if !tg.directed && u < v && tg.edge_seqs.get(&(v, u)) != Some(seq) {
            out.push(Violation::Asymmetric { u, v });
        }
        if !tg.directed && u > v && !tg.edge_seqs.contains_key(&(v, u)) {
            out.push(Violation::Asymmetric { u: v, v: u });
        }
    }
    ValidationReport { violations: out }
}
