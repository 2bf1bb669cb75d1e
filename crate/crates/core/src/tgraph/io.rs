//! JSON file format for temporal graphs (version 1).
//!
//! ```json
//! {"version":1,"directed":false,"num_nodes":3,"horizon":2,
//!  "node_seqs":[[1,1],[1,1],[1,1]],
//!  "edges":[{"u":0,"v":1,"seq":[1,null]}]}
//! ```
//!
//! Writers emit each undirected edge once with `u <= v`, sorted by `(u,v)`.
//! Readers accept any order and either orientation.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{validate, AttrValue, TemporalGraph};
use crate::error::{invalid, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct GraphFile {
    version: u32,
    directed: bool,
    num_nodes: usize,
    horizon: usize,
    node_seqs: Vec<Vec<AttrValue>>,
    edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    self_loops: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeRecord {
    u: usize,
    v: usize,
    seq: Vec<AttrValue>,
}

pub fn to_json(tg: &TemporalGraph) -> String {
    let file = GraphFile {
        version: FORMAT_VERSION,
        directed: tg.directed,
        num_nodes: tg.node_count,
        horizon: tg.horizon,
        node_seqs: tg.node_seqs.clone(),
        edges: tg
            .canonical_edges()
            .map(|(u, v)| EdgeRecord {
                u,
                v,
                seq: tg.edge_seqs[&(u, v)].clone(),
            })
            .collect(),
        self_loops: tg.self_loops,
    };
    serde_json::to_string(&file).expect("graph serialization is infallible")
}

pub fn from_json(text: &str) -> Result<TemporalGraph> {
    let file: GraphFile = serde_json::from_str(text)?;
    if file.version != FORMAT_VERSION {
        return Err(invalid(format!("unsupported format version {}", file.version)));
    }
    if file.horizon == 0 {
        return Err(invalid("horizon must be at least 1"));
    }
    if file.node_seqs.len() != file.num_nodes {
        return Err(invalid(format!(
            "num_nodes is {} but {} node sequences given",
            file.num_nodes,
            file.node_seqs.len()
        )));
    }
    let mut tg = TemporalGraph::new(file.num_nodes, file.horizon, file.directed);
    tg.self_loops = file.self_loops;
    tg.node_seqs = file.node_seqs;
    for e in file.edges {
        if !tg.directed {
            if let Some(prev) = tg.edge_seqs.get(&(e.u, e.v)) {
                if *prev != e.seq {
                    return Err(invalid(format!(
                        "undirected edge ({},{}) given twice with different sequences",
                        e.u, e.v
                    )));
                }
            }
        }
        tg.set_edge_seq(e.u, e.v, e.seq)?;
    }
    let report = validate(&tg);
    if let Some(v) = report.violations.first() {
        return Err(invalid(v.to_string()));
    }
    Ok(tg)
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<TemporalGraph> {
    from_json(&fs::read_to_string(path)?)
}

pub fn write_graph(path: impl AsRef<Path>, tg: &TemporalGraph) -> Result<()> {
    let mut text = to_json(tg);
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}
