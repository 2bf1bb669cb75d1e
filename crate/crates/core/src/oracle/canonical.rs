use super::search::{check_limit, node_keys, NodeKey};
use crate::error::Result;
use crate::tgraph::{AttrValue, TemporalGraph};

fn put_attr(out: &mut Vec<u8>, a: &AttrValue) {
    match a {
        AttrValue::Null => out.push(0),
        AttrValue::Int(v) => {
            out.push(1);
            out.extend_from_slice(&((*v as u64) ^ (1 << 63)).to_be_bytes());
        }
        AttrValue::Str(s) => {
            out.push(2);
            out.extend_from_slice(&(s.len() as u32).to_be_bytes());
            out.extend_from_slice(s.as_bytes());
        }
        AttrValue::Tuple(vs) => {
            out.push(3);
            out.extend_from_slice(&(vs.len() as u32).to_be_bytes());
            for v in vs {
                out.extend_from_slice(&((*v as u64) ^ (1 << 63)).to_be_bytes());
            }
        }
    }
}

fn put_edge(out: &mut Vec<u8>, seq: Option<&[AttrValue]>) {
    match seq {
        None => out.push(0),
        Some(seq) => {
            out.push(1);
            seq.iter().for_each(|a| put_attr(out, a));
        }
    }
}

struct Canonizer<'a> {
    tg: &'a TemporalGraph,
    keys: Vec<NodeKey>,
    best: Option<Vec<u8>>,
}

impl Canonizer<'_> {
    /// Bytes contributed by placing `v` after the nodes in `order`.
    fn block(&self, v: usize, order: &[usize], out: &mut Vec<u8>) {
        self.tg.node_seqs[v].iter().for_each(|a| put_attr(out, a));
        put_edge(out, self.tg.edge_seq(v, v));
        for &w in order {
            put_edge(out, self.tg.edge_seq(v, w));
            put_edge(out, self.tg.edge_seq(w, v));
        }
    }

    fn descend(&mut self, order: &mut Vec<usize>, used: &mut [bool], prefix: &mut Vec<u8>) {
        let n = self.tg.node_count;
        if order.len() == n {
            if self.best.as_ref().is_none_or(|b| prefix.as_slice() < b.as_slice()) {
                self.best = Some(prefix.clone());
            }
            return;
        }
        // only nodes with the smallest remaining invariant may come next
        let min_key = (0..n).filter(|&v| !used[v]).map(|v| &self.keys[v]).min().cloned();
        let Some(min_key) = min_key else { return };
        for v in 0..n {
            if used[v] || self.keys[v] != min_key {
                continue;
            }
            let mark = prefix.len();
            self.block(v, order, prefix);
            let worse = self
                .best
                .as_ref()
                .is_some_and(|b| prefix.as_slice() > &b[..prefix.len().min(b.len())]);
            if !worse {
                used[v] = true;
                order.push(v);
                self.descend(order, used, prefix);
                order.pop();
                used[v] = false;
            }
            prefix.truncate(mark);
        }
    }
}

pub fn canonical_form(tg: &TemporalGraph, node_limit: usize) -> Result<Vec<u8>> {
    canonical_form_with(tg, node_limit)
}

/// Isomorphism-invariant byte encoding: equal encodings iff isomorphic.
///
/// The encoding lists nodes in a chosen order, each followed by its edges to
/// the nodes before it. The chosen order is the one giving the
/// lexicographically least bytes among orders that sort nodes by their
/// invariant (attribute sequence and degree profile).
pub fn canonical_form_with(tg: &TemporalGraph, node_limit: usize) -> Result<Vec<u8>> {
    check_limit(tg, node_limit)?;
    let mut header = vec![tg.directed as u8];
    header.extend_from_slice(&(tg.node_count as u32).to_be_bytes());
    header.extend_from_slice(&(tg.horizon as u32).to_be_bytes());
    let mut c = Canonizer {
        tg,
        keys: node_keys(tg),
        best: None,
    };
    let mut prefix = header;
    c.descend(&mut Vec::new(), &mut vec![false; tg.node_count], &mut prefix);
    Ok(c.best.expect("at least one ordering exists"))
}
