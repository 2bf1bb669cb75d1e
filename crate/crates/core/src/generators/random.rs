use rand::seq::SliceRandom;
use rand::Rng;

use super::item_rng;
use crate::error::{invalid, Result};
use crate::tgraph::{AttrValue, TemporalGraph};

/// Seeded random undirected temporal graph.
///
/// Every unordered pair is present at each step independently with
/// probability `edge_prob`. Nodes (at every step) and present edges draw
/// their attribute uniformly from `alphabet`.
pub fn gen_random_temporal(
    seed: u64,
    n: usize,
    horizon: usize,
    edge_prob: f64,
    alphabet: &[AttrValue],
) -> Result<TemporalGraph> {
    random_temporal(&mut item_rng(seed, 0), n, horizon, edge_prob, alphabet, false)
}

/// Directed counterpart of [`gen_random_temporal`]: ordered pairs, no self-loops.
pub fn gen_random_temporal_directed(
    seed: u64,
    n: usize,
    horizon: usize,
    edge_prob: f64,
    alphabet: &[AttrValue],
) -> Result<TemporalGraph> {
    random_temporal(&mut item_rng(seed, 0), n, horizon, edge_prob, alphabet, true)
}

/// Draws a random temporal graph from a caller-supplied RNG.
pub fn random_temporal<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    horizon: usize,
    edge_prob: f64,
    alphabet: &[AttrValue],
    directed: bool,
) -> Result<TemporalGraph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(invalid(format!("edge probability {edge_prob} outside [0,1]")));
    }
    if n == 0 || horizon == 0 {
        return Err(invalid("random graphs need n >= 1 and T >= 1"));
    }
    if alphabet.is_empty() || alphabet.iter().any(AttrValue::is_null) {
        return Err(invalid("attribute alphabet must be nonempty and exclude Null"));
    }
    let mut tg = TemporalGraph::new(n, horizon, directed);
    for seq in &mut tg.node_seqs {
        for slot in seq.iter_mut() {
            *slot = alphabet.choose(rng).expect("nonempty").clone();
        }
    }
    for u in 0..n {
        let start = if directed { 0 } else { u + 1 };
        for v in start..n {
            if u == v {
                continue;
            }
            let seq: Vec<AttrValue> = (0..horizon)
                .map(|_| {
                    if rng.gen_bool(edge_prob) {
                        alphabet.choose(rng).expect("nonempty").clone()
                    } else {
                        AttrValue::Null
                    }
                })
                .collect();
            tg.set_edge_seq(u, v, seq)?;
        }
    }
    Ok(tg)
}
