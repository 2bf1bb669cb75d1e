//! Time-and-graph refinement emulated by a single layered refinement of the
//! aggregated graph.
//!
//! Each node carries `(X_{i,≤T}, I', J')`. Layer `l` of `T·L` looks only at
//! the snapshot `t = ⌈l/L⌉`: it refines `I'` with the input maps and `J'`
//! with the recurrent maps of depth `((l-1) mod L) + 1`. At the end of every
//! `L`-block the cell folds `(I', J')` into `J'`, and `I'` is reseeded from
//! the next step's attribute, read out of the carried sequence.

use super::refine::{refine_round, step_adjacency, ColoredAdjacency};
use super::{ColorId, Coloring, Interner, Namespace, Role, Signature, Variant};
use crate::tgraph::TemporalGraph;

struct NodeState {
    input: ColorId,
    rec: ColorId,
}

pub(crate) fn scheduled_colors(
    tg: &TemporalGraph,
    layers: usize,
    interner: &mut Interner,
) -> Vec<ColorId> {
    let start = interner.start();
    let mut state: Vec<NodeState> = tg
        .node_seqs
        .iter()
        .map(|seq| NodeState {
            input: interner.symbol(&seq[0]),
            rec: start,
        })
        .collect();
    let steps: Vec<ColoredAdjacency> = (1..=tg.horizon)
        .map(|t| step_adjacency(tg, t, interner))
        .collect();
    let total = tg.horizon * layers;
    for l in 1..=total {
        let t = l.div_ceil(layers);
        let depth = (l - 1) % layers + 1;
        let adj = &steps[t - 1];
        let inputs: Vec<ColorId> = state.iter().map(|s| s.input).collect();
        let recs: Vec<ColorId> = state.iter().map(|s| s.rec).collect();
        let new_inputs = refine_round(interner, Namespace::new(Role::Input, depth), &inputs, adj);
        let new_recs = refine_round(interner, Namespace::new(Role::Recurrent, depth), &recs, adj);
        let block_end = l % layers == 0;
        for (i, s) in state.iter_mut().enumerate() {
            if !block_end {
                s.input = new_inputs[i];
                s.rec = new_recs[i];
                continue;
            }
            s.rec = interner.intern(Signature::Combine {
                ns: Namespace::new(Role::Cell, 0),
                left: new_inputs[i],
                right: new_recs[i],
            });
            s.input = if l < total {
                interner.symbol(&tg.node_seqs[i][l / layers])
            } else {
                new_inputs[i]
            };
        }
    }
    state.into_iter().map(|s| s.rec).collect()
}

/// Runs the layered emulation and returns the final `J'` coloring.
pub fn scheduled_wl(tg: &TemporalGraph, layers: usize) -> Coloring {
    let mut interner = Interner::new();
    let colors = scheduled_colors(tg, layers, &mut interner);
    Coloring {
        session: interner.session(),
        variant: Variant::Scheduled,
        layer: tg.horizon * layers,
        colors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_dyncsl_sample, gen_random_temporal_directed};
    use crate::wl::time_and_wl;

    #[test]
    fn single_step_matches_time_and() {
        for seed in 0..10 {
            let tg = gen_random_temporal_directed(seed, 6, 1, 0.3, &[1.into(), 2.into()]).unwrap();
            for layers in 1..=3 {
                assert_eq!(
                    scheduled_wl(&tg, layers).partition(),
                    time_and_wl(&tg, layers).partition()
                );
            }
        }
    }

    #[test]
    fn dyncsl_is_uniform() {
        let s = gen_dyncsl_sample(19, &[6, 2, 2, 3, 5, 5, 4, 2]).unwrap();
        assert_eq!(scheduled_wl(&s.graph, 2).partition().class_count(), 1);
    }
}
