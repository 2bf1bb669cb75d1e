//! The three temporal compositions of 1-WL refinement.

use super::refine::{refine, refine_round, step_adjacency, ColoredAdjacency};
use super::{ColorId, Coloring, Interner, Namespace, Role, Signature, Variant};
use crate::tgraph::TemporalGraph;

fn cell(interner: &mut Interner, left: ColorId, right: ColorId) -> ColorId {
    interner.intern(Signature::Combine {
        ns: Namespace::new(Role::Cell, 0),
        left,
        right,
    })
}

fn step_attrs(tg: &TemporalGraph, t: usize, interner: &mut Interner) -> Vec<ColorId> {
    tg.node_seqs.iter().map(|s| interner.symbol(&s[t - 1])).collect()
}

pub(crate) fn time_and_colors(
    tg: &TemporalGraph,
    layers: usize,
    interner: &mut Interner,
) -> Vec<ColorId> {
    let start = interner.start();
    let mut hidden = vec![start; tg.node_count];
    for t in 1..=tg.horizon {
        let adj = step_adjacency(tg, t, interner);
        let attrs = step_attrs(tg, t, interner);
        let input = refine(interner, Role::Input, &attrs, &adj, layers);
        let rec = refine(interner, Role::Recurrent, &hidden, &adj, layers);
        hidden = input
            .into_iter()
            .zip(rec)
            .map(|(i, j)| cell(interner, i, j))
            .collect();
    }
    hidden
}

pub(crate) fn graph_then_time_colors(
    tg: &TemporalGraph,
    layers: usize,
    interner: &mut Interner,
) -> Vec<ColorId> {
    let start = interner.start();
    let mut hidden = vec![start; tg.node_count];
    for t in 1..=tg.horizon {
        let adj = step_adjacency(tg, t, interner);
        let attrs = step_attrs(tg, t, interner);
        let input = refine(interner, Role::Input, &attrs, &adj, layers);
        hidden = input
            .into_iter()
            .zip(hidden)
            .map(|(i, h)| cell(interner, i, h))
            .collect();
    }
    hidden
}

/// Sequence-encoded seeds and edge colors of the aggregated graph.
fn aggregated_inputs(
    tg: &TemporalGraph,
    interner: &mut Interner,
) -> (Vec<ColorId>, ColoredAdjacency) {
    let seed = tg.node_seqs.iter().map(|s| interner.sequence(s)).collect();
    let adj = tg
        .in_adjacency()
        .into_iter()
        .map(|nbrs| {
            nbrs.into_iter()
                .map(|(j, seq)| (j, interner.sequence(seq)))
                .collect()
        })
        .collect();
    (seed, adj)
}

pub(crate) fn time_then_colors(
    tg: &TemporalGraph,
    iterations: usize,
    interner: &mut Interner,
) -> Vec<ColorId> {
    let (seed, adj) = aggregated_inputs(tg, interner);
    refine(interner, Role::Aggregate, &seed, &adj, iterations)
}

fn finish(interner: &Interner, variant: Variant, layer: usize, colors: Vec<ColorId>) -> Coloring {
    Coloring {
        session: interner.session(),
        variant,
        layer,
        colors,
    }
}

/// Time-and-graph refinement.
///
/// Starting from a uniform hidden state, every step `t` refines the snapshot
/// twice for `layers` rounds: once seeded by the step's node attributes and
/// once seeded by the previous hidden state. The cell then interns the pair.
pub fn time_and_wl(tg: &TemporalGraph, layers: usize) -> Coloring {
    let mut interner = Interner::new();
    let colors = time_and_colors(tg, layers, &mut interner);
    finish(&interner, Variant::TimeAnd, tg.horizon * layers, colors)
}

/// Graph-then-time refinement: the cell sees the input refinement and the
/// previous hidden state directly, with no refinement of the hidden state.
pub fn graph_then_time_wl(tg: &TemporalGraph, layers: usize) -> Coloring {
    let mut interner = Interner::new();
    let colors = graph_then_time_colors(tg, layers, &mut interner);
    finish(&interner, Variant::GraphThenTime, tg.horizon * layers, colors)
}

/// Time-then-graph refinement: intern each full node and edge sequence, then
/// refine the aggregated graph for `iterations` rounds.
pub fn time_then_wl(tg: &TemporalGraph, iterations: usize) -> Coloring {
    let mut interner = Interner::new();
    let colors = time_then_colors(tg, iterations, &mut interner);
    finish(&interner, Variant::TimeThen, iterations, colors)
}

/// Time-then-graph colorings after every round `0..=iterations`, one session.
pub fn time_then_trace(tg: &TemporalGraph, iterations: usize) -> Vec<Coloring> {
    let mut interner = Interner::new();
    let (mut colors, adj) = aggregated_inputs(tg, &mut interner);
    let mut out = vec![finish(&interner, Variant::TimeThen, 0, colors.clone())];
    for l in 1..=iterations {
        colors = refine_round(&mut interner, Namespace::new(Role::Aggregate, l), &colors, &adj);
        out.push(finish(&interner, Variant::TimeThen, l, colors.clone()));
    }
    out
}
