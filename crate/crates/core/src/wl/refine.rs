//! The 1-WL refinement round and static graph refinement.

use super::{ColorId, Coloring, Interner, Namespace, Role, Signature, Variant};
use crate::tgraph::{SnapshotGraph, TemporalGraph};

/// In-neighbor lists with interned edge colors: `adj[i] = [(j, color(j→i))]`.
pub type ColoredAdjacency = Vec<Vec<(usize, ColorId)>>;

/// One round: `new(i) = intern(ns, old(i), {{(old(j), edge(j,i))}})`.
pub fn refine_round(
    interner: &mut Interner,
    ns: Namespace,
    colors: &[ColorId],
    adj: &ColoredAdjacency,
) -> Vec<ColorId> {
    adj.iter()
        .enumerate()
        .map(|(i, nbrs)| {
            let mut neighbors: Vec<(ColorId, ColorId)> =
                nbrs.iter().map(|&(j, e)| (colors[j], e)).collect();
            neighbors.sort_unstable();
            interner.intern(Signature::Refine {
                ns,
                own: colors[i],
                neighbors,
            })
        })
        .collect()
}

/// `iters` rounds under namespaces `(role, 1..=iters)`.
pub fn refine(
    interner: &mut Interner,
    role: Role,
    seed: &[ColorId],
    adj: &ColoredAdjacency,
    iters: usize,
) -> Vec<ColorId> {
    let mut colors = seed.to_vec();
    for l in 1..=iters {
        colors = refine_round(interner, Namespace::new(role, l), &colors, adj);
    }
    colors
}

pub fn snapshot_adjacency(g: &SnapshotGraph, interner: &mut Interner) -> ColoredAdjacency {
    g.in_adjacency()
        .into_iter()
        .map(|nbrs| {
            nbrs.into_iter()
                .map(|(j, a)| (j, interner.symbol(a)))
                .collect()
        })
        .collect()
}

/// Adjacency of step `t` (1-based) read straight from the aggregated sequences.
pub fn step_adjacency(tg: &TemporalGraph, t: usize, interner: &mut Interner) -> ColoredAdjacency {
    let k = t - 1;
    let mut adj = vec![Vec::new(); tg.node_count];
    for (&(u, v), seq) in &tg.edge_seqs {
        if !seq[k].is_null() {
            adj[v].push((u, interner.symbol(&seq[k])));
        }
    }
    adj
}

/// Refines a static graph, seeded with caller-supplied colors.
///
/// Directed graphs aggregate over in-neighbors.
pub fn static_wl(
    g: &SnapshotGraph,
    seed: &[ColorId],
    iters: usize,
    role: Role,
    interner: &mut Interner,
) -> Vec<ColorId> {
    let adj = snapshot_adjacency(g, interner);
    refine(interner, role, seed, &adj, iters)
}

/// Static refinement in a fresh session, seeded from the node attributes.
pub fn static_wl_attrs(g: &SnapshotGraph, iters: usize) -> Coloring {
    static_wl_trace(g, iters).pop().expect("trace holds iteration 0")
}

/// Colorings after 0, 1, ..., `iters` rounds, all from one session.
pub fn static_wl_trace(g: &SnapshotGraph, iters: usize) -> Vec<Coloring> {
    let mut interner = Interner::new();
    let adj = snapshot_adjacency(g, &mut interner);
    let mut colors: Vec<ColorId> = g.node_attrs.iter().map(|a| interner.symbol(a)).collect();
    let mut out = Vec::with_capacity(iters + 1);
    for l in 0..=iters {
        if l > 0 {
            colors = refine_round(&mut interner, Namespace::new(Role::Static, l), &colors, &adj);
        }
        out.push(Coloring {
            session: interner.session(),
            variant: Variant::Static,
            layer: l,
            colors: colors.clone(),
        });
    }
    out
}
