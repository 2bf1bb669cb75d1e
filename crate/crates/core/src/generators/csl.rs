use std::collections::BTreeSet;

use crate::error::{invalid, Result};
use crate::tgraph::{aggregate, SnapshotGraph, TemporalGraph};

/// Circular skip link graph `C(n, s)`: the n-cycle plus chords `{i, i+s mod n}`.
///
/// Chords that coincide with cycle edges are merged, so the result is simple.
pub fn gen_csl(n: usize, skip: usize) -> Result<SnapshotGraph> {
    if n < 3 {
        return Err(invalid(format!("CSL graphs need at least 3 nodes, got {n}")));
    }
    if skip == 0 || skip >= n {
        return Err(invalid(format!("skip {skip} must lie in 1..={}", n - 1)));
    }
    let mut g = SnapshotGraph::new(n, false);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
        g.add_edge(i, (i + skip) % n)?;
    }
    Ok(g)
}

/// One dynamic CSL instance: a skip schedule, its temporal graph, and its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynCslSample {
    pub skips: Vec<usize>,
    pub graph: TemporalGraph,
    /// Number of distinct skip values in the schedule.
    pub label: usize,
}

pub fn gen_dyncsl_sample(n: usize, skips: &[usize]) -> Result<DynCslSample> {
    let snapshots = skips
        .iter()
        .map(|&s| gen_csl(n, s))
        .collect::<Result<Vec<_>>>()?;
    let graph = aggregate(&snapshots)?;
    let label = skips.iter().collect::<BTreeSet<_>>().len();
    Ok(DynCslSample {
        skips: skips.to_vec(),
        graph,
        label,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tgraph::slice;

    /// Edge set of C(n,s) built independently from the `{i, i±1}`, `{i, i±s}` description.
    fn csl_edges_by_enumeration(n: usize, s: usize) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for i in 0..n {
            for d in [1, n - 1, s, n - s] {
                let j = (i + d) % n;
                if i != j {
                    out.insert((i.min(j), i.max(j)));
                }
            }
        }
        out
    }

    fn edge_set(g: &SnapshotGraph) -> BTreeSet<(usize, usize)> {
        g.canonical_edges().collect()
    }

    #[test]
    fn csl_19_2_counts() {
        let g = gen_csl(19, 2).unwrap();
        assert_eq!(edge_set(&g), csl_edges_by_enumeration(19, 2));
        assert_eq!(g.edge_count(), 38);
        assert!(g.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn csl_7_1_is_a_cycle() {
        let g = gen_csl(7, 1).unwrap();
        assert_eq!(g.edge_count(), 7);
        assert_eq!(edge_set(&g), csl_edges_by_enumeration(7, 1));
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn csl_19_skips_are_distinct_edge_sets() {
        let sets: Vec<_> = (2..=6).map(|s| edge_set(&gen_csl(19, s).unwrap())).collect();
        for a in 0..sets.len() {
            for b in a + 1..sets.len() {
                assert_ne!(sets[a], sets[b]);
            }
        }
    }

    #[test]
    fn csl_rejects_bad_parameters() {
        assert!(gen_csl(2, 1).is_err());
        assert!(gen_csl(19, 0).is_err());
        assert!(gen_csl(19, 19).is_err());
    }

    #[test]
    fn odd_order_non_unit_skips_are_four_regular() {
        for n in [5usize, 7, 9, 19] {
            for s in 2..=n - 2 {
                let g = gen_csl(n, s).unwrap();
                assert!(g.degrees().iter().all(|&d| d == 4), "C({n},{s})");
            }
        }
    }

    #[test]
    fn sample_labels() {
        assert_eq!(gen_dyncsl_sample(19, &[2, 3, 3]).unwrap().label, 2);
        assert_eq!(gen_dyncsl_sample(19, &[4; 8]).unwrap().label, 1);
        assert_eq!(
            gen_dyncsl_sample(19, &[2, 3, 4, 5, 6, 2, 3, 4]).unwrap().label,
            5
        );
        assert!(gen_dyncsl_sample(19, &[2, 19]).is_err());
    }

    #[test]
    fn sample_slices_match_schedule() {
        let skips = [2, 5, 3, 3, 6, 4, 2, 2];
        let sample = gen_dyncsl_sample(19, &skips).unwrap();
        for (t, &s) in skips.iter().enumerate() {
            let snap = slice(&sample.graph, t + 1).unwrap();
            assert_eq!(edge_set(&snap), csl_edges_by_enumeration(19, s));
        }
        // cycle edges exist at every step
        for i in 0..19 {
            let seq = sample.graph.edge_seq(i, (i + 1) % 19).unwrap();
            assert!(seq.iter().all(|a| !a.is_null()));
        }
    }
}
