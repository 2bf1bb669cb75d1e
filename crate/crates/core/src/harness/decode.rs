use std::collections::BTreeSet;

use crate::error::{invalid, Result};
use crate::tgraph::TemporalGraph;

/// Reads the label of a dynamic CSL sample off its edge presence patterns.
///
/// Cycle edges are present at every step; the skip edges of each distinct
/// skip value share one pattern (the steps that used it). So the number of
/// distinct patterns is the label plus one, except for a single-skip
/// schedule where every edge is always present.
pub fn dyncsl_decode(tg: &TemporalGraph) -> Result<usize> {
    let patterns: BTreeSet<Vec<bool>> = tg
        .canonical_edges()
        .map(|(u, v)| {
            tg.edge_seq(u, v)
                .expect("canonical edge")
                .iter()
                .map(|a| !a.is_null())
                .collect()
        })
        .collect();
    if patterns.is_empty() {
        return Err(invalid("graph has no edges"));
    }
    let all_present = vec![true; tg.horizon];
    if patterns.len() == 1 && patterns.contains(&all_present) {
        Ok(1)
    } else {
        Ok(patterns.len() - 1)
    }
}
