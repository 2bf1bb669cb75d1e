use std::collections::BTreeMap;
use std::ops::Range;

use serde::Serialize;

use super::{ColorId, Variant};
use crate::error::{invalid, Result};

/// Per-node colors produced by one refinement session.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub session: u64,
    pub variant: Variant,
    /// Refinement layer (or iteration) the colors were read at.
    pub layer: usize,
    pub colors: Vec<ColorId>,
}

pub type Histogram = BTreeMap<ColorId, usize>;

pub fn histogram(colors: &[ColorId]) -> Histogram {
    let mut h = Histogram::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

impl Coloring {
    pub fn histogram(&self) -> Histogram {
        histogram(&self.colors)
    }

    pub fn part_histogram(&self, part: Range<usize>) -> Histogram {
        histogram(&self.colors[part])
    }

    pub fn partition(&self) -> Partition {
        Partition::from_colors(&self.colors)
    }

    pub fn export(&self) -> ColoringExport {
        ColoringExport {
            session: self.session,
            variant: self.variant.name().to_owned(),
            colors: self.colors.iter().map(|c| c.0).collect(),
            histogram: self.histogram().into_iter().map(|(c, n)| (c.0, n)).collect(),
        }
    }
}

/// JSON shape of an exported coloring.
#[derive(Debug, Clone, Serialize)]
pub struct ColoringExport {
    pub session: u64,
    pub variant: String,
    pub colors: Vec<u32>,
    pub histogram: BTreeMap<u32, usize>,
}

/// Equivalence classes of nodes, each sorted, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
}

impl Partition {
    pub fn from_colors<C: Ord + Copy>(colors: &[C]) -> Self {
        let mut groups: BTreeMap<C, Vec<usize>> = BTreeMap::new();
        for (i, &c) in colors.iter().enumerate() {
            groups.entry(c).or_default().push(i);
        }
        Self::from_classes(groups.into_values().collect())
    }

    /// Canonicalizes arbitrary classes; callers must pass a cover of `0..n`.
    pub fn from_classes(mut classes: Vec<Vec<usize>>) -> Self {
        classes.retain(|c| !c.is_empty());
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.sort_unstable_by_key(|c| c[0]);
        Partition { classes }
    }

    pub fn discrete(n: usize) -> Self {
        Partition {
            classes: (0..n).map(|i| vec![i]).collect(),
        }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn node_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing each node.
    pub fn class_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.node_count()];
        for (k, c) in self.classes.iter().enumerate() {
            for &i in c {
                out[i] = k;
            }
        }
        out
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        let of = self.class_of();
        of[a] == of[b]
    }
}

/// True iff every class of `fine` lies inside some class of `coarse`.
pub fn refines(fine: &Partition, coarse: &Partition) -> Result<bool> {
    let n = fine.node_count();
    if n != coarse.node_count() {
        return Err(invalid(format!(
            "partitions over {n} and {} nodes",
            coarse.node_count()
        )));
    }
    let of = coarse.class_of();
    Ok(fine
        .classes
        .iter()
        .all(|c| c.iter().all(|&i| of[i] == of[c[0]])))
}
