//! Exact 1-WL color refinement and its temporal compositions.
//!
//! Learnable message, update, and recurrent maps are all replaced by
//! namespaced interning ([`Interner`]). Colors are only comparable inside the
//! session that produced them, so every cross-graph comparison runs the graphs
//! jointly on their disjoint union.

mod coloring;
mod interner;
mod refine;
mod scheduled;
mod temporal;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use coloring::{histogram, refines, Coloring, ColoringExport, Histogram, Partition};
pub use interner::{ColorId, Interner, Namespace, Role, Signature};
pub use refine::{
    refine, refine_round, snapshot_adjacency, static_wl, static_wl_attrs, static_wl_trace,
    ColoredAdjacency,
};
pub use scheduled::scheduled_wl;
pub use temporal::{graph_then_time_wl, time_and_wl, time_then_trace, time_then_wl};

use crate::error::{invalid, Result};
use crate::tgraph::{disjoint_union_all, slice, Permutation, TemporalGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Static,
    TimeAnd,
    GraphThenTime,
    TimeThen,
    Scheduled,
}

impl Variant {
    pub const TEMPORAL: [Variant; 4] = [
        Variant::TimeAnd,
        Variant::GraphThenTime,
        Variant::TimeThen,
        Variant::Scheduled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Static => "static",
            Variant::TimeAnd => "time_and",
            Variant::GraphThenTime => "graph_then_time",
            Variant::TimeThen => "time_then",
            Variant::Scheduled => "scheduled",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = crate::Error;

    /// Accepts `time_and` as well as `time-and` spellings.
    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "static" => Ok(Variant::Static),
            "time_and" => Ok(Variant::TimeAnd),
            "graph_then_time" => Ok(Variant::GraphThenTime),
            "time_then" => Ok(Variant::TimeThen),
            "scheduled" => Ok(Variant::Scheduled),
            _ => Err(invalid(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WlConfig {
    pub variant: Variant,
    /// Refinement rounds per snapshot.
    pub layers: usize,
    /// Rounds on the aggregated graph (time-then) or the single graph
    /// (static). Defaults to `T·L` and `L` respectively.
    pub iterations: Option<usize>,
}

impl WlConfig {
    pub fn new(variant: Variant, layers: usize) -> Self {
        WlConfig {
            variant,
            layers,
            iterations: None,
        }
    }

    pub fn with_iterations(mut self, iterations: usize) -> Self {
        self.iterations = Some(iterations);
        self
    }

    pub fn effective_iterations(&self, horizon: usize) -> usize {
        match self.variant {
            Variant::TimeThen => self.iterations.unwrap_or(horizon * self.layers),
            Variant::Static => self.iterations.unwrap_or(self.layers),
            _ => horizon * self.layers,
        }
    }
}

fn colors_in(tg: &TemporalGraph, cfg: &WlConfig, interner: &mut Interner) -> Result<Vec<ColorId>> {
    if cfg.layers == 0 {
        return Err(invalid("layers must be at least 1"));
    }
    Ok(match cfg.variant {
        Variant::TimeAnd => temporal::time_and_colors(tg, cfg.layers, interner),
        Variant::GraphThenTime => temporal::graph_then_time_colors(tg, cfg.layers, interner),
        Variant::TimeThen => {
            temporal::time_then_colors(tg, cfg.effective_iterations(tg.horizon), interner)
        }
        Variant::Scheduled => scheduled::scheduled_colors(tg, cfg.layers, interner),
        Variant::Static => {
            if tg.horizon != 1 {
                return Err(invalid(format!(
                    "static refinement needs a single snapshot, got horizon {}",
                    tg.horizon
                )));
            }
            let g = slice(tg, 1)?;
            let seed: Vec<ColorId> = g.node_attrs.iter().map(|a| interner.symbol(a)).collect();
            static_wl(&g, &seed, cfg.effective_iterations(1), Role::Static, interner)
        }
    })
}

/// Runs the configured variant in a fresh session.
pub fn run(tg: &TemporalGraph, cfg: &WlConfig) -> Result<Coloring> {
    let mut interner = Interner::new();
    let colors = colors_in(tg, cfg, &mut interner)?;
    Ok(Coloring {
        session: interner.session(),
        variant: cfg.variant,
        layer: match cfg.variant {
            Variant::TimeThen | Variant::Static => cfg.effective_iterations(tg.horizon),
            _ => tg.horizon * cfg.layers,
        },
        colors,
    })
}

/// Runs the variant once on the disjoint union of `parts`, returning the
/// joint coloring and the node range of each part.
pub fn run_joint<G: AsRef<TemporalGraph>>(
    parts: &[G],
    cfg: &WlConfig,
) -> Result<(Coloring, Vec<std::ops::Range<usize>>)> {
    let (union, ranges) = disjoint_union_all(parts)?;
    Ok((run(&union, cfg)?, ranges))
}

/// Whole-graph color histogram of every part, from one joint session.
pub fn joint_histograms<G: AsRef<TemporalGraph>>(
    parts: &[G],
    cfg: &WlConfig,
) -> Result<Vec<Histogram>> {
    let (coloring, ranges) = run_joint(parts, cfg)?;
    Ok(ranges
        .into_iter()
        .map(|r| coloring.part_histogram(r))
        .collect())
}

/// True iff the variant assigns the two graphs different color histograms.
pub fn distinguish(a: &TemporalGraph, b: &TemporalGraph, cfg: &WlConfig) -> Result<bool> {
    if a.horizon != b.horizon {
        return Err(invalid(format!(
            "cannot compare horizons {} and {}",
            a.horizon, b.horizon
        )));
    }
    let h = joint_histograms(&[a, b], cfg)?;
    Ok(h[0] != h[1])
}

/// Checks that relabeling by `perm` relabels the colors: in a joint run of
/// `tg` and `perm·tg`, node `i` and node `perm(i)` of the copy share a color.
pub fn is_equivariant_on(tg: &TemporalGraph, perm: &Permutation, cfg: &WlConfig) -> Result<bool> {
    let moved = crate::tgraph::apply_permutation(tg, perm)?;
    let (c, ranges) = run_joint(&[tg, &moved], cfg)?;
    let off = ranges[1].start;
    Ok((0..tg.node_count).all(|i| c.colors[i] == c.colors[off + perm.apply(i)]))
}
