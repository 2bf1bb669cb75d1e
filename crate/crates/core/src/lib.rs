//! Temporal graph expressiveness lab.
//!
//! Exact 1-WL color refinement analogues of three temporal graph
//! representation families:
//!
//! * **time-and-graph**: per-snapshot refinement interleaved with a
//!   recurrent cell ([`wl::time_and_wl`]),
//! * **graph-then-time**: the simplification where the cell only sees the
//!   input refinement ([`wl::graph_then_time_wl`]),
//! * **time-then-graph**: sequence-encode every node and edge history first,
//!   then refine the aggregated static graph once ([`wl::time_then_wl`]).
//!
//! Every "learnable" map is replaced by injective interning, so two nodes get
//! the same color exactly when the most expressive member of the family could
//! not tell them apart. Alongside the refinement engine sit generators
//! (circular skip link graphs, the dynamic CSL dataset, a food-web
//! counterexample), a brute-force isomorphism oracle, lossy edge-sequence
//! encoders, and the experiment/check harness used by the `tglab` CLI.

pub mod aggregators;
pub mod error;
pub mod generators;
pub mod harness;
pub mod oracle;
pub mod par;
pub mod tgraph;
pub mod wl;

pub use error::{Error, Result};
pub use par::Exec;
pub use tgraph::{
    aggregate, apply_permutation, disjoint_union, disjoint_union_all, slice, validate, AttrValue,
    Permutation, SnapshotGraph, TemporalGraph,
};
