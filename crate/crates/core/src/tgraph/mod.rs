//! Temporal graph data model in both views.
//!
//! A [`TemporalGraph`] is the aggregated form: a static graph over a fixed
//! node universe whose node and edge attributes are length-`T` sequences,
//! padded with [`AttrValue::Null`] where a node or edge is absent. The
//! snapshot form is a plain `Vec<SnapshotGraph>`; [`aggregate`] and
//! [`slice`] convert between the two.

mod attr;
pub mod io;
mod permutation;
mod snapshot;
mod temporal;
mod validate;

pub use attr::AttrValue;
pub use permutation::Permutation;
pub use snapshot::SnapshotGraph;
pub use temporal::{
    aggregate, apply_permutation, disjoint_union, disjoint_union_all, slice, TemporalGraph,
};
pub use validate::{validate, ValidationReport, Violation};
