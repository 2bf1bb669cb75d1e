//! Brute-force most-expressive reference: exact temporal graph isomorphism,
//! automorphism orbits, canonical forms, and the circulant isomorphism
//! criterion for prime-order CSL graphs.
//!
//! Searches are exhaustive over permutations, pruned by a per-node invariant
//! (attribute sequence plus per-step degree profile). They are meant for
//! small graphs; [`DEFAULT_NODE_LIMIT`] guards against accidental blow-ups.

mod canonical;
mod circulant;
mod search;

pub use canonical::{canonical_form, canonical_form_with};
pub use circulant::{csl_iso, csl_iso_class_count, is_prime};
pub use search::{
    automorphism_mapping, brute_force_iso, brute_force_iso_with, node_orbits, node_orbits_with,
    IsoWitness,
};

pub const DEFAULT_NODE_LIMIT: usize = 9;
