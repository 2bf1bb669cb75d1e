//! Graph generators: circular skip link graphs, the dynamic CSL dataset, the
//! two-component food web, and seeded random temporal graphs.
//!
//! Everything here is a pure function of its arguments, seed included.

mod csl;
mod dataset;
mod foodweb;
mod random;

pub use csl::{gen_csl, gen_dyncsl_sample, DynCslSample};
pub use dataset::{
    gen_dyncsl_dataset, read_manifest, write_dataset, DatasetManifest, DatasetParams,
    ManifestEntry,
};
pub use foodweb::{gen_foodweb, FoodWebNode, FOODWEB_NAMES};
pub use random::{gen_random_temporal, gen_random_temporal_directed, random_temporal};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// RNG for work item `index` under `base_seed`; items can be generated in any order.
pub fn item_rng(base_seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(base_seed ^ index as u64)
}
