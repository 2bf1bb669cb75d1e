use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use rand::seq::{index, SliceRandom};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{gen_csl, gen_dyncsl_sample, item_rng, DynCslSample};
use crate::error::{invalid, Result};
use crate::par::{map_indexed, Exec};
use crate::tgraph::io::write_graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetParams {
    pub seed: u64,
    pub count: usize,
    pub horizon: usize,
    pub node_count: usize,
    pub candidates: Vec<usize>,
    pub stratified: bool,
    pub folds: usize,
}

impl Default for DatasetParams {
    fn default() -> Self {
        DatasetParams {
            seed: 0,
            count: 150,
            horizon: 8,
            node_count: 19,
            candidates: vec![2, 3, 4, 5, 6],
            stratified: true,
            folds: 10,
        }
    }
}

impl DatasetParams {
    pub fn with_seed(seed: u64) -> Self {
        DatasetParams {
            seed,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: usize,
    pub label: usize,
    pub fold: usize,
    pub skips: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetManifest {
    pub seed: u64,
    pub count: usize,
    pub horizon: usize,
    pub node_count: usize,
    pub candidates: Vec<usize>,
    pub stratified: bool,
    pub folds: usize,
    pub samples: Vec<ManifestEntry>,
}

impl DatasetManifest {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serialization is infallible")
    }
}

fn check_params(p: &DatasetParams) -> Result<()> {
    if p.candidates.is_empty() {
        return Err(invalid("candidate skip set is empty"));
    }
    if p.candidates.iter().collect::<BTreeSet<_>>().len() != p.candidates.len() {
        return Err(invalid("candidate skips must be distinct"));
    }
    for &s in &p.candidates {
        gen_csl(p.node_count, s)?;
    }
    if p.horizon == 0 || p.count == 0 || p.folds == 0 {
        return Err(invalid("count, horizon and folds must be positive"));
    }
    if p.stratified {
        let k = p.candidates.len();
        if !p.count.is_multiple_of(k) {
            return Err(invalid(format!(
                "stratified dataset of {} samples cannot split evenly over {k} labels",
                p.count
            )));
        }
        if !(p.count / k).is_multiple_of(p.folds) {
            return Err(invalid(format!(
                "{} samples per label cannot spread evenly over {} folds",
                p.count / k,
                p.folds
            )));
        }
        if k > p.horizon {
            return Err(invalid(format!(
                "label {k} needs {k} distinct steps but the horizon is {}",
                p.horizon
            )));
        }
    }
    Ok(())
}

/// Uniform random surjection of `horizon` steps onto `subset`, by rejection.
fn random_surjection<R: Rng + ?Sized>(rng: &mut R, subset: &[usize], horizon: usize) -> Vec<usize> {
    loop {
        let draw: Vec<usize> = (0..horizon)
            .map(|_| *subset.choose(rng).expect("nonempty"))
            .collect();
        if draw.iter().collect::<BTreeSet<_>>().len() == subset.len() {
            return draw;
        }
    }
}

/// Skip schedule and fold for sample `id`.
fn schedule(p: &DatasetParams, id: usize) -> (Vec<usize>, usize) {
    let mut rng = item_rng(p.seed, id);
    let k_total = p.candidates.len();
    if p.stratified {
        // labels interleave 1..=K; group g = id / K holds one sample of each label
        let label = id % k_total + 1;
        let fold = (id / k_total) % p.folds;
        let mut subset: Vec<usize> = index::sample(&mut rng, k_total, label)
            .into_iter()
            .map(|i| p.candidates[i])
            .collect();
        subset.sort_unstable();
        (random_surjection(&mut rng, &subset, p.horizon), fold)
    } else {
        let skips = (0..p.horizon)
            .map(|_| *p.candidates.choose(&mut rng).expect("nonempty"))
            .collect();
        (skips, id % p.folds)
    }
}

/// Generates the dynamic CSL dataset and its manifest.
///
/// Sample `id` draws from its own RNG (`seed ^ id`), so the output does not
/// depend on `exec`.
pub fn gen_dyncsl_dataset(
    params: &DatasetParams,
    exec: Exec,
) -> Result<(Vec<DynCslSample>, DatasetManifest)> {
    check_params(params)?;
    let built = map_indexed(exec, params.count, |id| {
        let (skips, fold) = schedule(params, id);
        gen_dyncsl_sample(params.node_count, &skips).map(|s| (s, fold))
    });
    let mut samples = Vec::with_capacity(params.count);
    let mut entries = Vec::with_capacity(params.count);
    for (id, item) in built.into_iter().enumerate() {
        let (sample, fold) = item?;
        entries.push(ManifestEntry {
            id,
            label: sample.label,
            fold,
            skips: sample.skips.clone(),
        });
        samples.push(sample);
    }
    let manifest = DatasetManifest {
        seed: params.seed,
        count: params.count,
        horizon: params.horizon,
        node_count: params.node_count,
        candidates: params.candidates.clone(),
        stratified: params.stratified,
        folds: params.folds,
        samples: entries,
    };
    Ok((samples, manifest))
}

/// Writes `manifest.json` plus one `sample_<id>.json` graph file per sample.
pub fn write_dataset(
    dir: impl AsRef<Path>,
    samples: &[DynCslSample],
    manifest: &DatasetManifest,
) -> Result<()> {
    let dir = dir.as_ref();
    fs::create_dir_all(dir)?;
    let mut text = manifest.to_json();
    text.push('\n');
    fs::write(dir.join("manifest.json"), text)?;
    for (id, s) in samples.iter().enumerate() {
        write_graph(dir.join(format!("sample_{id}.json")), &s.graph)?;
    }
    Ok(())
}

pub fn read_manifest(path: impl AsRef<Path>) -> Result<DatasetManifest> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}
