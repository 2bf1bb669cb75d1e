use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::decode::dyncsl_decode;
use crate::error::Result;
use crate::generators::{gen_dyncsl_dataset, DatasetParams};
use crate::par::{map_slice, Exec};
use crate::wl::{joint_histograms, Histogram, Variant, WlConfig};

pub const EXPERIMENT_DYNCSL: &str = "dyncsl";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub layers: usize,
    pub exec: Exec,
    /// Record wall-clock time. Off by default so reports are reproducible.
    pub timing: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            layers: 2,
            exec: Exec::default(),
            timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariantSummary {
    pub accuracy: Option<f64>,
    pub distinct_digests: usize,
    pub distinguished_pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub id: usize,
    pub label: usize,
    pub pred: Option<usize>,
    /// Time-then histogram digest.
    pub digest: String,
    pub digests: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub seed: u64,
    pub variants: BTreeMap<String, VariantSummary>,
    pub samples: Vec<SampleRecord>,
    pub runtime_ms: u64,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// SHA-256 over `(color u32 LE, count u64 LE)` in color order.
pub fn histogram_digest(h: &Histogram) -> String {
    let mut hasher = Sha256::new();
    for (c, &k) in h {
        hasher.update(c.0.to_le_bytes());
        hasher.update((k as u64).to_le_bytes());
    }
    hex::encode(hasher.finalize())
}

/// Pairs of samples whose digests differ.
fn distinguished_pairs(digests: &[String]) -> usize {
    let mut groups: BTreeMap<&str, usize> = BTreeMap::new();
    for d in digests {
        *groups.entry(d).or_default() += 1;
    }
    let pairs = |k: usize| k * k.saturating_sub(1) / 2;
    pairs(digests.len()) - groups.values().map(|&g| pairs(g)).sum::<usize>()
}

const VARIANTS: [Variant; 3] = [Variant::TimeAnd, Variant::GraphThenTime, Variant::TimeThen];

/// Generates the stratified dataset, hashes every sample's whole-graph
/// histogram under each variant (one joint session per variant), and scores
/// the presence-pattern decoder for the time-then row.
pub fn run_experiment_dyncsl(seed: u64, cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    let start = Instant::now();
    let (samples, manifest) = gen_dyncsl_dataset(&DatasetParams::with_seed(seed), cfg.exec)?;
    let graphs: Vec<_> = samples.iter().map(|s| &s.graph).collect();

    let per_variant = map_slice(cfg.exec, &VARIANTS, |&v| -> Result<Vec<String>> {
        let hists = joint_histograms(&graphs, &WlConfig::new(v, cfg.layers))?;
        Ok(hists.iter().map(histogram_digest).collect())
    });
    let per_variant = per_variant.into_iter().collect::<Result<Vec<_>>>()?;

    let preds = map_slice(cfg.exec, &graphs, |g| dyncsl_decode(g));
    let preds = preds.into_iter().collect::<Result<Vec<_>>>()?;

    let mut variants = BTreeMap::new();
    for (v, digests) in VARIANTS.iter().zip(&per_variant) {
        let mut distinct = digests.clone();
        distinct.sort();
        distinct.dedup();
        let accuracy = (*v == Variant::TimeThen).then(|| {
            let correct = manifest
                .samples
                .iter()
                .zip(&preds)
                .filter(|(m, &p)| m.label == p)
                .count();
            correct as f64 / samples.len() as f64
        });
        variants.insert(
            v.name().to_string(),
            VariantSummary {
                accuracy,
                distinct_digests: distinct.len(),
                distinguished_pairs: distinguished_pairs(digests),
            },
        );
    }

    let tt = VARIANTS.iter().position(|&v| v == Variant::TimeThen).expect("listed");
    let records = manifest
        .samples
        .iter()
        .map(|m| SampleRecord {
            id: m.id,
            label: m.label,
            pred: Some(preds[m.id]),
            digest: per_variant[tt][m.id].clone(),
            digests: VARIANTS
                .iter()
                .zip(&per_variant)
                .map(|(v, d)| (v.name().to_string(), d[m.id].clone()))
                .collect(),
        })
        .collect();

    Ok(ExperimentReport {
        experiment: EXPERIMENT_DYNCSL.to_string(),
        seed,
        variants,
        samples: records,
        runtime_ms: if cfg.timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
    })
}
