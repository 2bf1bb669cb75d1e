use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::aggregators::{
    binary_sequences, decay_encode, weighted_encode, DecayParams, WeightParams,
};
use crate::error::{invalid, Error, Result};
use crate::generators::{gen_csl, gen_dyncsl_sample, gen_foodweb, item_rng, random_temporal, FoodWebNode};
use crate::oracle::{brute_force_iso_with, csl_iso, node_orbits_with};
use crate::par::{map_indexed, Exec};
use crate::tgraph::{aggregate, apply_permutation, AttrValue, Permutation, TemporalGraph};
use crate::wl::{distinguish, is_equivariant_on, joint_histograms, refines, run, ColorId, Variant, WlConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Theorem1,
    Theorem2,
    Equivariance,
    Oracle,
    Aggregators,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Equivariance,
        Suite::Oracle,
        Suite::Aggregators,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Equivariance => "equivariance",
            Suite::Oracle => "oracle",
            Suite::Aggregators => "aggregators",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: usize,
    pub total: usize,
}

impl CheckResult {
    fn new(name: &str, passed: usize, total: usize) -> Self {
        CheckResult { name: name.to_string(), passed, total }
    }

    fn single(name: &str, ok: bool) -> Self {
        Self::new(name, ok as usize, 1)
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<CheckResult>,
    pub ok: bool,
}

impl CheckReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs one suite. Failures are report content, not errors; only bad
/// arguments (or a broken generator) produce `Err`.
pub fn run_checks(suite: Suite, trials: usize, seed: u64, exec: Exec) -> Result<CheckReport> {
    if trials == 0 {
        return Err(invalid("trials must be at least 1"));
    }
    let checks = match suite {
        Suite::Theorem1 => theorem1(trials, seed, exec)?,
        Suite::Theorem2 => theorem2(exec)?,
        Suite::Equivariance => equivariance(trials, seed, exec)?,
        Suite::Oracle => oracle(trials, seed, exec)?,
        Suite::Aggregators => aggregators()?,
    };
    let ok = checks.iter().all(CheckResult::ok);
    Ok(CheckReport { suite, seed, trials, checks, ok })
}

const LAYERS: usize = 2;

/// Random corpus member: up to `max_n` nodes, `max_t` steps, up to three
/// attribute symbols, roughly a third directed.
fn corpus_graph(rng: &mut ChaCha8Rng, max_n: usize, max_t: usize) -> Result<TemporalGraph> {
    let n = rng.gen_range(1..=max_n);
    let horizon = rng.gen_range(1..=max_t);
    let k = rng.gen_range(1..=3i64);
    let alphabet: Vec<AttrValue> = (1..=k).map(AttrValue::Int).collect();
    let p = rng.gen_range(0.1..0.6);
    let directed = rng.gen_bool(0.3);
    random_temporal(rng, n, horizon, p, &alphabet, directed)
}

fn count<F>(exec: Exec, trials: usize, f: F) -> Result<usize>
where
    F: Fn(usize) -> Result<bool> + Sync + Send,
{
    let results = map_indexed(exec, trials, f);
    let mut passed = 0;
    for r in results {
        passed += r? as usize;
    }
    Ok(passed)
}

fn theorem1(trials: usize, seed: u64, exec: Exec) -> Result<Vec<CheckResult>> {
    let per_graph = map_indexed(exec, trials, |i| -> Result<(bool, bool)> {
        let tg = corpus_graph(&mut item_rng(seed, i), 12, 4)?;
        let ta = run(&tg, &WlConfig::new(Variant::TimeAnd, LAYERS))?.partition();
        let sc = run(&tg, &WlConfig::new(Variant::Scheduled, LAYERS))?.partition();
        let tt = run(&tg, &WlConfig::new(Variant::TimeThen, LAYERS))?.partition();
        Ok((sc == ta, refines(&tt, &ta)?))
    });
    let (mut emulates, mut refined) = (0, 0);
    for r in per_graph {
        let (a, b) = r?;
        emulates += a as usize;
        refined += b as usize;
    }
    let same = gen_dyncsl_sample(19, &[2, 2])?.graph;
    let mixed = gen_dyncsl_sample(19, &[2, 3])?.graph;
    let blind = !distinguish(&same, &mixed, &WlConfig::new(Variant::TimeAnd, LAYERS))?;
    let sees = distinguish(&same, &mixed, &WlConfig::new(Variant::TimeThen, LAYERS))?;
    Ok(vec![
        CheckResult::new("scheduled_equals_time_and", emulates, trials),
        CheckResult::new("time_then_refines_time_and", refined, trials),
        CheckResult::single("strictness_time_and_blind", blind),
        CheckResult::single("strictness_time_then_separates", sees),
    ])
}

/// A fixed, deterministic link score on a pair of node representations.
fn pair_score(a: ColorId, b: ColorId) -> u64 {
    let d = Sha256::new().chain_update(a.0.to_le_bytes()).chain_update(b.0.to_le_bytes()).finalize();
    u64::from_le_bytes(d[..8].try_into().expect("32-byte digest"))
}

fn theorem2(exec: Exec) -> Result<Vec<CheckResult>> {
    use FoodWebNode::*;
    let tg = gen_foodweb();
    let (lynx, orca, penguin) = (Lynx.index(), Orca.index(), Penguin.index());
    let orbits = node_orbits_with(&tg, tg.node_count, exec)?;
    let (mut colors_equal, mut scores_equal) = (0, 0);
    for v in Variant::TEMPORAL {
        let c = run(&tg, &WlConfig::new(v, LAYERS))?.colors;
        colors_equal += (c[lynx] == c[orca]) as usize;
        scores_equal += (pair_score(c[lynx], c[penguin]) == pair_score(c[orca], c[penguin])) as usize;
    }
    let n = Variant::TEMPORAL.len();
    Ok(vec![
        CheckResult::single("lynx_orca_same_orbit", orbits.same_class(lynx, orca)),
        CheckResult::new("lynx_orca_equal_colors", colors_equal, n),
        CheckResult::new("equal_pair_scores", scores_equal, n),
    ])
}

fn equivariance(trials: usize, seed: u64, exec: Exec) -> Result<Vec<CheckResult>> {
    let per_graph = map_indexed(exec, trials, |i| -> Result<Vec<bool>> {
        let mut rng = item_rng(seed, i);
        let tg = corpus_graph(&mut rng, 10, 4)?;
        let perm = Permutation::random(tg.node_count, &mut rng);
        let moved = apply_permutation(&tg, &perm)?;
        let mut out = Vec::new();
        for v in Variant::TEMPORAL {
            let cfg = WlConfig::new(v, LAYERS);
            let h = joint_histograms(&[&tg, &moved], &cfg)?;
            out.push(is_equivariant_on(&tg, &perm, &cfg)? && h[0] == h[1]);
        }
        Ok(out)
    });
    let mut passed = vec![0; Variant::TEMPORAL.len()];
    for r in per_graph {
        for (p, ok) in passed.iter_mut().zip(r?) {
            *p += ok as usize;
        }
    }
    Ok(Variant::TEMPORAL
        .iter()
        .zip(passed)
        .map(|(v, p)| CheckResult::new(&format!("equivariant_{}", v.name()), p, trials))
        .collect())
}

/// Flips one edge at one step, or one node attribute when there is no pair.
fn perturb(tg: &mut TemporalGraph, rng: &mut ChaCha8Rng) -> Result<()> {
    let n = tg.node_count;
    let t = rng.gen_range(0..tg.horizon);
    if n < 2 {
        let u = rng.gen_range(0..n);
        tg.node_seqs[u][t] = AttrValue::Int(99);
        return Ok(());
    }
    let u = rng.gen_range(0..n);
    let v = (u + rng.gen_range(1..n)) % n;
    let mut seq = tg
        .edge_seq(u, v)
        .map(<[AttrValue]>::to_vec)
        .unwrap_or_else(|| vec![AttrValue::Null; tg.horizon]);
    seq[t] = if seq[t].is_null() { AttrValue::unit() } else { AttrValue::Null };
    tg.set_edge_seq(u, v, seq)
}

fn oracle(trials: usize, seed: u64, exec: Exec) -> Result<Vec<CheckResult>> {
    // pair kinds rotate: permuted copy, permuted and perturbed, independent
    let per_pair = map_indexed(exec, trials, |i| -> Result<(bool, Option<bool>)> {
        let mut rng = item_rng(seed, i);
        let a = corpus_graph(&mut rng, 8, 3)?;
        let perm = Permutation::random(a.node_count, &mut rng);
        let b = match i % 3 {
            0 => apply_permutation(&a, &perm)?,
            1 => {
                let mut b = apply_permutation(&a, &perm)?;
                perturb(&mut b, &mut rng)?;
                b
            }
            _ => {
                let mut b = corpus_graph(&mut rng, 8, 3)?;
                while b.node_count != a.node_count || b.horizon != a.horizon || b.directed != a.directed {
                    b = corpus_graph(&mut rng, 8, 3)?;
                }
                b
            }
        };
        let iso = brute_force_iso_with(&a, &b, 8, Exec::Sequential)?;
        let mut sound = true;
        for v in Variant::TEMPORAL {
            if distinguish(&a, &b, &WlConfig::new(v, LAYERS))? && iso.is_isomorphic() {
                sound = false;
            }
        }
        let copy_found = (i % 3 == 0).then(|| iso.is_isomorphic());
        Ok((sound, copy_found))
    });
    let (mut sound, mut copies, mut permuted) = (0, 0, 0);
    for r in per_pair {
        let (s, c) = r?;
        sound += s as usize;
        if let Some(found) = c {
            permuted += 1;
            copies += found as usize;
        }
    }

    let skips: Vec<(usize, usize)> = (2..=5).flat_map(|a| (2..=5).map(move |b| (a, b))).collect();
    let agree = count(exec, skips.len(), |k| {
        let (s1, s2) = skips[k];
        let a = aggregate(&[gen_csl(7, s1)?])?;
        let b = aggregate(&[gen_csl(7, s2)?])?;
        let brute = brute_force_iso_with(&a, &b, 7, Exec::Sequential)?.is_isomorphic();
        Ok(csl_iso(7, s1, s2)? == brute)
    })?;
    Ok(vec![
        CheckResult::new("wl_soundness", sound, trials),
        CheckResult::new("permuted_copies_isomorphic", copies, permuted),
        CheckResult::new("csl_iso_matches_brute_force_n7", agree, skips.len()),
    ])
}

fn aggregators() -> Result<Vec<CheckResult>> {
    let seqs = binary_sequences(8);
    let powers = WeightParams::powers_of_two(8);
    let ones = WeightParams::ones(8);
    let mut outputs = Vec::with_capacity(seqs.len());
    let mut matches = 0;
    for s in &seqs {
        let w = weighted_encode(s, &powers)?;
        outputs.push(w.to_bits());
        let d = decay_encode(s, DecayParams { lambda: 0.0 })?;
        matches += (d.to_bits() == weighted_encode(s, &ones)?.to_bits()) as usize;
    }
    outputs.sort_unstable();
    outputs.dedup();
    Ok(vec![
        CheckResult::new("weighted_outputs_distinct", outputs.len(), seqs.len()),
        CheckResult::new("decay_zero_equals_weighted_ones", matches, seqs.len()),
    ])
}
