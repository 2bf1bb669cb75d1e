//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use tglab_core::aggregators::{binary_sequences, decay_encode, weighted_encode, DecayParams, WeightParams};
use tglab_core::generators::{gen_csl, gen_dyncsl_sample, gen_foodweb, gen_random_temporal, gen_random_temporal_directed, item_rng, FoodWebNode};
use tglab_core::harness::{run_checks, run_experiment_dyncsl, ExperimentConfig, Suite};
use tglab_core::oracle::{brute_force_iso, csl_iso, node_orbits};
use tglab_core::wl::{distinguish, is_equivariant_on, run, ColorId, Variant, WlConfig};
use tglab_core::{aggregate, AttrValue, Exec, Permutation};

type Verdict = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Verdict);

fn ensure(ok: bool, detail: String) -> Verdict {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn dyncsl_separation() -> Verdict {
    let start = Instant::now();
    let r = run_experiment_dyncsl(7, &ExperimentConfig::default()).map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    let n = r.samples.len();
    let total_pairs = n * (n - 1) / 2;
    let ta = &r.variants["time_and"];
    let gtt = &r.variants["graph_then_time"];
    let tt = &r.variants["time_then"];
    let correct = r.samples.iter().filter(|s| s.pred == Some(s.label)).count();
    let tt_acc = tt.accuracy.unwrap_or(f64::NAN);
    let detail = format!(
        "n={n}, time_and {} digest(s) {}/{total_pairs} pairs, graph_then_time {} digest(s) {}/{total_pairs} pairs, time_then {correct}/{n} (reported {tt_acc}), {secs:.2}s",
        ta.distinct_digests, ta.distinguished_pairs, gtt.distinct_digests, gtt.distinguished_pairs
    );
    ensure(
        n == 150
            && total_pairs == 11_175
            && ta.distinct_digests == 1
            && ta.distinguished_pairs == 0
            && gtt.distinct_digests == 1
            && gtt.distinguished_pairs == 0
            && correct == 150
            && tt_acc == correct as f64 / n as f64
            && secs < 30.0,
        detail,
    )
}

fn theorem1_emulation() -> Verdict {
    let r = run_checks(Suite::Theorem1, 200, 11, Exec::default()).map_err(|e| e.to_string())?;
    let c = r.check("scheduled_equals_time_and").ok_or("missing check")?;
    ensure(c.passed == 200 && c.total == 200, format!("{}/{} partitions equal", c.passed, c.total))
}

fn theorem1_refinement() -> Verdict {
    let r = run_checks(Suite::Theorem1, 200, 11, Exec::default()).map_err(|e| e.to_string())?;
    let c = r.check("time_then_refines_time_and").ok_or("missing check")?;
    let same = gen_dyncsl_sample(19, &[2, 2]).map_err(|e| e.to_string())?.graph;
    let mixed = gen_dyncsl_sample(19, &[2, 3]).map_err(|e| e.to_string())?.graph;
    let d = |v| distinguish(&same, &mixed, &WlConfig::new(v, 2)).map_err(|e| e.to_string());
    let (ta, tt) = (d(Variant::TimeAnd)?, d(Variant::TimeThen)?);
    ensure(
        c.passed == 200 && c.total == 200 && !ta && tt,
        format!("{}/{} refine, witness time_and={ta} time_then={tt}", c.passed, c.total),
    )
}

fn theorem2_foodweb() -> Verdict {
    use FoodWebNode::*;
    let tg = gen_foodweb();
    let orbits = node_orbits(&tg, 9).map_err(|e| e.to_string())?;
    let same_orbit = orbits.same_class(Lynx.index(), Orca.index());
    let score = |a: ColorId, b: ColorId| (a.0 as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (b.0 as u64).rotate_left(17);
    let mut details = Vec::new();
    let mut ok = same_orbit;
    for v in [Variant::TimeAnd, Variant::GraphThenTime, Variant::TimeThen] {
        let c = run(&tg, &WlConfig::new(v, 2)).map_err(|e| e.to_string())?.colors;
        let args_equal = (c[Lynx.index()], c[Penguin.index()]) == (c[Orca.index()], c[Penguin.index()]);
        let scores_equal = score(c[Lynx.index()], c[Penguin.index()]) == score(c[Orca.index()], c[Penguin.index()]);
        ok &= args_equal && scores_equal;
        details.push(format!("{}={}", v.name(), args_equal && scores_equal));
    }
    ensure(ok, format!("orbit={same_orbit}, {}", details.join(" ")))
}

fn oracle_cross_validation() -> Verdict {
    let start = Instant::now();
    let mut agree = 0;
    for s1 in 2..=5 {
        for s2 in 2..=5 {
            let a = aggregate(&[gen_csl(7, s1).map_err(|e| e.to_string())?]).map_err(|e| e.to_string())?;
            let b = aggregate(&[gen_csl(7, s2).map_err(|e| e.to_string())?]).map_err(|e| e.to_string())?;
            let brute = brute_force_iso(&a, &b, 7).map_err(|e| e.to_string())?.is_isomorphic();
            agree += (csl_iso(7, s1, s2).map_err(|e| e.to_string())? == brute) as usize;
        }
    }
    let r = run_checks(Suite::Oracle, 500, 13, Exec::default()).map_err(|e| e.to_string())?;
    let sound = r.check("wl_soundness").ok_or("missing check")?;
    let secs = start.elapsed().as_secs_f64();
    ensure(
        agree == 16 && sound.passed == 500 && sound.total == 500 && secs < 60.0,
        format!("csl_iso agrees {agree}/16, soundness {}/{} pairs clean, {secs:.2}s", sound.passed, sound.total),
    )
}

fn equivariance() -> Verdict {
    let mut passed = 0;
    for i in 0..100u64 {
        let alphabet: Vec<AttrValue> = (1..=(1 + i as i64 % 3)).map(AttrValue::Int).collect();
        let (n, t) = (2 + i as usize % 9, 1 + i as usize % 4);
        let tg = if i % 4 == 3 {
            gen_random_temporal_directed(1000 + i, n, t, 0.35, &alphabet)
        } else {
            gen_random_temporal(1000 + i, n, t, 0.35, &alphabet)
        }
        .map_err(|e| e.to_string())?;
        let perm = Permutation::random(n, &mut item_rng(2000 + i, 0));
        let mut all = true;
        for v in [Variant::TimeAnd, Variant::GraphThenTime, Variant::TimeThen, Variant::Scheduled] {
            all &= is_equivariant_on(&tg, &perm, &WlConfig::new(v, 2)).map_err(|e| e.to_string())?;
        }
        passed += all as usize;
    }
    ensure(passed == 100, format!("{passed}/100 pairs color-matched under every variant"))
}

fn aggregator_distinct() -> Verdict {
    let theta = WeightParams::powers_of_two(8);
    let mut outs = BTreeSet::new();
    for s in binary_sequences(8) {
        outs.insert(weighted_encode(&s, &theta).map_err(|e| e.to_string())?.to_bits());
    }
    ensure(outs.len() == 256, format!("{}/256 distinct binary64 outputs", outs.len()))
}

fn aggregator_decay_equals_weighted() -> Verdict {
    let ones = WeightParams::ones(8);
    let mut equal = 0;
    for s in binary_sequences(8) {
        let d = decay_encode(&s, DecayParams { lambda: 0.0 }).map_err(|e| e.to_string())?;
        let w = weighted_encode(&s, &ones).map_err(|e| e.to_string())?;
        equal += (d.to_bits() == w.to_bits()) as usize;
    }
    ensure(equal == 256, format!("{equal}/256 bitwise equal"))
}

/// Runs each command in two fresh directories and compares every output.
fn determinism() -> Verdict {
    let commands: Vec<Vec<&str>> = vec![
        vec!["gen", "csl", "--n", "19", "--skip", "2", "--out", "csl.json"],
        vec!["gen", "dynamic-csl", "--skips", "2,2", "--out", "a.json"],
        vec!["gen", "dynamic-csl", "--skips", "2,3", "--out", "b.json"],
        vec!["gen", "dynamic-csl", "--seed", "7", "--out-dir", "ds"],
        vec!["gen", "foodweb", "--out", "fw.json"],
        vec!["gen", "random", "--seed", "5", "--nodes", "9", "--horizon", "3", "--alphabet", "3", "--out", "r.json"],
        vec!["gen", "random", "--seed", "5", "--nodes", "9", "--horizon", "3", "--directed", "--out", "rd.json"],
        vec!["wl", "--variant", "time-and", "--input", "r.json", "--out", "wl_ta.json"],
        vec!["wl", "--variant", "graph-then-time", "--input", "r.json", "--out", "wl_gtt.json"],
        vec!["wl", "--variant", "time-then", "--input", "rd.json", "--out", "wl_tt.json"],
        vec!["wl", "--variant", "scheduled", "--input", "fw.json", "--out", "wl_sc.json"],
        vec!["wl", "--variant", "static", "--input", "csl.json", "--out", "wl_st.json"],
        vec!["compare", "--variant", "time-then", "a.json", "b.json"],
        vec!["compare", "--variant", "time-and", "a.json", "b.json"],
        vec!["experiment", "dyncsl", "--seed", "7", "--report", "rep.json", "--csv", "rep.csv"],
        vec!["check", "--suite", "theorem1", "--trials", "200", "--seed", "11", "--out", "t1.json"],
        vec!["check", "--suite", "theorem2", "--trials", "1", "--seed", "0", "--out", "t2.json"],
        vec!["check", "--suite", "equivariance", "--trials", "100", "--seed", "5", "--out", "eq.json"],
        vec!["check", "--suite", "oracle", "--trials", "500", "--seed", "13", "--out", "or.json"],
        vec!["check", "--suite", "aggregators", "--trials", "1", "--seed", "0", "--out", "ag.json"],
        vec!["orbits", "--input", "fw.json"],
    ];
    let dirs = [tempfile::tempdir().map_err(|e| e.to_string())?, tempfile::tempdir().map_err(|e| e.to_string())?];
    let mut stdouts: [Vec<Vec<u8>>; 2] = Default::default();
    let mut codes: [Vec<Option<i32>>; 2] = Default::default();
    for (k, dir) in dirs.iter().enumerate() {
        for args in &commands {
            let o = Command::new(env!("CARGO_BIN_EXE_tglab"))
                .args(args)
                .current_dir(dir.path())
                .output()
                .map_err(|e| e.to_string())?;
            stdouts[k].push(o.stdout);
            codes[k].push(o.status.code());
        }
    }
    let files = [list_files(dirs[0].path()), list_files(dirs[1].path())];
    let mut mismatched = Vec::new();
    if files[0] != files[1] {
        mismatched.push("file sets differ".to_string());
    }
    for f in &files[0] {
        if fs::read(dirs[0].path().join(f)).ok() != fs::read(dirs[1].path().join(f)).ok() {
            mismatched.push(f.clone());
        }
    }
    for (i, args) in commands.iter().enumerate() {
        if stdouts[0][i] != stdouts[1][i] || codes[0][i] != codes[1][i] {
            mismatched.push(args.join(" "));
        }
    }
    ensure(
        mismatched.is_empty(),
        format!(
            "{} commands, {} files compared{}",
            commands.len(),
            files[0].len(),
            if mismatched.is_empty() { String::new() } else { format!("; differing: {}", mismatched.join(", ")) }
        ),
    )
}

fn list_files(root: &Path) -> Vec<String> {
    let mut out = Vec::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in fs::read_dir(&d).into_iter().flatten().flatten() {
            let p = e.path();
            if p.is_dir() {
                stack.push(p);
            } else {
                out.push(p.strip_prefix(root).expect("under root").display().to_string());
            }
        }
    }
    out.sort();
    out
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1", "dynamic CSL separation", dyncsl_separation),
        ("2", "scheduled emulates time-and", theorem1_emulation),
        ("3", "time-then refines time-and, strictness witness", theorem1_refinement),
        ("4", "food web: Lynx and Orca indistinguishable", theorem2_foodweb),
        ("5", "oracle cross-validation and WL soundness", oracle_cross_validation),
        ("6", "equivariance", equivariance),
        ("7a", "power-of-two weights give 256 distinct outputs", aggregator_distinct),
        ("7b", "decay at rate 0 equals unit weights", aggregator_decay_equals_weighted),
        ("8", "byte-identical CLI reruns", determinism),
    ];
    let mut failed = 0;
    for (id, title, check) in criteria {
        match check() {
            Ok(detail) => println!("criterion {id:<3} PASS  {title}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:<3} FAIL  {title}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
