use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn tglab(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tglab"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn help_and_version_exit_zero() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(&tglab(&["--help"], d.path())), 0);
    assert_eq!(code(&tglab(&["--version"], d.path())), 0);
}

#[test]
fn unknown_flag_is_usage_error() {
    let d = tempfile::tempdir().unwrap();
    let o = tglab(&["wl", "--bogus"], d.path());
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(code(&tglab(&[], d.path())), 1);
    assert_eq!(code(&tglab(&["check", "--suite", "theorem9"], d.path())), 1);
}

#[test]
fn malformed_graph_names_location() {
    let d = tempfile::tempdir().unwrap();
    fs::write(d.path().join("bad.json"), "{\n  \"version\": 1,\n  \"directed\": false,,\n}").unwrap();
    let o = tglab(&["wl", "--variant", "time-and", "--input", "bad.json"], d.path());
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3"), "{err}");

    let o = tglab(&["orbits", "--input", "missing.json"], d.path());
    assert_eq!(code(&o), 2);
}

#[test]
fn invalid_graph_content_is_input_error() {
    let d = tempfile::tempdir().unwrap();
    let text = r#"{"version":1,"directed":false,"num_nodes":2,"horizon":1,"node_seqs":[[1],[1]],"edges":[{"u":0,"v":5,"seq":[1]}]}"#;
    fs::write(d.path().join("g.json"), text).unwrap();
    assert_eq!(code(&tglab(&["orbits", "--input", "g.json"], d.path())), 2);
}

#[test]
fn compare_strictness_witness() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    assert_eq!(code(&tglab(&["gen", "dynamic-csl", "--skips", "2,2", "--out", "a.json"], p)), 0);
    assert_eq!(code(&tglab(&["gen", "dynamic-csl", "--skips", "2,3", "--out", "b.json"], p)), 0);
    let tt = tglab(&["compare", "--variant", "time-then", "a.json", "b.json"], p);
    assert_eq!(code(&tt), 0);
    assert_eq!(String::from_utf8_lossy(&tt.stdout).trim(), r#"{"distinguished":true}"#);
    let ta = tglab(&["compare", "--variant", "time_and", "a.json", "b.json"], p);
    assert_eq!(String::from_utf8_lossy(&ta.stdout).trim(), r#"{"distinguished":false}"#);
}

#[test]
fn foodweb_orbits_and_coloring() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    assert_eq!(code(&tglab(&["gen", "foodweb", "--out", "fw.json"], p)), 0);
    let o = tglab(&["orbits", "--input", "fw.json"], p);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["orbits"], serde_json::json!([[0, 3], [1, 4], [2, 5]]));

    let o = tglab(&["wl", "--variant", "time-then", "--input", "fw.json", "--out", "c.json"], p);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(p.join("c.json")).unwrap()).unwrap();
    assert_eq!(v["colors"][0], v["colors"][3]);
    assert_eq!(v["variant"], "time_then");
}

#[test]
fn static_variant_needs_one_snapshot() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    tglab(&["gen", "foodweb", "--out", "fw.json"], p);
    assert_eq!(code(&tglab(&["wl", "--variant", "static", "--input", "fw.json"], p)), 1);
    tglab(&["gen", "csl", "--n", "11", "--skip", "3", "--out", "c.json"], p);
    assert_eq!(code(&tglab(&["wl", "--variant", "static", "--input", "c.json"], p)), 0);
}

#[test]
fn failing_check_exits_three_but_writes_report() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    let o = tglab(&["check", "--suite", "aggregators", "--trials", "1", "--out", "agg.json"], p);
    assert_eq!(code(&o), 3);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(p.join("agg.json")).unwrap()).unwrap();
    assert_eq!(v["ok"], false);
}

#[test]
fn passing_check_exits_zero() {
    let d = tempfile::tempdir().unwrap();
    let o = tglab(&["check", "--suite", "theorem2", "--trials", "1"], d.path());
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ok"], true);
}

#[test]
fn dataset_directory_layout() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    let o = tglab(&["gen", "dynamic-csl", "--seed", "3", "--out-dir", "ds", "--count", "50"], p);
    assert_eq!(code(&o), 0);
    let m: serde_json::Value = serde_json::from_str(&fs::read_to_string(p.join("ds/manifest.json")).unwrap()).unwrap();
    assert_eq!(m["samples"].as_array().unwrap().len(), 50);
    assert!(p.join("ds/sample_49.json").exists());
    assert_eq!(code(&tglab(&["gen", "dynamic-csl", "--out-dir", "x"], p)), 1);
}

#[test]
fn bad_generator_arguments() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path();
    assert_eq!(code(&tglab(&["gen", "csl", "--n", "2", "--skip", "1"], p)), 1);
    let args = ["gen", "random", "--seed", "1", "--nodes", "4", "--horizon", "2", "--edge-prob", "1.5"];
    assert_eq!(code(&tglab(&args, p)), 1);
}
