//! `tglab`: command-line front end for the temporal graph lab.
//!
//! Exit codes: 0 success, 1 usage or argument error, 2 unreadable or invalid
//! input file, 3 failed check or experiment assertion.

mod args;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, DynCslArgs, ExperimentCommand, GenCommand, RandomArgs};
use tglab_core::generators::{
    gen_csl, gen_dyncsl_dataset, gen_dyncsl_sample, gen_foodweb, gen_random_temporal,
    gen_random_temporal_directed, write_dataset, DatasetParams,
};
use tglab_core::harness::{run_checks, run_experiment_dyncsl, ExperimentConfig, ExperimentReport, Suite};
use tglab_core::oracle::node_orbits;
use tglab_core::tgraph::io::{read_graph, to_json};
use tglab_core::wl::{distinguish, run, Variant, WlConfig};
use tglab_core::{aggregate, AttrValue, Exec, TemporalGraph};

enum Failure {
    Usage(String),
    Input(String),
    Check(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Check(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Check(m) => m,
        }
    }
}

impl From<tglab_core::Error> for Failure {
    fn from(e: tglab_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn exec(sequential: bool) -> Exec {
    if sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn load(path: &Path) -> std::result::Result<TemporalGraph, Failure> {
    read_graph(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn emit_json<T: Serialize>(out: Option<&Path>, value: &T) -> Outcome {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    emit(out, &text)
}

fn emit_graph(out: Option<&PathBuf>, tg: &TemporalGraph) -> Outcome {
    let mut text = to_json(tg);
    text.push('\n');
    emit(out.map(PathBuf::as_path), &text)
}

fn variant_config(name: &str, layers: usize, iterations: Option<usize>) -> std::result::Result<WlConfig, Failure> {
    let variant: Variant = name.parse()?;
    let cfg = WlConfig::new(variant, layers);
    Ok(match iterations {
        Some(i) => cfg.with_iterations(i),
        None => cfg,
    })
}

fn gen_dynamic_csl(a: &DynCslArgs) -> Outcome {
    if let Some(skips) = &a.skips {
        let sample = gen_dyncsl_sample(a.n, skips)?;
        return emit_graph(a.out.as_ref(), &sample.graph);
    }
    let (Some(seed), Some(dir)) = (a.seed, a.out_dir.as_ref()) else {
        return Err(Failure::Usage("dataset generation needs --seed and --out-dir".into()));
    };
    let params = DatasetParams {
        seed,
        count: a.count,
        horizon: a.horizon,
        node_count: a.n,
        stratified: !a.unstratified,
        ..DatasetParams::default()
    };
    let (samples, manifest) = gen_dyncsl_dataset(&params, exec(a.sequential))?;
    write_dataset(dir, &samples, &manifest)?;
    Ok(())
}

fn gen_random(a: &RandomArgs) -> Outcome {
    if a.alphabet < 1 {
        return Err(Failure::Usage("--alphabet must be at least 1".into()));
    }
    let alphabet: Vec<AttrValue> = (1..=a.alphabet).map(AttrValue::Int).collect();
    let generate = if a.directed { gen_random_temporal_directed } else { gen_random_temporal };
    let tg = generate(a.seed, a.nodes, a.horizon, a.edge_prob, &alphabet)?;
    emit_graph(a.out.as_ref(), &tg)
}

fn write_csv(path: &Path, report: &ExperimentReport) -> Outcome {
    let fail = |e: csv::Error| Failure::Usage(format!("{}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(fail)?;
    let names: Vec<&String> = report.variants.keys().collect();
    let mut header = vec!["id".to_string(), "label".into(), "pred".into()];
    header.extend(names.iter().map(|n| format!("digest_{n}")));
    w.write_record(&header).map_err(fail)?;
    for s in &report.samples {
        let mut row = vec![
            s.id.to_string(),
            s.label.to_string(),
            s.pred.map(|p| p.to_string()).unwrap_or_default(),
        ];
        row.extend(names.iter().map(|n| s.digests.get(*n).cloned().unwrap_or_default()));
        w.write_record(&row).map_err(fail)?;
    }
    w.flush().map_err(|e| Failure::Usage(e.to_string()))
}

/// The separation the dyncsl run is expected to show.
fn dyncsl_assertions(report: &ExperimentReport) -> Vec<String> {
    let mut failures = Vec::new();
    for name in ["time_and", "graph_then_time"] {
        match report.variants.get(name) {
            Some(v) if v.distinct_digests == 1 => {}
            Some(v) => failures.push(format!("{name}: {} distinct digests, expected 1", v.distinct_digests)),
            None => failures.push(format!("{name}: missing")),
        }
    }
    match report.variants.get("time_then").and_then(|v| v.accuracy) {
        Some(1.0) => {}
        other => failures.push(format!("time_then accuracy {other:?}, expected 1.0")),
    }
    failures
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen(GenCommand::Csl { n, skip, out }) => {
            let tg = aggregate(&[gen_csl(n, skip)?])?;
            emit_graph(out.as_ref(), &tg)
        }
        Command::Gen(GenCommand::DynamicCsl(a)) => gen_dynamic_csl(&a),
        Command::Gen(GenCommand::Foodweb { out }) => emit_graph(out.as_ref(), &gen_foodweb()),
        Command::Gen(GenCommand::Random(a)) => gen_random(&a),
        Command::Wl(a) => {
            let cfg = variant_config(&a.variant, a.layers, a.iterations)?;
            let tg = load(&a.input)?;
            let coloring = run(&tg, &cfg)?;
            emit_json(a.out.as_deref(), &coloring.export())
        }
        Command::Compare(a) => {
            let cfg = variant_config(&a.variant, a.layers, a.iterations)?;
            let (ga, gb) = (load(&a.a)?, load(&a.b)?);
            let d = distinguish(&ga, &gb, &cfg)?;
            emit(None, &format!("{}\n", serde_json::json!({ "distinguished": d })))
        }
        Command::Experiment(ExperimentCommand::Dyncsl { seed, report, csv, layers, timing, sequential }) => {
            let cfg = ExperimentConfig { layers, exec: exec(sequential), timing };
            let r = run_experiment_dyncsl(seed, &cfg)?;
            emit(Some(&report), &r.to_json())?;
            if let Some(path) = csv {
                write_csv(&path, &r)?;
            }
            let failures = dyncsl_assertions(&r);
            if failures.is_empty() {
                Ok(())
            } else {
                Err(Failure::Check(failures.join("; ")))
            }
        }
        Command::Check(a) => {
            let suite: Suite = a.suite.parse()?;
            let r = run_checks(suite, a.trials, a.seed, exec(a.sequential))?;
            emit(a.out.as_deref(), &r.to_json())?;
            if r.ok {
                Ok(())
            } else {
                let failed: Vec<String> = r
                    .checks
                    .iter()
                    .filter(|c| !c.ok())
                    .map(|c| format!("{} {}/{}", c.name, c.passed, c.total))
                    .collect();
                Err(Failure::Check(format!("failed checks: {}", failed.join(", "))))
            }
        }
        Command::Orbits(a) => {
            let tg = load(&a.input)?;
            let orbits = node_orbits(&tg, a.node_limit)?;
            emit_json(a.out.as_deref(), &serde_json::json!({ "orbits": orbits.classes() }))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
