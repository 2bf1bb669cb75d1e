use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "tglab", version, about = "Temporal graph expressiveness lab")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate graphs and datasets.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Run a refinement variant on a graph file and write its coloring.
    Wl(WlArgs),
    /// Report whether a variant tells two graphs apart.
    Compare(CompareArgs),
    /// Run an experiment and write its report.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
    /// Run a check suite; exits 3 if any check fails.
    Check(CheckArgs),
    /// Automorphism orbits of a small graph.
    Orbits(OrbitsArgs),
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Circulant skip-link graph C(n, skip) as a one-step temporal graph.
    Csl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        skip: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One dynamic CSL sample (--skips) or a whole seeded dataset (--seed).
    DynamicCsl(DynCslArgs),
    /// The two-chain predator/prey example.
    Foodweb {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random temporal graph.
    Random(RandomArgs),
}

#[derive(Debug, Args)]
pub struct DynCslArgs {
    /// Comma-separated skip schedule, one skip per step.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["seed", "out_dir"], required_unless_present = "seed")]
    pub skips: Option<Vec<usize>>,
    #[arg(long, default_value_t = 19)]
    pub n: usize,
    #[arg(long, requires = "skips")]
    pub out: Option<PathBuf>,
    #[arg(long, requires = "out_dir")]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    #[arg(long, default_value_t = 150)]
    pub count: usize,
    #[arg(long, default_value_t = 8)]
    pub horizon: usize,
    /// Draw labels at random instead of cycling through them.
    #[arg(long)]
    pub unstratified: bool,
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub nodes: usize,
    #[arg(long)]
    pub horizon: usize,
    #[arg(long, default_value_t = 0.3)]
    pub edge_prob: f64,
    /// Number of attribute symbols.
    #[arg(long, default_value_t = 1)]
    pub alphabet: i64,
    #[arg(long)]
    pub directed: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WlArgs {
    #[arg(long)]
    pub variant: String,
    #[arg(long, default_value_t = 2)]
    pub layers: usize,
    /// Rounds for time_then and static (default T·L and L).
    #[arg(long)]
    pub iterations: Option<usize>,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub variant: String,
    #[arg(long, default_value_t = 2)]
    pub layers: usize,
    #[arg(long)]
    pub iterations: Option<usize>,
    pub a: PathBuf,
    pub b: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum ExperimentCommand {
    /// Dynamic CSL separation; exits 3 if the expected separation is absent.
    Dyncsl {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        report: PathBuf,
        /// Also write per-sample rows as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        layers: usize,
        /// Record wall-clock runtime (makes the report non-reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct OrbitsArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 9)]
    pub node_limit: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
