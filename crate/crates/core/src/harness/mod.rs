//! Experiment and check-suite drivers shared by the command-line tool.

mod checks;
mod decode;
mod experiment;

pub use checks::{run_checks, CheckReport, CheckResult, Suite};
pub use decode::dyncsl_decode;
pub use experiment::{
    histogram_digest, run_experiment_dyncsl, ExperimentConfig, ExperimentReport, SampleRecord,
    VariantSummary,
};
