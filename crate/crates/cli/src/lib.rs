//! Benchmark harness: dataset fetching, seeded experiment sweeps and
//! result reports.

pub mod algorithms;
pub mod config;
pub mod error;
pub mod experiment;
pub mod fetch;
pub mod report;

pub use config::{AlgorithmKind, AlgorithmSpec, ExperimentConfig};
pub use error::CliError;
pub use experiment::{aggregate_results, run_experiment, AggregatedResults, ExperimentOutcome, RunRecord};
pub use fetch::{fetch_dataset, FetchConfig};
