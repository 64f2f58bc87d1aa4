//! Library side of the `isla` command: configuration handling, experiment
//! runners and the benchmark.

pub mod args;
pub mod bench;
pub mod config;
pub mod experiment;

pub use config::{CliError, ExperimentConfig, Problem};
