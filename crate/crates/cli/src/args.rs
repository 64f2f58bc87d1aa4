use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{CliError, ExperimentConfig, Origin};

#[derive(Debug, Parser)]
#[command(name = "isla", version, about = "Bitstring evolutionary algorithm experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one population and print per-generation CSV.
    Run(RunArgs),
    /// Run a fully connected archipelago with per-generation migration.
    Islands(IslandsArgs),
    /// Time repeated fixed-length runs.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct IslandsArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Number of islands (at least 2).
    #[arg(long)]
    pub islands: Option<usize>,
    /// Migrant choice: best or mostdifferent.
    #[arg(long)]
    pub policy: Option<String>,
    /// Write the `<round> <alias> <event> <detail>` event log here.
    #[arg(long)]
    pub log: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long)]
    pub repetitions: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// INI-style `key = value` file; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// dot, onemax or royalroad.
    #[arg(long)]
    pub problem: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub num_rects: Option<usize>,
    #[arg(long)]
    pub arena_side: Option<f64>,
    #[arg(long)]
    pub bits: Option<usize>,
    #[arg(long)]
    pub block_size: Option<usize>,
    #[arg(long)]
    pub pop_size: Option<usize>,
    #[arg(long)]
    pub max_generations: Option<usize>,
    #[arg(long)]
    pub selection_rate: Option<f64>,
    #[arg(long)]
    pub mutation_rate: Option<f64>,
    #[arg(long)]
    pub crossover_rate: Option<f64>,
    #[arg(long)]
    pub crossover_points: Option<usize>,
    #[arg(long)]
    pub flip_count: Option<usize>,
    #[arg(long)]
    pub target_fitness: Option<f64>,
    /// easy or canonical.
    #[arg(long)]
    pub strategy: Option<String>,
    /// Read the dot arena from this `id x0 y0 x1 y1` file.
    #[arg(long)]
    pub arena_file: Option<PathBuf>,
    /// Write the dot arena used by this run to this file.
    #[arg(long)]
    pub write_arena: Option<PathBuf>,
    /// num_rects arena_side dot_x dot_y bits pop_size num_gens selection_rate
    #[arg(value_name = "POSITIONAL")]
    pub positional: Vec<String>,
}

impl CommonArgs {
    fn flag_pairs(&self) -> Vec<(&'static str, String)> {
        let mut pairs = Vec::new();
        let mut push = |key: &'static str, value: Option<String>| {
            if let Some(v) = value {
                pairs.push((key, v));
            }
        };
        push("problem", self.problem.clone());
        push("seed", self.seed.map(|v| v.to_string()));
        push("num_rects", self.num_rects.map(|v| v.to_string()));
        push("arena_side", self.arena_side.map(|v| v.to_string()));
        push("bits", self.bits.map(|v| v.to_string()));
        push("block_size", self.block_size.map(|v| v.to_string()));
        push("pop_size", self.pop_size.map(|v| v.to_string()));
        push("max_generations", self.max_generations.map(|v| v.to_string()));
        push("selection_rate", self.selection_rate.map(|v| v.to_string()));
        push("mutation_rate", self.mutation_rate.map(|v| v.to_string()));
        push("crossover_rate", self.crossover_rate.map(|v| v.to_string()));
        push("crossover_points", self.crossover_points.map(|v| v.to_string()));
        push("flip_count", self.flip_count.map(|v| v.to_string()));
        push("target_fitness", self.target_fitness.map(|v| v.to_string()));
        push("strategy", self.strategy.clone());
        push(
            "arena_file",
            self.arena_file.as_ref().map(|p| p.display().to_string()),
        );
        pairs
    }

    /// `base`, then the config file, then positional arguments, then flags.
    pub fn resolve(
        &self,
        mut base: ExperimentConfig,
        extra: &[(&'static str, String)],
    ) -> Result<ExperimentConfig, CliError> {
        if let Some(path) = &self.config {
            base.merge_file(path)?;
        }
        base.merge_positional(&self.positional)?;
        for (key, value) in self.flag_pairs().iter().chain(extra) {
            base.set(key, value, &Origin::Flag)?;
        }
        Ok(base)
    }
}

impl IslandsArgs {
    pub fn resolve(&self) -> Result<ExperimentConfig, CliError> {
        let mut extra = Vec::new();
        if let Some(n) = self.islands {
            extra.push(("islands", n.to_string()));
        }
        if let Some(p) = &self.policy {
            extra.push(("policy", p.clone()));
        }
        self.common.resolve(ExperimentConfig::default(), &extra)
    }
}

impl BenchArgs {
    pub fn resolve(&self) -> Result<ExperimentConfig, CliError> {
        let extra: Vec<_> = self
            .repetitions
            .map(|r| ("repetitions", r.to_string()))
            .into_iter()
            .collect();
        self.common.resolve(ExperimentConfig::bench_defaults(), &extra)
    }
}
