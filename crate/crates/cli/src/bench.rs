//! Throughput benchmark: times a fixed number of generations, repeatedly.

use std::io::Write;

use isla_core::engine::run;
use isla_core::prelude::*;

use crate::config::{CliError, ExperimentConfig};
use crate::experiment::{build_fitness, generation};

pub const BENCH_HEADER: &str =
    "repetition,generations,evals_per_gen,mean_gen_ms,min_gen_ms,evaluations,evals_per_sec";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub generations: usize,
    pub evals_per_gen: f64,
    pub mean_gen_ms: f64,
    pub min_gen_ms: f64,
    /// Evaluations made by the generation steps, excluding the initial population.
    pub evaluations: u64,
    pub evals_per_sec: f64,
}

/// Runs `cfg.repetitions` timed runs of exactly `cfg.max_generations` steps
/// (no target), seeded `seed, seed + 1, ...`. Writes one row per repetition
/// and a final `summary` row.
pub fn run_bench(cfg: &ExperimentConfig, out: &mut dyn Write) -> Result<Vec<BenchRow>, CliError> {
    cfg.validate()?;
    let generation = generation(cfg)?;
    let io = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    writeln!(out, "{BENCH_HEADER}").map_err(io)?;
    let mut rows = Vec::with_capacity(cfg.repetitions);
    let mut all_gen_ms = Vec::new();
    for rep in 0..cfg.repetitions {
        let mut rng = RandomSource::new(cfg.seed.wrapping_add(rep as u64));
        let fitness = build_fitness(cfg, &mut rng)?;
        let pop = random_population(cfg.pop_size, cfg.bits, &mut rng)?;
        let (_, stats) = run(
            pop,
            &generation,
            &fitness,
            &[Terminator::MaxGenerations(cfg.max_generations)],
            &mut rng,
        )?;
        let gen_ms: Vec<f64> = stats
            .history
            .windows(2)
            .map(|w| (w[1].elapsed - w[0].elapsed).as_secs_f64() * 1e3)
            .collect();
        let step_time: f64 = gen_ms.iter().sum();
        let evaluations = stats.evaluations - stats.history[0].evaluations;
        let row = BenchRow {
            generations: stats.generations_executed,
            evals_per_gen: evaluations as f64 / stats.generations_executed as f64,
            mean_gen_ms: step_time / gen_ms.len() as f64,
            min_gen_ms: gen_ms.iter().copied().fold(f64::INFINITY, f64::min),
            evaluations,
            evals_per_sec: evaluations as f64 / (step_time / 1e3).max(1e-9),
        };
        write_row(out, &(rep + 1).to_string(), &row).map_err(io)?;
        all_gen_ms.extend(gen_ms);
        rows.push(row);
    }
    let total_evals: u64 = rows.iter().map(|r| r.evaluations).sum();
    let total_ms: f64 = all_gen_ms.iter().sum();
    let total_gens: usize = rows.iter().map(|r| r.generations).sum();
    let summary = BenchRow {
        generations: total_gens,
        evals_per_gen: total_evals as f64 / total_gens as f64,
        mean_gen_ms: total_ms / all_gen_ms.len() as f64,
        min_gen_ms: all_gen_ms.iter().copied().fold(f64::INFINITY, f64::min),
        evaluations: total_evals,
        evals_per_sec: total_evals as f64 / (total_ms / 1e3).max(1e-9),
    };
    write_row(out, "summary", &summary).map_err(io)?;
    rows.push(summary);
    Ok(rows)
}

fn write_row(out: &mut dyn Write, label: &str, r: &BenchRow) -> std::io::Result<()> {
    writeln!(
        out,
        "{label},{},{},{:.6},{:.6},{},{:.1}",
        r.generations, r.evals_per_gen, r.mean_gen_ms, r.min_gen_ms, r.evaluations, r.evals_per_sec
    )
}
