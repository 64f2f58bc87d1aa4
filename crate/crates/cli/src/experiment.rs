//! Running configured experiments and emitting CSV.

use std::io::Write;
use std::path::Path;

use isla_core::engine::{run_observed, StopReason};
use isla_core::islands::{fully_connected, run_archipelago, ArchipelagoReport};
use isla_core::prelude::*;

use crate::config::{CliError, ExperimentConfig, Problem};

pub const EXIT_TARGET_REACHED: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_GENERATION_LIMIT: u8 = 2;

pub const RUN_HEADER: &str = "generation,best_fitness,evaluations,elapsed_ms";
pub const ISLANDS_HEADER: &str = "island,generation,best_fitness,evaluations,elapsed_ms";

/// Fitness for whichever bundled problem the configuration names.
#[derive(Debug, Clone)]
pub enum ProblemFitness {
    Dot(DotFitness),
    OneMax,
    RoyalRoad(RoyalRoad),
}

impl Fitness for ProblemFitness {
    fn evaluate(&self, genome: &BitGenome) -> isla_core::Result<f64> {
        match self {
            ProblemFitness::Dot(f) => f.evaluate(genome),
            ProblemFitness::OneMax => OneMax.evaluate(genome),
            ProblemFitness::RoyalRoad(f) => f.evaluate(genome),
        }
    }
}

/// Builds the fitness function. The dot arena is read from `arena_file` when
/// set, otherwise drawn from `rng`.
pub fn build_fitness(
    cfg: &ExperimentConfig,
    rng: &mut RandomSource,
) -> Result<ProblemFitness, CliError> {
    Ok(match cfg.problem {
        Problem::Dot => {
            let arena = match &cfg.arena_file {
                Some(path) => load_arena(path, cfg.arena_side)?,
                None => generate_random_arena(
                    &DotProblemConfig {
                        num_rects: cfg.num_rects,
                        arena_side: cfg.arena_side,
                        bits: cfg.bits,
                    },
                    rng,
                )?,
            };
            ProblemFitness::Dot(DotFitness::new(arena, cfg.bits)?)
        }
        Problem::OneMax => ProblemFitness::OneMax,
        Problem::RoyalRoad => ProblemFitness::RoyalRoad(RoyalRoad {
            block_size: cfg.block_size,
        }),
    })
}

pub fn load_arena(path: &Path, arena_side: f64) -> Result<RectangleArena, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(RectangleArena::from_text(&text, arena_side)?)
}

pub fn generation(cfg: &ExperimentConfig) -> Result<Generation, CliError> {
    let operators = vec![
        OperatorSpec::new(
            OperatorKind::BitFlip {
                flip_count: cfg.flip_count,
            },
            cfg.mutation_rate,
        )?,
        OperatorSpec::crossover(cfg.crossover_points, cfg.crossover_rate)?,
    ];
    Ok(Generation::new(
        cfg.strategy,
        EasyStepConfig::new(cfg.selection_rate, operators)?,
    )?)
}

pub fn terminators(cfg: &ExperimentConfig) -> Vec<Terminator> {
    vec![
        Terminator::MaxGenerations(cfg.max_generations),
        Terminator::TargetFitness(cfg.target()),
    ]
}

fn ms(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

/// Single-population run. Writes the CSV to `out` and returns the exit code:
/// 0 when the target was reached, 2 when the generation limit stopped the run.
pub fn run_experiment(cfg: &ExperimentConfig, out: &mut dyn Write) -> Result<u8, CliError> {
    cfg.validate()?;
    let mut rng = RandomSource::new(cfg.seed);
    let fitness = build_fitness(cfg, &mut rng)?;
    let pop = random_population(cfg.pop_size, cfg.bits, &mut rng)?;
    let generation = generation(cfg)?;
    writeln!(out, "{RUN_HEADER}").map_err(io)?;
    let mut write_err = None;
    let (pop, stats) = run_observed(
        pop,
        &generation,
        &fitness,
        &terminators(cfg),
        &mut rng,
        |r| {
            if write_err.is_none() {
                if let Err(e) = writeln!(
                    out,
                    "{},{},{},{:.3}",
                    r.generation,
                    r.best_fitness,
                    r.evaluations,
                    ms(r.elapsed)
                ) {
                    write_err = Some(e);
                }
            }
        },
    )?;
    if let Some(e) = write_err {
        return Err(io(e));
    }
    writeln!(
        out,
        "# best={} generations={} evaluations={} time_ms={:.3}",
        pop[0].score(),
        stats.generations_executed,
        stats.evaluations,
        ms(stats.wall_time)
    )
    .map_err(io)?;
    Ok(exit_code(stats.stop_reason))
}

fn exit_code(reason: Option<StopReason>) -> u8 {
    match reason {
        Some(StopReason::TargetReached) => EXIT_TARGET_REACHED,
        _ => EXIT_GENERATION_LIMIT,
    }
}

/// Fully connected archipelago of `cfg.islands` islands named `node_1..`.
/// The dot arena is drawn from `seed`; island `k` is seeded `seed + k`.
pub fn run_islands(
    cfg: &ExperimentConfig,
    out: &mut dyn Write,
) -> Result<(u8, ArchipelagoReport), CliError> {
    cfg.validate()?;
    let n = cfg.islands.unwrap_or(2);
    let fitness = build_fitness(cfg, &mut RandomSource::new(cfg.seed))?;
    let configs = fully_connected(
        n,
        cfg.seed.wrapping_add(1),
        cfg.pop_size,
        cfg.bits,
        &generation(cfg)?,
        &terminators(cfg),
        cfg.policy,
    );
    let report = run_archipelago(configs, &fitness)?;
    writeln!(out, "{ISLANDS_HEADER}").map_err(io)?;
    for island in &report.islands {
        for r in island.stats.history.iter().skip(1) {
            writeln!(
                out,
                "{},{},{},{},{:.3}",
                island.alias,
                r.generation,
                r.best_fitness,
                r.evaluations,
                ms(r.elapsed)
            )
            .map_err(io)?;
        }
    }
    for island in &report.islands {
        writeln!(
            out,
            "# island={} best={} generations={} evaluations={} time_ms={:.3}",
            island.alias,
            island.population[0].score(),
            island.stats.generations_executed,
            island.stats.evaluations,
            ms(island.stats.wall_time)
        )
        .map_err(io)?;
    }
    writeln!(
        out,
        "# messages sent={} delivered={}",
        report.messages_sent, report.messages_delivered
    )
    .map_err(io)?;
    let reached = report
        .islands
        .iter()
        .any(|i| i.stats.stop_reason == Some(StopReason::TargetReached));
    let code = if reached {
        EXIT_TARGET_REACHED
    } else {
        EXIT_GENERATION_LIMIT
    };
    Ok((code, report))
}
