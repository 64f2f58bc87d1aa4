//! Demo state and computations, independent of the JS bindings.

use isla_core::engine::Evolution;
use isla_core::islands::{fully_connected, run_archipelago, MigrationPolicy};
use isla_core::operators::choose_operator;
use isla_core::prelude::*;
use isla_core::{Error, Result};

/// A dot-in-rectangles run stepped one generation at a time.
pub struct DotModel {
    fitness: DotFitness,
    evolution: Evolution,
    grid_best: usize,
}

impl DotModel {
    pub fn new(
        seed: u64,
        num_rects: usize,
        pop_size: usize,
        selection_rate: f64,
        mutation_rate: f64,
        crossover_rate: f64,
    ) -> Result<Self> {
        let cfg = DotProblemConfig {
            num_rects,
            ..Default::default()
        };
        let mut rng = RandomSource::new(seed);
        let arena = generate_random_arena(&cfg, &mut rng)?;
        let (grid_best, _) = grid_oracle(&arena, 200)?;
        let fitness = DotFitness::new(arena, cfg.bits)?;
        let operators = vec![
            OperatorSpec::bitflip(mutation_rate)?,
            OperatorSpec::crossover(2, crossover_rate)?,
        ];
        let generation = Generation::easy(EasyStepConfig::new(selection_rate, operators)?)?;
        let pop = random_population(pop_size, cfg.bits, &mut rng)?;
        let mut evolution = Evolution::new(
            pop,
            generation,
            vec![Terminator::MaxGenerations(usize::MAX)],
            rng,
        )?;
        evolution.initialize(&fitness)?;
        Ok(Self {
            fitness,
            evolution,
            grid_best,
        })
    }

    pub fn step(&mut self) -> Result<f64> {
        Ok(self.evolution.step(&self.fitness)?.best_fitness)
    }

    pub fn generation(&self) -> usize {
        self.evolution.stats().generations_executed
    }

    pub fn best_fitness(&self) -> f64 {
        self.evolution.best_fitness()
    }

    pub fn grid_best(&self) -> usize {
        self.grid_best
    }

    pub fn arena_side(&self) -> f64 {
        self.fitness.arena().arena_side()
    }

    /// `x0, y0, x1, y1` per rectangle.
    pub fn rectangles(&self) -> Vec<f64> {
        self.fitness
            .arena()
            .rectangles()
            .iter()
            .flat_map(|r| [r.x0, r.y0, r.x1, r.y1])
            .collect()
    }

    /// `x, y, fitness` per individual, best first.
    pub fn dots(&self) -> Vec<f64> {
        self.evolution
            .population()
            .iter()
            .flat_map(|ind| {
                let (x, y) = self.fitness.dot(&ind.genome).unwrap_or((0.0, 0.0));
                [x, y, ind.score()]
            })
            .collect()
    }

    pub fn best_history(&self) -> Vec<f64> {
        self.evolution
            .stats()
            .history
            .iter()
            .map(|r| r.best_fitness)
            .collect()
    }
}

/// Empirical choice frequencies of `draws` rate-weighted operator picks.
pub fn operator_mix(rates: &[f64], draws: u32, seed: u64) -> Result<Vec<f64>> {
    let ops = rates
        .iter()
        .map(|&rate| OperatorSpec::bitflip(rate))
        .collect::<Result<Vec<_>>>()?;
    if draws == 0 {
        return Err(Error::InvalidArgument("draws must be positive".into()));
    }
    let mut rng = RandomSource::new(seed);
    let mut counts = vec![0u32; ops.len()];
    for _ in 0..draws {
        counts[choose_operator(&ops, &mut rng)?] += 1;
    }
    Ok(counts
        .into_iter()
        .map(|c| c as f64 / draws as f64)
        .collect())
}

/// Best fitness per generation of every island in a fully connected
/// Royal Road archipelago.
pub struct IslandsModel {
    pub islands: usize,
    pub generations: usize,
    pub histories: Vec<Vec<f64>>,
    pub messages_sent: usize,
    pub messages_delivered: usize,
}

pub fn run_islands(
    islands: usize,
    generations: usize,
    policy: MigrationPolicy,
    seed: u64,
) -> Result<IslandsModel> {
    let generation = Generation::canonical(EasyStepConfig::standard())?;
    let configs = fully_connected(
        islands,
        seed,
        64,
        64,
        &generation,
        &[Terminator::MaxGenerations(generations)],
        policy,
    );
    let report = run_archipelago(configs, &RoyalRoad { block_size: 4 })?;
    Ok(IslandsModel {
        islands,
        generations,
        histories: report
            .islands
            .iter()
            .map(|i| i.stats.history.iter().map(|r| r.best_fitness).collect())
            .collect(),
        messages_sent: report.messages_sent,
        messages_delivered: report.messages_delivered,
    })
}
