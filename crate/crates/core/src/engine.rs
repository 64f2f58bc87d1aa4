//! Population lifecycle: cached evaluation, generation steps, terminators and
//! the run loop.
//!
//! Populations are kept sorted by fitness, best first, after every step. Ties
//! keep their previous relative order, so survivors stay ahead of equally fit
//! offspring.

use std::time::Duration;

use crate::error::{Error, Result};
use crate::genome::{random_genome, BitGenome};
use crate::operators::{choose_operator, OperatorKind, OperatorSpec};
use crate::rng::RandomSource;

/// A genome and its fitness, unset until evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub genome: BitGenome,
    pub fitness: Option<f64>,
}

impl Individual {
    pub fn new(genome: BitGenome) -> Self {
        Self {
            genome,
            fitness: None,
        }
    }

    /// Fitness of an evaluated individual; `0.0` for an unevaluated one.
    pub fn score(&self) -> f64 {
        self.fitness.unwrap_or(0.0)
    }
}

/// Maximised, deterministic genome score. Any `Fn(&BitGenome) -> f64` closure
/// qualifies.
pub trait Fitness {
    fn evaluate(&self, genome: &BitGenome) -> Result<f64>;
}

impl<F> Fitness for F
where
    F: Fn(&BitGenome) -> f64,
{
    fn evaluate(&self, genome: &BitGenome) -> Result<f64> {
        Ok(self(genome))
    }
}

/// Evaluates every individual whose fitness is unset. Returns how many
/// evaluations were performed; `stats.evaluations` grows by the same amount.
pub fn evaluate_population<F: Fitness + ?Sized>(
    pop: &mut [Individual],
    f: &F,
    stats: &mut RunStats,
) -> Result<usize> {
    let mut count = 0;
    for (index, ind) in pop.iter_mut().enumerate() {
        if ind.fitness.is_some() {
            continue;
        }
        let value = f.evaluate(&ind.genome).map_err(|e| Error::Evaluation {
            index,
            message: e.to_string(),
        })?;
        stats.evaluations += 1;
        count += 1;
        if !value.is_finite() || value < 0.0 {
            return Err(Error::Evaluation {
                index,
                message: format!("fitness must be finite and non-negative, got {value}"),
            });
        }
        ind.fitness = Some(value);
    }
    Ok(count)
}

/// `n` individuals with fresh random genomes of `length` bits, unevaluated.
pub fn random_population(
    n: usize,
    length: usize,
    rng: &mut RandomSource,
) -> Result<Vec<Individual>> {
    (0..n)
        .map(|_| random_genome(length, rng).map(Individual::new))
        .collect()
}

pub(crate) fn sort_descending(pop: &mut [Individual]) {
    pop.sort_by(|a, b| b.score().total_cmp(&a.score()));
}

/// Selection rate plus the operator table used to breed offspring.
#[derive(Debug, Clone, PartialEq)]
pub struct EasyStepConfig {
    pub selection_rate: f64,
    pub operators: Vec<OperatorSpec>,
}

impl EasyStepConfig {
    pub fn new(selection_rate: f64, operators: Vec<OperatorSpec>) -> Result<Self> {
        let cfg = Self {
            selection_rate,
            operators,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Selection rate 0.2, single-bit flip at rate 1 and two-point crossover at rate 9.
    pub fn standard() -> Self {
        Self {
            selection_rate: 0.2,
            operators: vec![
                OperatorSpec::bitflip(1.0).expect("valid rate"),
                OperatorSpec::crossover(2, 9.0).expect("valid rate"),
            ],
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.selection_rate > 0.0 && self.selection_rate < 1.0) {
            return Err(Error::invalid(format!(
                "selection rate must be in (0, 1), got {}",
                self.selection_rate
            )));
        }
        if self.operators.is_empty() {
            return Err(Error::invalid("at least one operator is required"));
        }
        for op in &self.operators {
            OperatorSpec::new(op.kind, op.rate)?;
        }
        Ok(())
    }

    /// `max(1, round(q * n))`, rounding halves up. Must leave at least one
    /// individual untouched.
    pub fn replaced_count(&self, n: usize) -> Result<usize> {
        if n < 2 {
            return Err(Error::invalid(format!(
                "population needs at least 2 individuals, got {n}"
            )));
        }
        let r = ((self.selection_rate * n as f64 + 0.5).floor() as usize).max(1);
        if r >= n {
            return Err(Error::invalid(format!(
                "selection rate {} replaces {r} of {n} individuals",
                self.selection_rate
            )));
        }
        Ok(r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// Destroy the worst fraction and refill it with offspring of the survivors.
    Easy,
    /// Keep the best fraction and refill the rest with offspring of the whole population.
    Canonical,
}

/// A generation-step strategy bound to its configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct Generation {
    pub kind: StepKind,
    pub config: EasyStepConfig,
}

impl Generation {
    pub fn new(kind: StepKind, config: EasyStepConfig) -> Result<Self> {
        config.validate()?;
        Ok(Self { kind, config })
    }

    pub fn easy(config: EasyStepConfig) -> Result<Self> {
        Self::new(StepKind::Easy, config)
    }

    pub fn canonical(config: EasyStepConfig) -> Result<Self> {
        Self::new(StepKind::Canonical, config)
    }

    /// Runs one step in place and returns the number of offspring created.
    pub fn apply<F: Fitness + ?Sized>(
        &self,
        pop: &mut Vec<Individual>,
        f: &F,
        rng: &mut RandomSource,
        stats: &mut RunStats,
    ) -> Result<usize> {
        match self.kind {
            StepKind::Easy => easy_step(pop, &self.config, f, rng, stats),
            StepKind::Canonical => canonical_step(pop, &self.config, f, rng, stats),
        }
    }
}

/// Replaces the `r` worst individuals with offspring bred from the survivors
/// by fitness-proportional selection. Returns `r`.
pub fn easy_step<F: Fitness + ?Sized>(
    pop: &mut Vec<Individual>,
    cfg: &EasyStepConfig,
    f: &F,
    rng: &mut RandomSource,
    stats: &mut RunStats,
) -> Result<usize> {
    let r = cfg.replaced_count(pop.len())?;
    evaluate_population(pop, f, stats)?;
    sort_descending(pop);
    pop.truncate(pop.len() - r);
    let offspring = breed(pop, &cfg.operators, r, rng)?;
    pop.extend(offspring);
    evaluate_population(pop, f, stats)?;
    sort_descending(pop);
    Ok(r)
}

/// Keeps the best `max(1, round(q * n))` individuals and fills every other
/// slot with offspring bred from the whole previous population. Returns the
/// number of offspring.
pub fn canonical_step<F: Fitness + ?Sized>(
    pop: &mut Vec<Individual>,
    cfg: &EasyStepConfig,
    f: &F,
    rng: &mut RandomSource,
    stats: &mut RunStats,
) -> Result<usize> {
    let n = pop.len();
    let elites = cfg.replaced_count(n)?;
    evaluate_population(pop, f, stats)?;
    sort_descending(pop);
    let offspring = breed(pop, &cfg.operators, n - elites, rng)?;
    pop.truncate(elites);
    pop.extend(offspring);
    evaluate_population(pop, f, stats)?;
    sort_descending(pop);
    Ok(n - elites)
}

fn breed(
    pool: &[Individual],
    operators: &[OperatorSpec],
    count: usize,
    rng: &mut RandomSource,
) -> Result<Vec<Individual>> {
    let weights: Vec<f64> = pool.iter().map(Individual::score).collect();
    (0..count)
        .map(|_| {
            let op = &operators[choose_operator(operators, rng)?];
            let first = roulette(&weights, None, rng);
            let child = match op.kind {
                OperatorKind::BitFlip { .. } => op.apply(&[&pool[first].genome], rng)?,
                OperatorKind::NPointCrossover { .. } => {
                    // a lone survivor is crossed with itself
                    let second = if pool.len() > 1 {
                        roulette(&weights, Some(first), rng)
                    } else {
                        first
                    };
                    op.apply(&[&pool[first].genome, &pool[second].genome], rng)?
                }
            };
            Ok(Individual::new(child))
        })
        .collect()
}

/// Fitness-proportional draw over `weights`, skipping `exclude`. Falls back to
/// a uniform draw when every eligible weight is zero.
pub(crate) fn roulette(weights: &[f64], exclude: Option<usize>, rng: &mut RandomSource) -> usize {
    let eligible = |i: usize| Some(i) != exclude;
    let total: f64 = weights
        .iter()
        .enumerate()
        .filter(|&(i, _)| eligible(i))
        .map(|(_, w)| w)
        .sum();
    if total <= 0.0 {
        let n = weights.len() - exclude.map_or(0, |_| 1);
        let k = rng.below(n);
        return (0..weights.len()).filter(|&i| eligible(i)).nth(k).unwrap();
    }
    let mut target = rng.uniform() * total;
    let mut last = 0;
    for (i, &w) in weights.iter().enumerate() {
        if !eligible(i) || w <= 0.0 {
            continue;
        }
        if target < w {
            return i;
        }
        target -= w;
        last = i;
    }
    last
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Terminator {
    /// Fires once this many steps have been executed.
    MaxGenerations(usize),
    /// Fires once the best fitness reaches the target.
    TargetFitness(f64),
}

impl Terminator {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Terminator::MaxGenerations(0) => {
                Err(Error::invalid("generation limit must be at least 1"))
            }
            Terminator::TargetFitness(t) if !t.is_finite() => {
                Err(Error::invalid(format!("target fitness must be finite, got {t}")))
            }
            _ => Ok(()),
        }
    }

    fn fires(&self, generations: usize, best: f64) -> Option<StopReason> {
        match *self {
            Terminator::MaxGenerations(limit) if generations >= limit => {
                Some(StopReason::GenerationLimit)
            }
            Terminator::TargetFitness(target) if best >= target => Some(StopReason::TargetReached),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    TargetReached,
    GenerationLimit,
}

/// Snapshot taken after the initial evaluation (generation 0) and after each step.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationRecord {
    pub generation: usize,
    pub best_fitness: f64,
    /// Cumulative fitness evaluations so far.
    pub evaluations: u64,
    /// Offspring created by this step; 0 for generation 0.
    pub offspring: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunStats {
    pub generations_executed: usize,
    pub evaluations: u64,
    pub history: Vec<GenerationRecord>,
    pub wall_time: Duration,
    pub stop_reason: Option<StopReason>,
}

impl RunStats {
    /// `(generation, best fitness)` pairs, starting with generation 0.
    pub fn best_per_generation(&self) -> Vec<(usize, f64)> {
        self.history
            .iter()
            .map(|r| (r.generation, r.best_fitness))
            .collect()
    }

    pub fn total_offspring(&self) -> u64 {
        self.history.iter().map(|r| r.offspring as u64).sum()
    }
}

/// An in-progress run: population, random stream, statistics and stop rules.
/// [`run`] drives one to completion; the island scheduler drives several in
/// lockstep.
#[derive(Debug, Clone)]
pub struct Evolution {
    population: Vec<Individual>,
    generation: Generation,
    terminators: Vec<Terminator>,
    rng: RandomSource,
    stats: RunStats,
    clock: clock::Stopwatch,
}

impl Evolution {
    pub fn new(
        population: Vec<Individual>,
        generation: Generation,
        terminators: Vec<Terminator>,
        rng: RandomSource,
    ) -> Result<Self> {
        if terminators.is_empty() {
            return Err(Error::invalid("at least one terminator is required"));
        }
        for t in &terminators {
            t.validate()?;
        }
        generation.config.validate()?;
        generation.config.replaced_count(population.len())?;
        let len = population[0].genome.len();
        if population.iter().any(|i| i.genome.len() != len) {
            return Err(Error::invalid("population genomes differ in length"));
        }
        Ok(Self {
            population,
            generation,
            terminators,
            rng,
            stats: RunStats::default(),
            clock: clock::Stopwatch::start(),
        })
    }

    /// Evaluates the initial population and records generation 0.
    pub fn initialize<F: Fitness + ?Sized>(&mut self, f: &F) -> Result<&GenerationRecord> {
        evaluate_population(&mut self.population, f, &mut self.stats)?;
        sort_descending(&mut self.population);
        self.record(0);
        Ok(self.stats.history.last().unwrap())
    }

    /// Which terminator, if any, has fired. A reached target wins over the
    /// generation limit when both fire together.
    pub fn check_termination(&mut self) -> Option<StopReason> {
        let best = self.best_fitness();
        let g = self.stats.generations_executed;
        let mut reason = None;
        for t in &self.terminators {
            match t.fires(g, best) {
                Some(StopReason::TargetReached) => {
                    reason = Some(StopReason::TargetReached);
                    break;
                }
                Some(r) => reason = reason.or(Some(r)),
                None => {}
            }
        }
        if reason.is_some() {
            self.stats.stop_reason = reason;
        }
        reason
    }

    pub fn step<F: Fitness + ?Sized>(&mut self, f: &F) -> Result<&GenerationRecord> {
        let offspring = self
            .generation
            .apply(&mut self.population, f, &mut self.rng, &mut self.stats)?;
        self.stats.generations_executed += 1;
        self.record(offspring);
        Ok(self.stats.history.last().unwrap())
    }

    fn record(&mut self, offspring: usize) {
        let elapsed = self.clock.elapsed();
        self.stats.wall_time = elapsed;
        self.stats.history.push(GenerationRecord {
            generation: self.stats.generations_executed,
            best_fitness: self.best_fitness(),
            evaluations: self.stats.evaluations,
            offspring,
            elapsed,
        });
    }

    pub fn best_fitness(&self) -> f64 {
        self.population[0].score()
    }

    pub fn best(&self) -> &Individual {
        &self.population[0]
    }

    pub fn population(&self) -> &[Individual] {
        &self.population
    }

    pub fn stats(&self) -> &RunStats {
        &self.stats
    }

    pub fn rng_mut(&mut self) -> &mut RandomSource {
        &mut self.rng
    }

    pub(crate) fn parts_mut(&mut self) -> (&mut Vec<Individual>, &mut RunStats) {
        (&mut self.population, &mut self.stats)
    }

    pub fn into_parts(self) -> (Vec<Individual>, RunStats, RandomSource) {
        (self.population, self.stats, self.rng)
    }
}

/// Evaluates `pop`, then applies `generation` until any terminator fires.
pub fn run<F: Fitness + ?Sized>(
    pop: Vec<Individual>,
    generation: &Generation,
    f: &F,
    terminators: &[Terminator],
    rng: &mut RandomSource,
) -> Result<(Vec<Individual>, RunStats)> {
    run_observed(pop, generation, f, terminators, rng, |_| {})
}

/// Like [`run`], calling `observer` with the record of every executed step.
pub fn run_observed<F, O>(
    pop: Vec<Individual>,
    generation: &Generation,
    f: &F,
    terminators: &[Terminator],
    rng: &mut RandomSource,
    mut observer: O,
) -> Result<(Vec<Individual>, RunStats)>
where
    F: Fitness + ?Sized,
    O: FnMut(&GenerationRecord),
{
    if pop.is_empty() {
        return Err(Error::invalid("population is empty"));
    }
    let mut evo = Evolution::new(pop, generation.clone(), terminators.to_vec(), rng.clone())?;
    evo.initialize(f)?;
    while evo.check_termination().is_none() {
        observer(evo.step(f)?);
    }
    let (pop, stats, used) = evo.into_parts();
    *rng = used;
    Ok((pop, stats))
}

mod clock {
    use std::time::Duration;

    #[cfg(not(target_arch = "wasm32"))]
    #[derive(Debug, Clone)]
    pub struct Stopwatch(std::time::Instant);

    #[cfg(not(target_arch = "wasm32"))]
    impl Stopwatch {
        pub fn start() -> Self {
            Self(std::time::Instant::now())
        }

        pub fn elapsed(&self) -> Duration {
            self.0.elapsed()
        }
    }

    // No monotonic clock on wasm32-unknown-unknown; timings read as zero.
    #[cfg(target_arch = "wasm32")]
    #[derive(Debug, Clone)]
    pub struct Stopwatch;

    #[cfg(target_arch = "wasm32")]
    impl Stopwatch {
        pub fn start() -> Self {
            Self
        }

        pub fn elapsed(&self) -> Duration {
            Duration::ZERO
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::hamming;
    use std::cell::Cell;

    fn ones(g: &BitGenome) -> f64 {
        g.count_ones() as f64
    }

    fn evaluated(bits: &str, fitness: f64) -> Individual {
        Individual {
            genome: bits.parse().unwrap(),
            fitness: Some(fitness),
        }
    }

    #[test]
    fn replaced_count_rounding() {
        let cfg = EasyStepConfig::standard();
        assert_eq!(cfg.replaced_count(10).unwrap(), 2);
        assert_eq!(cfg.replaced_count(64).unwrap(), 13);
        assert_eq!(cfg.replaced_count(2).unwrap(), 1);
        assert!(cfg.replaced_count(1).is_err());
        let half = EasyStepConfig::new(0.25, cfg.operators.clone()).unwrap();
        assert_eq!(half.replaced_count(10).unwrap(), 3);
        let big = EasyStepConfig::new(0.96, cfg.operators.clone()).unwrap();
        assert!(big.replaced_count(10).is_err());
        assert!(EasyStepConfig::new(1.0, cfg.operators.clone()).is_err());
        assert!(EasyStepConfig::new(0.0, cfg.operators).is_err());
        assert!(EasyStepConfig::new(0.2, vec![]).is_err());
    }

    #[test]
    fn evaluation_uses_cache() {
        let calls = Cell::new(0);
        let f = |g: &BitGenome| {
            calls.set(calls.get() + 1);
            ones(g)
        };
        let mut rng = RandomSource::new(1);
        let mut pop = random_population(64, 8, &mut rng).unwrap();
        let mut stats = RunStats::default();
        assert_eq!(evaluate_population(&mut pop, &f, &mut stats).unwrap(), 64);
        assert_eq!(evaluate_population(&mut pop, &f, &mut stats).unwrap(), 0);
        assert_eq!(calls.get(), 64);
        assert_eq!(stats.evaluations, 64);
    }

    #[test]
    fn evaluation_counts_only_fresh_offspring() {
        let calls = Cell::new(0);
        let f = |g: &BitGenome| {
            calls.set(calls.get() + 1);
            ones(g)
        };
        let mut pop: Vec<Individual> = (0..8).map(|_| evaluated("1010", 2.0)).collect();
        pop.push(Individual::new("1111".parse().unwrap()));
        pop.push(Individual::new("0000".parse().unwrap()));
        let mut stats = RunStats::default();
        assert_eq!(evaluate_population(&mut pop, &f, &mut stats).unwrap(), 2);
        assert_eq!(calls.get(), 2);
    }

    #[test]
    fn evaluation_rejects_negative_fitness() {
        let mut pop = vec![evaluated("1", 1.0), Individual::new("0".parse().unwrap())];
        let err = evaluate_population(&mut pop, &|_: &BitGenome| -1.0, &mut RunStats::default())
            .unwrap_err();
        assert!(matches!(err, Error::Evaluation { index: 1, .. }));
    }

    #[test]
    fn easy_step_size_and_order() {
        let mut rng = RandomSource::new(3);
        let mut pop = random_population(10, 16, &mut rng).unwrap();
        let cfg = EasyStepConfig::standard();
        let mut stats = RunStats::default();
        let r = easy_step(&mut pop, &cfg, &ones, &mut rng, &mut stats).unwrap();
        assert_eq!(r, 2);
        assert_eq!(pop.len(), 10);
        assert_eq!(stats.evaluations, 12);
        assert!(pop.windows(2).all(|w| w[0].score() >= w[1].score()));
    }

    #[test]
    fn easy_step_bitflip_only_from_identical_survivors() {
        let mut pop: Vec<Individual> = (0..8).map(|_| evaluated("11001100", 4.0)).collect();
        pop.push(evaluated("00000000", 0.0));
        pop.push(evaluated("00000000", 0.0));
        let cfg = EasyStepConfig::new(0.2, vec![OperatorSpec::bitflip(1.0).unwrap()]).unwrap();
        let common: BitGenome = "11001100".parse().unwrap();
        let mut rng = RandomSource::new(10);
        let mut stats = RunStats::default();
        easy_step(&mut pop, &cfg, &ones, &mut rng, &mut stats).unwrap();
        let changed: Vec<_> = pop.iter().filter(|i| i.genome != common).collect();
        assert_eq!(changed.len(), 2);
        for ind in changed {
            assert_eq!(hamming(&ind.genome, &common).unwrap(), 1);
        }
    }

    #[test]
    fn easy_step_rejects_tiny_population() {
        let mut pop = vec![evaluated("1", 1.0)];
        let cfg = EasyStepConfig::standard();
        let res = easy_step(
            &mut pop,
            &cfg,
            &ones,
            &mut RandomSource::new(0),
            &mut RunStats::default(),
        );
        assert!(res.is_err());
    }

    #[test]
    fn crossover_with_single_survivor_still_works() {
        let mut pop = vec![evaluated("1100", 2.0), evaluated("0000", 0.0)];
        let cfg = EasyStepConfig::new(0.5, vec![OperatorSpec::crossover(1, 1.0).unwrap()]).unwrap();
        let mut stats = RunStats::default();
        easy_step(&mut pop, &cfg, &ones, &mut RandomSource::new(1), &mut stats).unwrap();
        assert_eq!(pop[1].genome.to_string(), "1100");
    }

    #[test]
    fn canonical_step_counts() {
        let mut rng = RandomSource::new(4);
        let mut pop = random_population(10, 16, &mut rng).unwrap();
        let mut stats = RunStats::default();
        evaluate_population(&mut pop, &ones, &mut stats).unwrap();
        sort_descending(&mut pop);
        let elites: Vec<_> = pop[..2].to_vec();
        let best_before = pop[0].score();
        let made = canonical_step(
            &mut pop,
            &EasyStepConfig::standard(),
            &ones,
            &mut rng,
            &mut stats,
        )
        .unwrap();
        assert_eq!(made, 8);
        assert_eq!(pop.len(), 10);
        assert_eq!(stats.evaluations, 18);
        assert!(pop[0].score() >= best_before);
        for e in elites {
            assert!(pop.contains(&e));
        }
    }

    #[test]
    fn canonical_bitflip_offspring_one_bit_from_a_parent() {
        let mut rng = RandomSource::new(6);
        let mut pop = random_population(20, 24, &mut rng).unwrap();
        let mut stats = RunStats::default();
        evaluate_population(&mut pop, &ones, &mut stats).unwrap();
        let parents: Vec<BitGenome> = pop.iter().map(|i| i.genome.clone()).collect();
        let cfg = EasyStepConfig::new(0.2, vec![OperatorSpec::bitflip(1.0).unwrap()]).unwrap();
        canonical_step(&mut pop, &cfg, &ones, &mut rng, &mut stats).unwrap();
        for ind in &pop {
            let nearest = parents
                .iter()
                .map(|p| hamming(p, &ind.genome).unwrap())
                .min()
                .unwrap();
            assert!(nearest <= 1);
        }
    }

    #[test]
    fn roulette_prefers_heavy_weights() {
        let mut rng = RandomSource::new(12);
        let weights = [1.0, 3.0, 0.0];
        let mut counts = [0usize; 3];
        for _ in 0..40_000 {
            counts[roulette(&weights, None, &mut rng)] += 1;
        }
        assert_eq!(counts[2], 0);
        assert!((counts[1] as f64 / 40_000.0 - 0.75).abs() < 0.01);
        for _ in 0..1000 {
            assert_eq!(roulette(&weights, Some(1), &mut rng), 0);
        }
    }

    #[test]
    fn roulette_uniform_when_all_zero() {
        let mut rng = RandomSource::new(12);
        let weights = [0.0; 4];
        let mut counts = [0usize; 4];
        for _ in 0..40_000 {
            counts[roulette(&weights, Some(2), &mut rng)] += 1;
        }
        assert_eq!(counts[2], 0);
        for i in [0, 1, 3] {
            assert!((counts[i] as f64 / 40_000.0 - 1.0 / 3.0).abs() < 0.015);
        }
    }

    #[test]
    fn run_stops_at_generation_limit() {
        let mut rng = RandomSource::new(5);
        let pop = random_population(16, 64, &mut rng).unwrap();
        let generation = Generation::easy(EasyStepConfig::standard()).unwrap();
        let (_, stats) = run(
            pop,
            &generation,
            &ones,
            &[Terminator::MaxGenerations(10), Terminator::TargetFitness(1e9)],
            &mut rng,
        )
        .unwrap();
        assert_eq!(stats.generations_executed, 10);
        assert_eq!(stats.history.len(), 11);
        assert_eq!(stats.stop_reason, Some(StopReason::GenerationLimit));
    }

    #[test]
    fn run_with_satisfied_target_takes_no_steps() {
        let mut rng = RandomSource::new(5);
        let pop = random_population(16, 8, &mut rng).unwrap();
        let generation = Generation::easy(EasyStepConfig::standard()).unwrap();
        let (_, stats) = run(
            pop,
            &generation,
            &ones,
            &[Terminator::TargetFitness(0.0), Terminator::MaxGenerations(5)],
            &mut rng,
        )
        .unwrap();
        assert_eq!(stats.generations_executed, 0);
        assert_eq!(stats.stop_reason, Some(StopReason::TargetReached));
    }

    #[test]
    fn run_rejects_bad_terminators() {
        let mut rng = RandomSource::new(5);
        let generation = Generation::easy(EasyStepConfig::standard()).unwrap();
        let pop = random_population(16, 8, &mut rng).unwrap();
        assert!(run(pop.clone(), &generation, &ones, &[], &mut rng).is_err());
        assert!(run(
            pop,
            &generation,
            &ones,
            &[Terminator::MaxGenerations(0)],
            &mut rng
        )
        .is_err());
    }
}
