//! Evolutionary computation over fixed-length bitstrings.
//!
//! The crate is organised bottom-up:
//!
//! - [`rng`]: the seedable [`RandomSource`] every stochastic operation takes explicitly.
//! - [`genome`]: [`BitGenome`] plus random creation and genotype-to-real decoding.
//! - [`operators`]: bit-flip mutation, n-point crossover, Hamming distance and
//!   rate-weighted operator choice.
//! - [`engine`]: individuals with cached fitness, the `Easy` (worst-replacement) and
//!   `Canonical` (elitist generational) steps, terminators and the run loop.
//! - [`problems`]: the dot-in-rectangles arena, OneMax and Royal Road.
//! - [`islands`]: a deterministic round-robin archipelago with per-generation migration.
//!
//! ```
//! use isla_core::prelude::*;
//!
//! let mut rng = RandomSource::new(7);
//! let pop = random_population(32, 16, &mut rng).unwrap();
//! let generation = Generation::easy(EasyStepConfig::standard()).unwrap();
//! let (pop, stats) = run(
//!     pop,
//!     &generation,
//!     &OneMax,
//!     &[Terminator::MaxGenerations(30), Terminator::TargetFitness(16.0)],
//!     &mut rng,
//! )
//! .unwrap();
//! assert!(stats.generations_executed <= 30);
//! assert!(pop[0].fitness.unwrap() >= pop[pop.len() - 1].fitness.unwrap());
//! ```

pub mod engine;
pub mod error;
pub mod genome;
pub mod islands;
pub mod operators;
pub mod problems;
pub mod rng;

pub use error::{Error, Result};
pub use genome::BitGenome;
pub use rng::RandomSource;

pub mod prelude {
    pub use crate::engine::{
        evaluate_population, random_population, run, run_observed, EasyStepConfig, Evolution,
        Fitness, Generation, GenerationRecord, Individual, RunStats, StepKind, StopReason,
        Terminator,
    };
    pub use crate::genome::{decode, random_genome, BitGenome};
    pub use crate::islands::{run_archipelago, IslandConfig, MigrantMessage, MigrationPolicy};
    pub use crate::operators::{
        bitflip, choose_operator, hamming, n_point_crossover, OperatorKind, OperatorSpec,
    };
    pub use crate::problems::{
        generate_random_arena, grid_oracle, onemax, royal_road, DotFitness, DotProblemConfig,
        OneMax, Rectangle, RectangleArena, RoyalRoad,
    };
    pub use crate::rng::RandomSource;
}
