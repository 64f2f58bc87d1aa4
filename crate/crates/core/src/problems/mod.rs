//! Bundled fitness problems.

mod arena;
mod benchmarks;

pub use arena::{
    generate_random_arena, grid_oracle, DotFitness, DotProblemConfig, Rectangle, RectangleArena,
};
pub use benchmarks::{onemax, royal_road, OneMax, RoyalRoad};
