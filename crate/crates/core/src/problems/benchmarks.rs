use crate::engine::Fitness;
use crate::error::{Error, Result};
use crate::genome::BitGenome;

/// Number of set bits.
pub fn onemax(genome: &BitGenome) -> usize {
    genome.count_ones()
}

/// Number of disjoint consecutive `block_size`-bit blocks that are all ones.
pub fn royal_road(genome: &BitGenome, block_size: usize) -> Result<usize> {
    if block_size == 0 || !genome.len().is_multiple_of(block_size) {
        return Err(Error::invalid(format!(
            "block size {block_size} does not divide genome length {}",
            genome.len()
        )));
    }
    Ok(genome
        .bits()
        .chunks(block_size)
        .filter(|block| block.iter().all(|&b| b))
        .count())
}

#[derive(Debug, Clone, Copy, Default)]
pub struct OneMax;

impl Fitness for OneMax {
    fn evaluate(&self, genome: &BitGenome) -> Result<f64> {
        Ok(onemax(genome) as f64)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RoyalRoad {
    pub block_size: usize,
}

impl Default for RoyalRoad {
    fn default() -> Self {
        Self { block_size: 4 }
    }
}

impl Fitness for RoyalRoad {
    fn evaluate(&self, genome: &BitGenome) -> Result<f64> {
        royal_road(genome, self.block_size).map(|v| v as f64)
    }
}
