//! Fixed-length bitstring genomes and their decoding into reals.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rng::RandomSource;

/// A non-empty, fixed-length vector of bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitGenome {
    bits: Vec<bool>,
}

impl BitGenome {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::invalid("genome length must be at least 1"));
        }
        Ok(Self { bits })
    }

    pub fn zeros(length: usize) -> Result<Self> {
        Self::new(vec![false; length])
    }

    pub fn ones(length: usize) -> Result<Self> {
        Self::new(vec![true; length])
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub(crate) fn flip(&mut self, i: usize) {
        self.bits[i] = !self.bits[i];
    }

    pub(crate) fn from_bits_unchecked(bits: Vec<bool>) -> Self {
        debug_assert!(!bits.is_empty());
        Self { bits }
    }
}

impl fmt::Display for BitGenome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Parses a string of `0`/`1` characters. Whitespace and `_` are ignored.
impl FromStr for BitGenome {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_')
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::invalid(format!("not a bit: {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }
}

/// Genome of `length` independent fair bits.
pub fn random_genome(length: usize, rng: &mut RandomSource) -> Result<BitGenome> {
    if length == 0 {
        return Err(Error::invalid("genome length must be at least 1"));
    }
    Ok(BitGenome::from_bits_unchecked(
        (0..length).map(|_| rng.coin()).collect(),
    ))
}

/// Splits the genome into consecutive big-endian chunks of `gene_bits` bits and
/// maps each chunk value `u` linearly onto `[min, max]` as
/// `min + u / (2^gene_bits - 1) * (max - min)`.
///
/// All-zero chunks decode to exactly `min` and all-one chunks to exactly `max`.
pub fn decode(genome: &BitGenome, gene_bits: usize, min: f64, max: f64) -> Result<Vec<f64>> {
    if gene_bits == 0 || gene_bits > 64 {
        return Err(Error::invalid(format!(
            "gene_bits must be in 1..=64, got {gene_bits}"
        )));
    }
    if !genome.len().is_multiple_of(gene_bits) {
        return Err(Error::invalid(format!(
            "gene_bits {gene_bits} does not divide genome length {}",
            genome.len()
        )));
    }
    if !min.is_finite() || !max.is_finite() || min >= max {
        return Err(Error::invalid(format!(
            "decode range requires finite min < max, got [{min}, {max}]"
        )));
    }
    let full = if gene_bits == 64 {
        u64::MAX
    } else {
        (1u64 << gene_bits) - 1
    };
    let span = max - min;
    Ok(genome
        .bits()
        .chunks(gene_bits)
        .map(|chunk| {
            let u = chunk.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
            if u == full {
                max
            } else {
                let t = u as f64 / full as f64;
                (min + t * span).clamp(min, max)
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> BitGenome {
        s.parse().unwrap()
    }

    #[test]
    fn random_genome_is_seed_deterministic() {
        let a = random_genome(32, &mut RandomSource::new(11)).unwrap();
        let b = random_genome(32, &mut RandomSource::new(11)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 32);
    }

    #[test]
    fn random_genome_length_one() {
        let a = random_genome(1, &mut RandomSource::new(0)).unwrap();
        assert_eq!(a.len(), 1);
    }

    #[test]
    fn random_genome_rejects_zero_length() {
        assert!(matches!(
            random_genome(0, &mut RandomSource::new(0)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn random_genome_ones_fraction_is_balanced() {
        // P(|frac - 0.5| > 0.05) for 10^4 fair bits is ~1.5e-23; every seed must pass.
        for seed in 0..200 {
            let genome = random_genome(10_000, &mut RandomSource::new(seed)).unwrap();
            let frac = genome.count_ones() as f64 / 10_000.0;
            assert!((0.45..=0.55).contains(&frac), "seed {seed}: {frac}");
        }
    }

    #[test]
    fn decode_endpoints_and_midpoints() {
        assert_eq!(decode(&g("00000000"), 4, 0.0, 10.0).unwrap(), vec![0.0, 0.0]);
        assert_eq!(
            decode(&g("11111111"), 4, 0.0, 10.0).unwrap(),
            vec![10.0, 10.0]
        );
        let v = decode(&g("10000100"), 4, 0.0, 10.0).unwrap();
        assert!((v[0] - 80.0 / 15.0).abs() < 1e-12);
        assert!((v[1] - 40.0 / 15.0).abs() < 1e-12);
        assert!((v[0] - 5.3333).abs() < 1e-4);
        assert!((v[1] - 2.6667).abs() < 1e-4);
    }

    #[test]
    fn decode_rejects_bad_arguments() {
        assert!(decode(&g("101"), 2, 0.0, 1.0).is_err());
        assert!(decode(&g("1010"), 2, 1.0, 1.0).is_err());
        assert!(decode(&g("1010"), 2, 2.0, 1.0).is_err());
        assert!(decode(&g("1010"), 0, 0.0, 1.0).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let genome = g("1011 0010");
        assert_eq!(genome.to_string(), "10110010");
        assert!("".parse::<BitGenome>().is_err());
        assert!("10a".parse::<BitGenome>().is_err());
    }
}
