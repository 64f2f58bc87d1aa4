//! Variation operators and rate-weighted operator choice.

use crate::error::{Error, Result};
use crate::genome::BitGenome;
use crate::rng::RandomSource;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OperatorKind {
    /// Inverts `flip_count` distinct positions of one parent.
    BitFlip { flip_count: usize },
    /// Recombines two parents at `points` distinct cut positions.
    NPointCrossover { points: usize },
}

impl OperatorKind {
    pub fn arity(&self) -> usize {
        match self {
            OperatorKind::BitFlip { .. } => 1,
            OperatorKind::NPointCrossover { .. } => 2,
        }
    }
}

/// A variation operator together with its priority. Priorities are normalised
/// into probabilities each time an operator is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorSpec {
    pub kind: OperatorKind,
    pub rate: f64,
}

impl OperatorSpec {
    pub fn new(kind: OperatorKind, rate: f64) -> Result<Self> {
        check_rate(rate)?;
        match kind {
            OperatorKind::BitFlip { flip_count: 0 } => {
                Err(Error::invalid("bit-flip count must be at least 1"))
            }
            OperatorKind::NPointCrossover { points: 0 } => {
                Err(Error::invalid("crossover needs at least 1 cut point"))
            }
            _ => Ok(Self { kind, rate }),
        }
    }

    /// Single-bit flip mutation.
    pub fn bitflip(rate: f64) -> Result<Self> {
        Self::new(OperatorKind::BitFlip { flip_count: 1 }, rate)
    }

    pub fn crossover(points: usize, rate: f64) -> Result<Self> {
        Self::new(OperatorKind::NPointCrossover { points }, rate)
    }

    /// Applies the operator to `parents` (one or two, per [`OperatorKind::arity`]).
    pub fn apply(&self, parents: &[&BitGenome], rng: &mut RandomSource) -> Result<BitGenome> {
        if parents.len() != self.kind.arity() {
            return Err(Error::invalid(format!(
                "operator expects {} parent(s), got {}",
                self.kind.arity(),
                parents.len()
            )));
        }
        match self.kind {
            OperatorKind::BitFlip { flip_count } => bitflip(parents[0], flip_count, rng),
            OperatorKind::NPointCrossover { points } => {
                n_point_crossover(parents[0], parents[1], points, rng)
            }
        }
    }
}

fn check_rate(rate: f64) -> Result<()> {
    if rate > 0.0 && rate.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "operator rate must be positive and finite, got {rate}"
        )))
    }
}

/// Copy of `genome` with exactly `flip_count` distinct uniformly chosen bits inverted.
pub fn bitflip(genome: &BitGenome, flip_count: usize, rng: &mut RandomSource) -> Result<BitGenome> {
    if flip_count == 0 || flip_count > genome.len() {
        return Err(Error::invalid(format!(
            "flip_count must be in 1..={}, got {flip_count}",
            genome.len()
        )));
    }
    let mut child = genome.clone();
    for i in rng.distinct_indices(genome.len(), flip_count) {
        child.flip(i);
    }
    Ok(child)
}

/// One offspring built from alternating segments of `a` and `b`, starting
/// with `a`, split at `points` distinct cut positions drawn from `1..len`.
pub fn n_point_crossover(
    a: &BitGenome,
    b: &BitGenome,
    points: usize,
    rng: &mut RandomSource,
) -> Result<BitGenome> {
    check_same_length(a, b)?;
    if points == 0 || points >= a.len() {
        return Err(Error::invalid(format!(
            "crossover points must be in 1..{}, got {points}",
            a.len()
        )));
    }
    let mut cuts: Vec<usize> = rng
        .distinct_indices(a.len() - 1, points)
        .into_iter()
        .map(|i| i + 1)
        .collect();
    cuts.sort_unstable();
    crossover_at(a, b, &cuts)
}

/// Deterministic crossover at explicit cut positions. A cut at `c` starts a new
/// segment at bit index `c`; cuts must be strictly increasing within `1..len`.
pub fn crossover_at(a: &BitGenome, b: &BitGenome, cuts: &[usize]) -> Result<BitGenome> {
    check_same_length(a, b)?;
    let len = a.len();
    if cuts.iter().any(|&c| c == 0 || c >= len) || cuts.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid(format!(
            "cuts must be strictly increasing within 1..{len}: {cuts:?}"
        )));
    }
    let mut bits = Vec::with_capacity(len);
    let mut from_a = true;
    let mut next_cut = cuts.iter().copied().peekable();
    for i in 0..len {
        if next_cut.peek() == Some(&i) {
            next_cut.next();
            from_a = !from_a;
        }
        bits.push(if from_a { a.get(i) } else { b.get(i) });
    }
    Ok(BitGenome::from_bits_unchecked(bits))
}

/// Index `i` drawn with probability `rate_i / sum(rates)`.
pub fn choose_operator(ops: &[OperatorSpec], rng: &mut RandomSource) -> Result<usize> {
    if ops.is_empty() {
        return Err(Error::invalid("operator list is empty"));
    }
    for op in ops {
        check_rate(op.rate)?;
    }
    let total: f64 = ops.iter().map(|op| op.rate).sum();
    let mut target = rng.uniform() * total;
    for (i, op) in ops.iter().enumerate() {
        if target < op.rate {
            return Ok(i);
        }
        target -= op.rate;
    }
    // rounding can leave a sliver past the last rate
    Ok(ops.len() - 1)
}

pub fn hamming(a: &BitGenome, b: &BitGenome) -> Result<usize> {
    check_same_length(a, b)?;
    Ok(a.bits()
        .iter()
        .zip(b.bits())
        .filter(|(x, y)| x != y)
        .count())
}

fn check_same_length(a: &BitGenome, b: &BitGenome) -> Result<()> {
    if a.len() == b.len() {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "genome lengths differ: {} vs {}",
            a.len(),
            b.len()
        )))
    }
}
