//! Axis-aligned rectangles, point-stabbing queries and the dot-in-rectangles
//! fitness.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::engine::Fitness;
use crate::error::{Error, Result};
use crate::genome::{decode, BitGenome};
use crate::rng::RandomSource;

/// Closed axis-aligned rectangle `[x0, x1] x [y0, y1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rectangle {
    pub id: String,
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rectangle {
    pub fn new(id: impl Into<String>, x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        let id = id.into();
        if id.is_empty() || id.chars().any(char::is_whitespace) {
            return Err(Error::invalid(format!(
                "rectangle id must be non-empty without whitespace: {id:?}"
            )));
        }
        if ![x0, y0, x1, y1].iter().all(|v| v.is_finite()) || x0 > x1 || y0 > y1 {
            return Err(Error::invalid(format!(
                "rectangle {id} needs finite corners with x0 <= x1 and y0 <= y1"
            )));
        }
        Ok(Self { id, x0, y0, x1, y1 })
    }

    /// Boundaries count as inside.
    pub fn contains(&self, x: f64, y: f64) -> bool {
        self.x0 <= x && x <= self.x1 && self.y0 <= y && y <= self.y1
    }
}

/// An immutable set of rectangles with a stabbing index built at construction.
///
/// The index orders rectangles by `x0`; a query binary-searches the last
/// rectangle starting at or left of the dot and tests only that prefix.
#[derive(Debug, Clone)]
pub struct RectangleArena {
    rectangles: Vec<Rectangle>,
    arena_side: f64,
    by_x0: Vec<usize>,
    sorted_x0: Vec<f64>,
}

impl RectangleArena {
    pub fn new(arena_side: f64, rectangles: Vec<Rectangle>) -> Result<Self> {
        if !(arena_side > 0.0 && arena_side.is_finite()) {
            return Err(Error::invalid(format!(
                "arena side must be positive, got {arena_side}"
            )));
        }
        let mut seen = HashSet::new();
        for r in &rectangles {
            if !seen.insert(r.id.as_str()) {
                return Err(Error::invalid(format!("duplicate rectangle id {}", r.id)));
            }
        }
        let mut by_x0: Vec<usize> = (0..rectangles.len()).collect();
        by_x0.sort_by(|&a, &b| rectangles[a].x0.total_cmp(&rectangles[b].x0));
        let sorted_x0 = by_x0.iter().map(|&i| rectangles[i].x0).collect();
        Ok(Self {
            rectangles,
            arena_side,
            by_x0,
            sorted_x0,
        })
    }

    pub fn empty(arena_side: f64) -> Result<Self> {
        Self::new(arena_side, Vec::new())
    }

    pub fn rectangles(&self) -> &[Rectangle] {
        &self.rectangles
    }

    pub fn arena_side(&self) -> f64 {
        self.arena_side
    }

    pub fn len(&self) -> usize {
        self.rectangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rectangles.is_empty()
    }

    fn candidates(&self, x: f64) -> &[usize] {
        let end = self.sorted_x0.partition_point(|&x0| x0 <= x);
        &self.by_x0[..end]
    }

    /// Insertion-order indices of rectangles containing the dot, via the index.
    pub fn indices_containing_dot(&self, x: f64, y: f64) -> Vec<usize> {
        let mut hits: Vec<usize> = self
            .candidates(x)
            .iter()
            .copied()
            .filter(|&i| self.rectangles[i].contains(x, y))
            .collect();
        hits.sort_unstable();
        hits
    }

    /// Ids of the rectangles containing the dot, in insertion order.
    pub fn rectangles_containing_dot(&self, x: f64, y: f64) -> Vec<&str> {
        self.indices_containing_dot(x, y)
            .into_iter()
            .map(|i| self.rectangles[i].id.as_str())
            .collect()
    }

    /// Same contract as [`Self::rectangles_containing_dot`], scanning every rectangle.
    pub fn rectangles_containing_dot_brute(&self, x: f64, y: f64) -> Vec<&str> {
        self.rectangles
            .iter()
            .filter(|r| r.contains(x, y))
            .map(|r| r.id.as_str())
            .collect()
    }

    pub fn count_containing(&self, x: f64, y: f64) -> usize {
        self.candidates(x)
            .iter()
            .filter(|&&i| self.rectangles[i].contains(x, y))
            .count()
    }

    /// One `id x0 y0 x1 y1` line per rectangle. Coordinates round-trip exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rectangles {
            writeln!(out, "{} {} {} {} {}", r.id, r.x0, r.y0, r.x1, r.y1).unwrap();
        }
        out
    }

    /// Parses the [`Self::to_text`] format. Blank lines and `#` comments are skipped.
    pub fn from_text(text: &str, arena_side: f64) -> Result<Self> {
        let mut rects = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: n + 1,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 5 {
                return Err(parse_err(format!(
                    "expected `id x0 y0 x1 y1`, found {} fields",
                    fields.len()
                )));
            }
            let mut coords = [0.0; 4];
            for (slot, field) in coords.iter_mut().zip(&fields[1..]) {
                *slot = field
                    .parse()
                    .map_err(|_| parse_err(format!("bad coordinate {field:?}")))?;
            }
            let [x0, y0, x1, y1] = coords;
            rects.push(
                Rectangle::new(fields[0], x0, y0, x1, y1).map_err(|e| parse_err(e.to_string()))?,
            );
        }
        Self::new(arena_side, rects)
    }
}

/// Parameters of the dot-in-rectangles problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DotProblemConfig {
    pub num_rects: usize,
    pub arena_side: f64,
    /// Genome length; split evenly between the x and y genes.
    pub bits: usize,
}

impl Default for DotProblemConfig {
    fn default() -> Self {
        Self {
            num_rects: 25,
            arena_side: 10.0,
            bits: 32,
        }
    }
}

impl DotProblemConfig {
    pub fn validate(&self) -> Result<()> {
        if self.num_rects == 0 {
            return Err(Error::invalid("num_rects must be at least 1"));
        }
        if !(self.arena_side > 0.0 && self.arena_side.is_finite()) {
            return Err(Error::invalid(format!(
                "arena side must be positive, got {}",
                self.arena_side
            )));
        }
        if self.bits < 2 || !self.bits.is_multiple_of(2) || self.bits > 128 {
            return Err(Error::invalid(format!(
                "bits must be even and in 2..=128, got {}",
                self.bits
            )));
        }
        Ok(())
    }
}

/// `num_rects + 1` rectangles named `rectangle_0..=rectangle_{num_rects}`.
/// Lower-left corners are uniform in `[0, side)^2`; widths and heights are
/// uniform in `(0, side)`, so rectangles may extend past the arena.
pub fn generate_random_arena(cfg: &DotProblemConfig, rng: &mut RandomSource) -> Result<RectangleArena> {
    cfg.validate()?;
    let side = cfg.arena_side;
    let rects = (0..=cfg.num_rects)
        .map(|i| {
            let x0 = rng.uniform() * side;
            let y0 = rng.uniform() * side;
            let w = rng.uniform_open() * side;
            let h = rng.uniform_open() * side;
            Rectangle::new(format!("rectangle_{i}"), x0, y0, x0 + w, y0 + h)
        })
        .collect::<Result<Vec<_>>>()?;
    RectangleArena::new(side, rects)
}

/// Counts the rectangles containing the dot decoded from the genome: two genes
/// of `bits / 2` bits each over `[0, arena_side]`.
#[derive(Debug, Clone)]
pub struct DotFitness {
    arena: RectangleArena,
    bits: usize,
}

impl DotFitness {
    pub fn new(arena: RectangleArena, bits: usize) -> Result<Self> {
        if bits < 2 || !bits.is_multiple_of(2) {
            return Err(Error::invalid(format!("bits must be even and >= 2, got {bits}")));
        }
        Ok(Self { arena, bits })
    }

    pub fn arena(&self) -> &RectangleArena {
        &self.arena
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn dot(&self, genome: &BitGenome) -> Result<(f64, f64)> {
        if genome.len() != self.bits {
            return Err(Error::invalid(format!(
                "expected a {}-bit genome, got {}",
                self.bits,
                genome.len()
            )));
        }
        let xy = decode(genome, self.bits / 2, 0.0, self.arena.arena_side())?;
        Ok((xy[0], xy[1]))
    }
}

impl Fitness for DotFitness {
    fn evaluate(&self, genome: &BitGenome) -> Result<f64> {
        let (x, y) = self.dot(genome)?;
        Ok(self.arena.count_containing(x, y) as f64)
    }
}

/// Best containment count over a `resolution x resolution` grid spanning
/// `[0, side]^2`. Grid points are visited x-major; the first maximum wins.
pub fn grid_oracle(arena: &RectangleArena, resolution: usize) -> Result<(usize, (f64, f64))> {
    if resolution < 2 {
        return Err(Error::invalid(format!(
            "grid resolution must be at least 2, got {resolution}"
        )));
    }
    let side = arena.arena_side();
    let coord = |i: usize| {
        if i == resolution - 1 {
            side
        } else {
            side * i as f64 / (resolution - 1) as f64
        }
    };
    let mut best = (0, (0.0, 0.0));
    let mut found = false;
    for ix in 0..resolution {
        let x = coord(ix);
        for iy in 0..resolution {
            let y = coord(iy);
            let count = arena
                .rectangles()
                .iter()
                .filter(|r| r.contains(x, y))
                .count();
            if !found || count > best.0 {
                best = (count, (x, y));
                found = true;
            }
        }
    }
    Ok(best)
}
