//! Experiment configuration: built-in defaults, INI-style files and
//! command-line overrides, applied in that order.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use isla_core::engine::StepKind;
use isla_core::islands::MigrationPolicy;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{origin}: key `{key}`: {message}")]
    Config {
        key: String,
        origin: Origin,
        message: String,
    },
    #[error("{origin}: {message}")]
    Syntax { origin: Origin, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Engine(#[from] isla_core::Error),
}

/// Where a setting came from, for error messages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    File { path: PathBuf, line: usize },
    Positional(usize),
    Flag,
    Validation,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::File { path, line } => write!(f, "{}:{line}", path.display()),
            Origin::Positional(i) => write!(f, "positional argument {}", i + 1),
            Origin::Flag => write!(f, "command line"),
            Origin::Validation => write!(f, "configuration"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    Dot,
    OneMax,
    RoyalRoad,
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(Problem::Dot),
            "onemax" => Ok(Problem::OneMax),
            "royalroad" | "royal_road" | "royal-road" => Ok(Problem::RoyalRoad),
            other => Err(format!("unknown problem {other:?} (dot, onemax, royalroad)")),
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Dot => "dot",
            Problem::OneMax => "onemax",
            Problem::RoyalRoad => "royalroad",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub problem: Problem,
    pub num_rects: usize,
    pub arena_side: f64,
    pub bits: usize,
    pub block_size: usize,
    pub pop_size: usize,
    pub max_generations: usize,
    pub selection_rate: f64,
    pub mutation_rate: f64,
    pub crossover_rate: f64,
    pub crossover_points: usize,
    pub flip_count: usize,
    pub seed: u64,
    /// Overrides the problem's natural target.
    pub target_fitness: Option<f64>,
    pub strategy: StepKind,
    pub islands: Option<usize>,
    pub policy: MigrationPolicy,
    pub arena_file: Option<PathBuf>,
    pub repetitions: usize,
    /// Accepted for compatibility with the positional argument order; unused.
    pub dot_x: Option<f64>,
    pub dot_y: Option<f64>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            problem: Problem::Dot,
            num_rects: 25,
            arena_side: 10.0,
            bits: 32,
            block_size: 4,
            pop_size: 64,
            max_generations: 50,
            selection_rate: 0.2,
            mutation_rate: 1.0,
            crossover_rate: 9.0,
            crossover_points: 2,
            flip_count: 1,
            seed: 1,
            target_fitness: None,
            strategy: StepKind::Easy,
            islands: None,
            policy: MigrationPolicy::Best,
            arena_file: None,
            repetitions: 5,
            dot_x: None,
            dot_y: None,
        }
    }
}

pub const KEYS: &[&str] = &[
    "problem",
    "num_rects",
    "arena_side",
    "bits",
    "block_size",
    "pop_size",
    "max_generations",
    "selection_rate",
    "mutation_rate",
    "crossover_rate",
    "crossover_points",
    "flip_count",
    "seed",
    "target_fitness",
    "strategy",
    "islands",
    "policy",
    "arena_file",
    "repetitions",
    "dot_x",
    "dot_y",
];

/// Keys filled, in order, by trailing positional arguments.
pub const POSITIONAL_KEYS: &[&str] = &[
    "num_rects",
    "arena_side",
    "dot_x",
    "dot_y",
    "bits",
    "pop_size",
    "max_generations",
    "selection_rate",
];

fn parse<T: FromStr>(value: &str) -> Result<T, String>
where
    T::Err: fmt::Display,
{
    value
        .parse()
        .map_err(|e| format!("cannot parse {value:?}: {e}"))
}

fn positive_int(value: &str) -> Result<usize, String> {
    match parse::<usize>(value)? {
        0 => Err("must be at least 1".into()),
        v => Ok(v),
    }
}

fn positive_real(value: &str) -> Result<f64, String> {
    let v: f64 = parse(value)?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("must be positive, got {v}"))
    }
}

impl ExperimentConfig {
    /// Defaults for `bench`: OneMax, 128 bits, 256 individuals, 100 generations.
    pub fn bench_defaults() -> Self {
        Self {
            problem: Problem::OneMax,
            bits: 128,
            pop_size: 256,
            max_generations: 100,
            ..Self::default()
        }
    }

    /// Sets one key from its textual value, checking the value's own range.
    pub fn set(&mut self, key: &str, value: &str, origin: &Origin) -> Result<(), CliError> {
        let value = value.trim();
        let res: Result<(), String> = (|| {
            match key {
                "problem" => self.problem = parse(value)?,
                "num_rects" => self.num_rects = positive_int(value)?,
                "arena_side" => self.arena_side = positive_real(value)?,
                "bits" => self.bits = positive_int(value)?,
                "block_size" => self.block_size = positive_int(value)?,
                "pop_size" => self.pop_size = positive_int(value)?,
                "max_generations" => self.max_generations = positive_int(value)?,
                "selection_rate" => {
                    let q: f64 = parse(value)?;
                    if !(q > 0.0 && q < 1.0) {
                        return Err(format!("must be in (0, 1), got {q}"));
                    }
                    self.selection_rate = q;
                }
                "mutation_rate" => self.mutation_rate = positive_real(value)?,
                "crossover_rate" => self.crossover_rate = positive_real(value)?,
                "crossover_points" => self.crossover_points = positive_int(value)?,
                "flip_count" => self.flip_count = positive_int(value)?,
                "seed" => self.seed = parse(value)?,
                "target_fitness" => {
                    let t: f64 = parse(value)?;
                    if !t.is_finite() {
                        return Err("must be finite".into());
                    }
                    self.target_fitness = Some(t);
                }
                "strategy" => {
                    self.strategy = match value.to_ascii_lowercase().as_str() {
                        "easy" => StepKind::Easy,
                        "canonical" => StepKind::Canonical,
                        other => return Err(format!("unknown strategy {other:?} (easy, canonical)")),
                    }
                }
                "islands" => {
                    let n = positive_int(value)?;
                    if n < 2 {
                        return Err("an archipelago needs at least 2 islands".into());
                    }
                    self.islands = Some(n);
                }
                "policy" => self.policy = value.parse().map_err(|e: isla_core::Error| e.to_string())?,
                "arena_file" => self.arena_file = Some(PathBuf::from(value)),
                "repetitions" => self.repetitions = positive_int(value)?,
                "dot_x" => self.dot_x = Some(parse(value)?),
                "dot_y" => self.dot_y = Some(parse(value)?),
                _ => return Err("unknown key".into()),
            }
            Ok(())
        })();
        res.map_err(|message| CliError::Config {
            key: key.to_string(),
            origin: origin.clone(),
            message,
        })
    }

    /// Applies `key = value` lines. `#` and `;` start comments; blank lines
    /// and `[section]` headers are ignored.
    pub fn merge_ini(&mut self, text: &str, path: &Path) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let origin = Origin::File {
                path: path.to_path_buf(),
                line: n + 1,
            };
            let line = raw.split(['#', ';']).next().unwrap_or("").trim();
            if line.is_empty() || (line.starts_with('[') && line.ends_with(']')) {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| CliError::Syntax {
                origin: origin.clone(),
                message: format!("expected `key = value`, found {line:?}"),
            })?;
            self.set(key.trim(), value, &origin)?;
        }
        Ok(())
    }

    pub fn merge_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        self.merge_ini(&text, path)
    }

    pub fn merge_positional(&mut self, values: &[String]) -> Result<(), CliError> {
        if values.len() > POSITIONAL_KEYS.len() {
            return Err(CliError::Syntax {
                origin: Origin::Positional(POSITIONAL_KEYS.len()),
                message: format!(
                    "at most {} positional arguments ({})",
                    POSITIONAL_KEYS.len(),
                    POSITIONAL_KEYS.join(" ")
                ),
            });
        }
        for (i, (key, value)) in POSITIONAL_KEYS.iter().zip(values).enumerate() {
            self.set(key, value, &Origin::Positional(i))?;
        }
        Ok(())
    }

    /// Target implied by the problem unless `target_fitness` is set: the
    /// rectangle count for `dot`, the genome length for OneMax and the block
    /// count for Royal Road.
    pub fn target(&self) -> f64 {
        self.target_fitness.unwrap_or(match self.problem {
            Problem::Dot => self.num_rects as f64,
            Problem::OneMax => self.bits as f64,
            Problem::RoyalRoad => (self.bits / self.block_size) as f64,
        })
    }

    /// Cross-field checks that individual keys cannot make on their own.
    pub fn validate(&self) -> Result<(), CliError> {
        let fail = |key: &str, message: String| {
            Err(CliError::Config {
                key: key.into(),
                origin: Origin::Validation,
                message,
            })
        };
        if self.problem == Problem::Dot && !self.bits.is_multiple_of(2) {
            return fail("bits", format!("dot problem needs an even bit count, got {}", self.bits));
        }
        if self.problem == Problem::Dot && self.bits > 128 {
            return fail("bits", "dot problem supports at most 128 bits".into());
        }
        if self.problem == Problem::RoyalRoad && !self.bits.is_multiple_of(self.block_size) {
            return fail(
                "block_size",
                format!("{} does not divide bits {}", self.block_size, self.bits),
            );
        }
        if self.crossover_points >= self.bits {
            return fail(
                "crossover_points",
                format!("must be below bits ({})", self.bits),
            );
        }
        if self.flip_count > self.bits {
            return fail("flip_count", format!("must not exceed bits ({})", self.bits));
        }
        let r = ((self.selection_rate * self.pop_size as f64 + 0.5).floor() as usize).max(1);
        if self.pop_size < 2 || r >= self.pop_size {
            return fail(
                "pop_size",
                format!(
                    "population {} with selection rate {} leaves no survivors",
                    self.pop_size, self.selection_rate
                ),
            );
        }
        Ok(())
    }

    /// Warnings for accepted-but-ignored settings.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.dot_x.is_some() || self.dot_y.is_some() {
            out.push("dot_x/dot_y are accepted for compatibility and ignored".to_string());
        }
        out
    }
}
