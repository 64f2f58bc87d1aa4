//! Island model: several populations evolving side by side, each sending one
//! migrant to every peer after each of its generation steps.
//!
//! Islands never share state; they talk only through per-island FIFO
//! mailboxes. [`Archipelago`] is a deterministic round-robin scheduler: in
//! every round each island, in configuration order, drains its mailbox,
//! runs one step and posts its migrants.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::engine::{
    evaluate_population, random_population, sort_descending, Evolution, Fitness, Generation,
    Individual, RunStats, Terminator,
};
use crate::error::{Error, Result};
use crate::genome::BitGenome;
use crate::operators::hamming;
use crate::rng::RandomSource;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MigrationPolicy {
    /// Send the fittest individual.
    Best,
    /// Send the individual farthest (Hamming) from the sender's consensus genome.
    MostDifferent,
}

impl std::str::FromStr for MigrationPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "best" => Ok(Self::Best),
            "mostdifferent" | "most-different" | "most_different" => Ok(Self::MostDifferent),
            other => Err(Error::Config(format!("unknown migration policy {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct IslandConfig {
    pub alias: String,
    pub peers: Vec<String>,
    pub generation: Generation,
    pub terminators: Vec<Terminator>,
    pub migration_policy: MigrationPolicy,
    pub seed: u64,
    pub pop_size: usize,
    pub genome_length: usize,
}

/// One individual in transit between islands.
#[derive(Debug, Clone, PartialEq)]
pub struct MigrantMessage {
    pub source: String,
    /// Sender generation that produced the migrant, starting at 1.
    pub generation: usize,
    pub individual: Individual,
}

/// Per-locus majority genome; a tied locus becomes 1.
pub fn consensus(pop: &[Individual]) -> Result<BitGenome> {
    let first = pop
        .first()
        .ok_or_else(|| Error::invalid("population is empty"))?;
    let len = first.genome.len();
    let mut ones = vec![0usize; len];
    for ind in pop {
        if ind.genome.len() != len {
            return Err(Error::invalid("population genomes differ in length"));
        }
        for (count, &bit) in ones.iter_mut().zip(ind.genome.bits()) {
            *count += bit as usize;
        }
    }
    BitGenome::new(ones.into_iter().map(|c| 2 * c >= pop.len()).collect())
}

/// Independent copy of the individual the policy picks. `pop` is expected
/// sorted best first. Under `MostDifferent`, equally distant candidates
/// resolve to the one nearest the end of the population.
pub fn select_migrant(policy: MigrationPolicy, pop: &[Individual]) -> Result<Individual> {
    if pop.is_empty() {
        return Err(Error::invalid("cannot pick a migrant from an empty population"));
    }
    if pop.iter().any(|i| i.fitness.is_none()) {
        return Err(Error::invalid("migrant candidates must be evaluated"));
    }
    match policy {
        MigrationPolicy::Best => {
            let mut best = &pop[0];
            for ind in &pop[1..] {
                if ind.score() > best.score() {
                    best = ind;
                }
            }
            Ok(best.clone())
        }
        MigrationPolicy::MostDifferent => {
            let center = consensus(pop)?;
            let mut chosen = &pop[0];
            let mut farthest = 0;
            for ind in pop {
                let d = hamming(&ind.genome, &center)?;
                if d >= farthest {
                    farthest = d;
                    chosen = ind;
                }
            }
            Ok(chosen.clone())
        }
    }
}

/// Evaluates the migrant if needed, then unconditionally replaces the worst
/// individual and re-sorts.
pub fn integrate_migrant<F: Fitness + ?Sized>(
    pop: &mut [Individual],
    migrant: Individual,
    f: &F,
    stats: &mut RunStats,
) -> Result<()> {
    let len = pop
        .first()
        .ok_or_else(|| Error::invalid("population is empty"))?
        .genome
        .len();
    if migrant.genome.len() != len {
        return Err(Error::invalid(format!(
            "migrant genome has {} bits, island expects {len}",
            migrant.genome.len()
        )));
    }
    let mut incoming = [migrant];
    evaluate_population(&mut incoming, f, stats)?;
    let [migrant] = incoming;
    sort_descending(pop);
    let worst = pop.len() - 1;
    pop[worst] = migrant;
    sort_descending(pop);
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub enum RecvOutcome {
    Integrated,
    /// Arrived after the recipient terminated.
    Discarded,
    Rejected(String),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Event {
    Step { generation: usize, best: f64 },
    Send { to: String, generation: usize, fitness: f64 },
    Recv { from: String, generation: usize, outcome: RecvOutcome },
}

/// One scheduler event, rendered as `<round> <alias> <event> <detail>`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogEntry {
    pub round: usize,
    pub alias: String,
    pub event: Event,
}

impl fmt::Display for LogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ", self.round, self.alias)?;
        match &self.event {
            Event::Step { generation, best } => write!(f, "step gen={generation} best={best}"),
            Event::Send {
                to,
                generation,
                fitness,
            } => write!(f, "send to={to} gen={generation} fitness={fitness}"),
            Event::Recv {
                from,
                generation,
                outcome,
            } => {
                write!(f, "recv from={from} gen={generation} ")?;
                match outcome {
                    RecvOutcome::Integrated => write!(f, "integrated"),
                    RecvOutcome::Discarded => write!(f, "discarded"),
                    RecvOutcome::Rejected(why) => write!(f, "rejected: {why}"),
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Island {
    alias: String,
    peers: Vec<usize>,
    policy: MigrationPolicy,
    evolution: Evolution,
    terminated: bool,
    sent: usize,
    received: usize,
}

#[derive(Debug, Clone)]
pub struct IslandOutcome {
    pub alias: String,
    pub population: Vec<Individual>,
    pub stats: RunStats,
    pub messages_sent: usize,
    pub messages_received: usize,
}

#[derive(Debug, Clone)]
pub struct ArchipelagoReport {
    /// In configuration order.
    pub islands: Vec<IslandOutcome>,
    pub log: Vec<LogEntry>,
    pub messages_sent: usize,
    pub messages_delivered: usize,
    pub rounds: usize,
}

impl ArchipelagoReport {
    pub fn island(&self, alias: &str) -> Option<&IslandOutcome> {
        self.islands.iter().find(|i| i.alias == alias)
    }

    pub fn log_lines(&self) -> Vec<String> {
        self.log.iter().map(ToString::to_string).collect()
    }
}

/// Round-robin scheduler over a set of islands.
#[derive(Debug, Clone)]
pub struct Archipelago {
    islands: Vec<Island>,
    mailboxes: Vec<VecDeque<MigrantMessage>>,
    log: Vec<LogEntry>,
    round: usize,
    sent: usize,
    delivered: usize,
}

impl Archipelago {
    /// Validates the topology and seeds every island's initial population.
    pub fn new(configs: Vec<IslandConfig>) -> Result<Self> {
        if configs.is_empty() {
            return Err(Error::Config("an archipelago needs at least one island".into()));
        }
        let index: HashMap<&str, usize> = configs
            .iter()
            .enumerate()
            .map(|(i, c)| (c.alias.as_str(), i))
            .collect();
        if index.len() != configs.len() {
            return Err(Error::Config("island aliases must be unique".into()));
        }
        let mut islands = Vec::with_capacity(configs.len());
        for cfg in &configs {
            let mut seen = HashSet::new();
            let mut peers = Vec::with_capacity(cfg.peers.len());
            for peer in &cfg.peers {
                if peer == &cfg.alias {
                    return Err(Error::Config(format!("island {} lists itself as a peer", cfg.alias)));
                }
                if !seen.insert(peer) {
                    return Err(Error::Config(format!(
                        "island {} lists peer {peer} twice",
                        cfg.alias
                    )));
                }
                let &target = index.get(peer.as_str()).ok_or_else(|| {
                    Error::Config(format!("island {} names unknown peer {peer}", cfg.alias))
                })?;
                peers.push(target);
            }
            let mut rng = RandomSource::new(cfg.seed);
            let pop = random_population(cfg.pop_size, cfg.genome_length, &mut rng)?;
            let evolution = Evolution::new(pop, cfg.generation.clone(), cfg.terminators.clone(), rng)?;
            islands.push(Island {
                alias: cfg.alias.clone(),
                peers,
                policy: cfg.migration_policy,
                evolution,
                terminated: false,
                sent: 0,
                received: 0,
            });
        }
        let mailboxes = vec![VecDeque::new(); islands.len()];
        Ok(Self {
            islands,
            mailboxes,
            log: Vec::new(),
            round: 0,
            sent: 0,
            delivered: 0,
        })
    }

    /// Evaluates every initial population, then runs rounds until every
    /// island has terminated and all mailboxes are empty.
    pub fn run<F: Fitness + ?Sized>(mut self, f: &F) -> Result<ArchipelagoReport> {
        self.initialize(f)?;
        while self.run_round(f)? {}
        Ok(self.finish())
    }

    /// Evaluates every island's initial population. Islands whose terminator
    /// already holds never step.
    pub fn initialize<F: Fitness + ?Sized>(&mut self, f: &F) -> Result<()> {
        for island in &mut self.islands {
            island.evolution.initialize(f)?;
            island.terminated = island.evolution.check_termination().is_some();
        }
        Ok(())
    }

    /// Runs one round over every island in configuration order. Once all
    /// islands have terminated, delivers the remaining mail and returns `false`.
    pub fn run_round<F: Fitness + ?Sized>(&mut self, f: &F) -> Result<bool> {
        if self.is_finished() {
            // late migrants are accepted and dropped
            for i in 0..self.islands.len() {
                self.drain(i, f, self.round)?;
            }
            return Ok(false);
        }
        self.round += 1;
        for i in 0..self.islands.len() {
            self.island_step(i, f)?;
        }
        Ok(true)
    }

    pub fn is_finished(&self) -> bool {
        self.islands.iter().all(|i| i.terminated)
    }

    pub fn round(&self) -> usize {
        self.round
    }

    pub fn aliases(&self) -> impl Iterator<Item = &str> {
        self.islands.iter().map(|i| i.alias.as_str())
    }

    pub fn population(&self, alias: &str) -> Option<&[Individual]> {
        self.islands
            .iter()
            .find(|i| i.alias == alias)
            .map(|i| i.evolution.population())
    }

    pub fn messages_sent(&self) -> usize {
        self.sent
    }

    pub fn messages_delivered(&self) -> usize {
        self.delivered
    }

    pub fn pending_messages(&self) -> usize {
        self.mailboxes.iter().map(VecDeque::len).sum()
    }

    /// Drains island `i`'s mailbox, steps it once and posts one migrant to
    /// every peer. Terminated islands only drain.
    pub fn island_step<F: Fitness + ?Sized>(&mut self, i: usize, f: &F) -> Result<()> {
        let round = self.round;
        self.drain(i, f, round)?;
        if self.islands[i].terminated {
            return Ok(());
        }
        let peer_aliases: Vec<String> = self.islands[i]
            .peers
            .iter()
            .map(|&p| self.islands[p].alias.clone())
            .collect();
        let island = &mut self.islands[i];
        let record = island.evolution.step(f)?;
        let generation = record.generation;
        self.log.push(LogEntry {
            round,
            alias: island.alias.clone(),
            event: Event::Step {
                generation,
                best: record.best_fitness,
            },
        });
        if !island.peers.is_empty() {
            let migrant = select_migrant(island.policy, island.evolution.population())?;
            for (&peer, to) in island.peers.iter().zip(peer_aliases) {
                self.log.push(LogEntry {
                    round,
                    alias: island.alias.clone(),
                    event: Event::Send {
                        to,
                        generation,
                        fitness: migrant.score(),
                    },
                });
                self.mailboxes[peer].push_back(MigrantMessage {
                    source: island.alias.clone(),
                    generation,
                    individual: migrant.clone(),
                });
                island.sent += 1;
                self.sent += 1;
            }
        }
        island.terminated = island.evolution.check_termination().is_some();
        Ok(())
    }

    fn drain<F: Fitness + ?Sized>(&mut self, i: usize, f: &F, round: usize) -> Result<()> {
        while let Some(msg) = self.mailboxes[i].pop_front() {
            let island = &mut self.islands[i];
            island.received += 1;
            self.delivered += 1;
            let outcome = if island.terminated {
                RecvOutcome::Discarded
            } else {
                let (pop, stats) = island.evolution.parts_mut();
                match integrate_migrant(pop, msg.individual, f, stats) {
                    Ok(()) => RecvOutcome::Integrated,
                    Err(e @ Error::InvalidArgument(_)) => RecvOutcome::Rejected(e.to_string()),
                    Err(e) => return Err(e),
                }
            };
            self.log.push(LogEntry {
                round,
                alias: island.alias.clone(),
                event: Event::Recv {
                    from: msg.source,
                    generation: msg.generation,
                    outcome,
                },
            });
        }
        Ok(())
    }

    pub fn finish(self) -> ArchipelagoReport {
        let islands = self
            .islands
            .into_iter()
            .map(|island| {
                let (population, stats, _) = island.evolution.into_parts();
                IslandOutcome {
                    alias: island.alias,
                    population,
                    stats,
                    messages_sent: island.sent,
                    messages_received: island.received,
                }
            })
            .collect();
        ArchipelagoReport {
            islands,
            log: self.log,
            messages_sent: self.sent,
            messages_delivered: self.delivered,
            rounds: self.round,
        }
    }

    /// Directly enqueue a message, as if `msg.source` had posted it.
    pub fn post(&mut self, to: &str, msg: MigrantMessage) -> Result<()> {
        let i = self
            .islands
            .iter()
            .position(|i| i.alias == to)
            .ok_or_else(|| Error::Config(format!("unknown island {to}")))?;
        self.mailboxes[i].push_back(msg);
        self.sent += 1;
        Ok(())
    }
}

/// Builds and runs an archipelago from `configs`.
pub fn run_archipelago<F: Fitness + ?Sized>(
    configs: Vec<IslandConfig>,
    f: &F,
) -> Result<ArchipelagoReport> {
    Archipelago::new(configs)?.run(f)
}

/// `n` islands named `node_1..node_n`, each peered with all others, seeded
/// `seed, seed + 1, ...`.
pub fn fully_connected(
    n: usize,
    seed: u64,
    pop_size: usize,
    genome_length: usize,
    generation: &Generation,
    terminators: &[Terminator],
    policy: MigrationPolicy,
) -> Vec<IslandConfig> {
    let names: Vec<String> = (1..=n).map(|i| format!("node_{i}")).collect();
    names
        .iter()
        .enumerate()
        .map(|(i, alias)| IslandConfig {
            alias: alias.clone(),
            peers: names.iter().filter(|p| *p != alias).cloned().collect(),
            generation: generation.clone(),
            terminators: terminators.to_vec(),
            migration_policy: policy,
            seed: seed.wrapping_add(i as u64),
            pop_size,
            genome_length,
        })
        .collect()
}
