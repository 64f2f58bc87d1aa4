use isla_core::islands::{fully_connected, Archipelago, Event};
use isla_core::prelude::*;

fn standard_generation() -> Generation {
    Generation::canonical(EasyStepConfig::standard()).unwrap()
}

#[test]
fn lone_island_matches_plain_run() {
    let generation = Generation::easy(EasyStepConfig::standard()).unwrap();
    let terms = [Terminator::MaxGenerations(40), Terminator::TargetFitness(64.0)];
    let mut cfg = fully_connected(1, 314, 48, 64, &generation, &terms, MigrationPolicy::Best);
    cfg[0].alias = "solo".into();
    let report = run_archipelago(cfg, &OneMax).unwrap();

    let mut rng = RandomSource::new(314);
    let pop = random_population(48, 64, &mut rng).unwrap();
    let (pop, stats) = run(pop, &generation, &OneMax, &terms, &mut rng).unwrap();

    let solo = report.island("solo").unwrap();
    assert_eq!(solo.stats.best_per_generation(), stats.best_per_generation());
    assert_eq!(solo.stats.evaluations, stats.evaluations);
    assert_eq!(solo.population, pop);
    assert_eq!(report.messages_sent, 0);
}

#[test]
fn two_node_log_follows_the_round_robin() {
    let configs = fully_connected(
        2,
        1,
        16,
        32,
        &standard_generation(),
        &[Terminator::MaxGenerations(10)],
        MigrationPolicy::Best,
    );
    let report = run_archipelago(configs, &RoyalRoad { block_size: 4 }).unwrap();
    let lines = report.log_lines();
    assert!(lines[0].starts_with("1 node_1 step gen=1 best="));
    assert!(lines[1].starts_with("1 node_1 send to=node_2 gen=1 fitness="));
    assert!(lines[2].starts_with("1 node_2 recv from=node_1 gen=1 integrated"));
    assert!(lines[3].starts_with("1 node_2 step gen=1"));
    assert!(lines[4].starts_with("1 node_2 send to=node_1 gen=1"));
    assert!(lines[5].starts_with("2 node_1 recv from=node_2 gen=1 integrated"));
    for line in &lines {
        let fields: Vec<&str> = line.splitn(4, ' ').collect();
        assert_eq!(fields.len(), 4, "{line}");
        assert!(fields[0].parse::<usize>().is_ok());
        assert!(["step", "send", "recv"].contains(&fields[2]));
    }
    assert_eq!(report.rounds, 10);
}

#[test]
fn per_sender_order_is_preserved() {
    let configs = fully_connected(
        3,
        5,
        12,
        24,
        &standard_generation(),
        &[Terminator::MaxGenerations(12)],
        MigrationPolicy::MostDifferent,
    );
    let report = run_archipelago(configs, &OneMax).unwrap();
    for receiver in ["node_1", "node_2", "node_3"] {
        for sender in ["node_1", "node_2", "node_3"] {
            let gens: Vec<usize> = report
                .log
                .iter()
                .filter(|e| e.alias == receiver)
                .filter_map(|e| match &e.event {
                    Event::Recv { from, generation, .. } if from == sender => Some(*generation),
                    _ => None,
                })
                .collect();
            if sender == receiver {
                assert!(gens.is_empty());
            } else {
                assert_eq!(gens, (1..=12).collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn migration_never_loses_an_island_best() {
    for policy in [MigrationPolicy::Best, MigrationPolicy::MostDifferent] {
        let configs = fully_connected(
            4,
            99,
            20,
            40,
            &Generation::easy(EasyStepConfig::standard()).unwrap(),
            &[Terminator::MaxGenerations(25)],
            policy,
        );
        let mut arch = Archipelago::new(configs).unwrap();
        let f = RoyalRoad { block_size: 4 };
        arch.initialize(&f).unwrap();
        let aliases: Vec<String> = arch.aliases().map(String::from).collect();
        let mut best: Vec<f64> = aliases
            .iter()
            .map(|a| arch.population(a).unwrap()[0].score())
            .collect();
        while arch.run_round(&f).unwrap() {
            for (i, a) in aliases.iter().enumerate() {
                let pop = arch.population(a).unwrap();
                assert_eq!(pop.len(), 20);
                assert!(pop[0].score() >= best[i]);
                best[i] = pop[0].score();
            }
        }
        assert_eq!(arch.pending_messages(), 0);
        assert_eq!(arch.messages_sent(), 4 * 25 * 3);
        assert_eq!(arch.messages_delivered(), arch.messages_sent());
    }
}

#[test]
fn target_reached_islands_stop_early() {
    let generation = Generation::easy(EasyStepConfig::standard()).unwrap();
    let mut configs = fully_connected(
        2,
        17,
        64,
        16,
        &generation,
        &[Terminator::MaxGenerations(200), Terminator::TargetFitness(16.0)],
        MigrationPolicy::Best,
    );
    configs[1].terminators = vec![Terminator::MaxGenerations(60)];
    let report = run_archipelago(configs, &OneMax).unwrap();
    let first = report.island("node_1").unwrap();
    assert_eq!(first.stats.stop_reason, Some(StopReason::TargetReached));
    assert!(first.stats.generations_executed < 60);
    assert_eq!(report.island("node_2").unwrap().stats.generations_executed, 60);
    assert_eq!(report.messages_sent, report.messages_delivered);
}
