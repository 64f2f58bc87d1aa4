use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use isla_cli::args::{Cli, Command, CommonArgs};
use isla_cli::bench::run_bench;
use isla_cli::config::{CliError, ExperimentConfig, Problem};
use isla_cli::experiment::{build_fitness, run_experiment, run_islands, ProblemFitness, EXIT_ERROR};
use isla_core::RandomSource;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn prepare(common: &CommonArgs, cfg: &ExperimentConfig, arena_seed: u64) -> Result<(), CliError> {
    for w in cfg.warnings() {
        eprintln!("warning: {w}");
    }
    if let Some(path) = &common.write_arena {
        cfg.validate()?;
        if cfg.problem != Problem::Dot {
            eprintln!("warning: --write-arena ignored for problem {}", cfg.problem);
            return Ok(());
        }
        if let ProblemFitness::Dot(f) = build_fitness(cfg, &mut RandomSource::new(arena_seed))? {
            std::fs::write(path, f.arena().to_text()).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
        }
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<u8, CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match cli.command {
        Command::Run(args) => {
            let cfg = args.common.resolve(ExperimentConfig::default(), &[])?;
            prepare(&args.common, &cfg, cfg.seed)?;
            run_experiment(&cfg, &mut out)?
        }
        Command::Islands(args) => {
            let mut cfg = args.resolve()?;
            cfg.islands.get_or_insert(2);
            prepare(&args.common, &cfg, cfg.seed)?;
            let (code, report) = run_islands(&cfg, &mut out)?;
            if let Some(path) = &args.log {
                let mut text = report.log_lines().join("\n");
                text.push('\n');
                std::fs::write(path, text).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
            }
            code
        }
        Command::Bench(args) => {
            let cfg = args.resolve()?;
            prepare(&args.common, &cfg, cfg.seed)?;
            run_bench(&cfg, &mut out)?;
            0
        }
    };
    out.flush().map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })?;
    Ok(code)
}
