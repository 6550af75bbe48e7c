use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use slelab::harness::{self, Command, Config, HarnessError};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    Tables,
    Equivalence,
    OdeCheck,
    SleExcursion,
    Ising,
    CovarianceCheck,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Tables => Command::Tables,
            Cmd::Equivalence => Command::Equivalence,
            Cmd::OdeCheck => Command::OdeCheck,
            Cmd::SleExcursion => Command::SleExcursion,
            Cmd::Ising => Command::Ising,
            Cmd::CovarianceCheck => Command::CovarianceCheck,
        }
    }
}

/// SLE and critical Ising observables: closed forms and Monte Carlo checks.
///
/// Exit codes: 0 success, 2 tolerance breach, 3 invalid config,
/// 4 numeric failure.
#[derive(Debug, Parser)]
#[command(name = "slelab", version)]
struct Cli {
    #[arg(value_enum)]
    command: Cmd,
    /// Flat JSON object of parameters.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Top-level seed; overrides the config.
    #[arg(long)]
    seed: Option<u64>,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Allow 4 < kappa < 8 in `tables` (formula-level values only).
    #[arg(long)]
    formal: bool,
}

fn execute(cli: &Cli) -> Result<i32, HarnessError> {
    let mut config = match &cli.config {
        Some(path) => Config::from_file(path)?,
        None => Config::default(),
    };
    if let Some(seed) = cli.seed {
        config.set("seed", seed);
    }
    if cli.formal {
        config.set("formal", true);
    }
    let outcome = harness::run(cli.command.into(), &config)?;
    match &cli.out {
        Some(path) => std::fs::write(path, &outcome.csv)?,
        None => print!("{}", outcome.csv),
    }
    eprint!("{}", outcome.report);
    Ok(outcome.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = execute(&cli).unwrap_or_else(|e| {
        eprintln!("slelab {}: {e}", Command::from(cli.command).name());
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
