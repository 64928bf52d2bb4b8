mod commands;
mod error;
mod job;
mod report;

use clap::{Parser, Subcommand};
use error::CliError;
use job::Overrides;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Dieudonné determinants, Weierstrass preparation and isogeny ideal checks.
#[derive(Parser, Debug)]
#[command(name = "dieudonne", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Job file (JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Report destination; stdout when absent.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// p-adic precision N, overriding the job.
    #[arg(long, global = true)]
    precision: Option<u32>,
    /// Series precision M, overriding the job.
    #[arg(long, global = true)]
    series: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cases per property for `proptest`.
    #[arg(long, global = true)]
    cases: Option<usize>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Class of the Dieudonné determinant of a square matrix.
    Det,
    /// Weierstrass preparation of a power series.
    Weierstrass,
    /// Compare the two sides of the isogeny ideal identity.
    IsogenyCheck,
    /// Recompute the reference examples.
    VerifyPaper,
    /// Seeded property run.
    Proptest,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Det => "det",
            Command::Weierstrass => "weierstrass",
            Command::IsogenyCheck => "isogeny-check",
            Command::VerifyPaper => "verify-paper",
            Command::Proptest => "proptest",
        }
    }
}

fn read_input(cli: &Cli) -> Result<String, CliError> {
    let path = cli.input.as_ref().ok_or_else(|| CliError::Usage("--input PATH is required".into()))?;
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn execute(cli: &Cli) -> Result<(Value, Value, Vec<String>), CliError> {
    let overrides = Overrides { precision: cli.precision, series: cli.series };
    let outcome = match cli.command {
        Command::Det => commands::det::run(&read_input(cli)?, overrides)?,
        Command::Weierstrass => commands::weierstrass::run(&read_input(cli)?, overrides)?,
        Command::IsogenyCheck => commands::isogeny::run(&read_input(cli)?, overrides)?,
        Command::VerifyPaper => {
            let (results, failures) = commands::paper::run()?;
            return Ok((json!({}), results, failures));
        }
        Command::Proptest => {
            let seed = cli.seed.unwrap_or(0);
            let (results, failures) = commands::props::run(seed, cli.cases.unwrap_or(commands::props::DEFAULT_CASES))?;
            return Ok((json!({}), results, failures));
        }
    };
    Ok((outcome.context, outcome.results, outcome.failures))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (context, results, failures) = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("dieudonne {}: {e}", cli.command.name());
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let report = report::envelope(cli.command.name(), context, results, &failures, start.elapsed());
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::Write::write_all(&mut std::io::stdout(), text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("dieudonne: cannot write report: {e}");
        return ExitCode::from(2);
    }
    for f in &failures {
        eprintln!("failed: {f}");
    }
    if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
