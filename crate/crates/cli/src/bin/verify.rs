//! Runs the registered checks and writes reports.
//!
//! Exit status: 0 when every check passes, 1 when any fails, 2 on a
//! configuration error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use partcong::partitions::PartitionKind;
use partcong::series::CoefficientRing;
use partcong::verify::{
    exit_code, registry, run_all, write_reports, OutputFormat, Perturbation, RunConfig,
};

#[derive(Parser)]
#[command(name = "verify", about = "Verify overpartition congruences modulo 3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks (all of them by default).
    Run(RunArgs),
    /// List registered checks with their anchors.
    List,
}

#[derive(clap::Args)]
struct RunArgs {
    /// Check to run; repeatable.
    #[arg(long = "check", value_name = "NAME")]
    checks: Vec<String>,
    /// Sweep bound applied to every selected check.
    #[arg(long)]
    n_max: Option<u64>,
    /// Largest alpha for the congruence families.
    #[arg(long)]
    alpha_max: Option<i64>,
    /// Comma-separated primes for the checks that take primes.
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<i64>>,
    #[arg(long, default_value = "mod3")]
    ring: CoefficientRing,
    #[arg(long, default_value = "text")]
    format: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Truncation order of the shared series.
    #[arg(long)]
    order: Option<usize>,
    /// KIND:INDEX; adds 1 to that coefficient after the series is built.
    #[arg(long, hide = true, value_parser = parse_perturbation)]
    perturb: Option<Perturbation>,
}

fn parse_perturbation(s: &str) -> Result<Perturbation, String> {
    let (kind, index) = s
        .split_once(':')
        .ok_or_else(|| format!("expected KIND:INDEX, got {s:?}"))?;
    Ok(Perturbation {
        kind: kind.parse::<PartitionKind>().map_err(|e| e.to_string())?,
        index: index.parse().map_err(|_| format!("bad index {index:?}"))?,
        delta: 1,
    })
}

fn run(args: RunArgs) -> Result<i32, String> {
    let config = RunConfig {
        checks: args.checks,
        n_max: args.n_max,
        alpha_max: args.alpha_max,
        primes: args.primes,
        ring: Some(args.ring),
        order: args.order,
        perturbation: args.perturb,
    };
    let reports = run_all(&config).map_err(|e| e.to_string())?;
    let written = match &args.out {
        Some(path) => File::create(path)
            .and_then(|f| {
                let mut w = BufWriter::new(f);
                write_reports(&reports, args.format, &mut w)?;
                w.flush()
            })
            .map_err(|e| format!("{}: {e}", path.display())),
        None => {
            write_reports(&reports, args.format, io::stdout().lock()).map_err(|e| e.to_string())
        }
    };
    written?;
    Ok(exit_code(&reports))
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::List => {
            let mut out = io::stdout().lock();
            for def in registry() {
                if writeln!(
                    out,
                    "{:<20} {:<40} {}",
                    def.name, def.paper_ref, def.summary
                )
                .is_err()
                {
                    break;
                }
            }
            ExitCode::SUCCESS
        }
        Command::Run(args) => match run(args) {
            Ok(code) => ExitCode::from(code as u8),
            Err(e) => {
                eprintln!("verify: {e}");
                ExitCode::from(2)
            }
        },
    }
}
