//! Single-value queries: partition counts, `r5(n)` and `R(n, Q)`.

use std::process::ExitCode;

use clap::Parser;
use partcong::fivesquares::R5Table;
use partcong::partitions::{coefficients, PartitionKind};
use partcong::quadforms::{count_representations, DiagonalForm};
use partcong::series::CoefficientRing;

#[derive(Parser)]
#[command(name = "compute", about = "Compute one coefficient")]
struct Cli {
    /// pbar, pbar-odd, ped, pod, r5 or R
    quantity: String,
    #[arg(long)]
    n: u64,
    /// Diagonal form for R, as comma-separated coefficients.
    #[arg(long, default_value = "1,6")]
    form: DiagonalForm,
    /// Coefficient ring for the series quantities.
    #[arg(long, default_value = "exact")]
    ring: CoefficientRing,
}

fn compute(cli: &Cli) -> Result<String, String> {
    let n = cli.n as usize;
    match cli.quantity.as_str() {
        "R" => Ok(count_representations(cli.n, &cli.form).to_string()),
        "r5" => {
            let value = match cli.ring {
                CoefficientRing::Exact => R5Table::new(n).and_then(|t| t.get(cli.n)),
                ring => partcong::fivesquares::r5_series(n, ring)
                    .map(|s| s.coeff(n))
                    .map_err(Into::into),
            };
            value.map(|v| v.to_string()).map_err(|e| e.to_string())
        }
        other => {
            let kind: PartitionKind = other
                .parse()
                .map_err(|e: partcong::partitions::PartitionError| e.to_string())?;
            coefficients(kind, n, cli.ring)
                .map(|s| s.coeff(n).to_string())
                .map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match compute(&cli) {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("compute: {e}");
            ExitCode::from(2)
        }
    }
}
