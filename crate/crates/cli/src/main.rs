use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use octahedral::arith::integer::parse_rational;
use octahedral::{Config, DEFAULT_FACTOR_BOUND};
use octahedral_cli::{exit_code, parse_poly, report, suites, table, CliError, ErrorReport};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "octa", version, about = "Principal quartic fields, octahedral embedding problems and Q-curves")]
struct Cli {
    #[command(flatten)]
    limits: Limits,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Limits {
    /// Trial-division bound for integer factorization.
    #[arg(long, global = true, env = "OCTA_FACTOR_BOUND", default_value_t = DEFAULT_FACTOR_BOUND)]
    factor_bound: u64,
    /// Box for the principal-form search.
    #[arg(long, global = true, env = "OCTA_SEARCH_BOX", default_value_t = 50)]
    search_box: i64,
    /// Starting precision in decimal digits for root certification.
    #[arg(long, global = true, env = "OCTA_PRECISION", default_value_t = 50)]
    precision: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for a quartic.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Principal form `X^4 + bX + c` of the same field.
    Principalize {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Embedding problems and endomorphism algebras.
    Classify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Q-curves of degree 2 from the family parameter
    #[command(subcommand)]
    Qcurve(QcurveCommand),
    /// Check every row of a table file.
    VerifyTables { path: PathBuf },
    /// Exact identities of the Q-curve family over Q(s).
    Symbolic,
    /// Subgroups of GL2(F9) lifting PGL2(F3).
    Gl2f9 {
        /// Also count conjugacy classes of S4 in PGL2(F9).
        #[arg(long)]
        conjugacy: bool,
    },
}

#[derive(Subcommand)]
enum QcurveCommand {
    /// Curve, j-invariant and Weil restriction for a rational `t`
    FromT {
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    /// Principalize a quartic, then build its curve
    FromQuartic {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
}

fn emit<T: Serialize>(value: &T) {
    let json = serde_json::to_string_pretty(value).expect("reports serialize");
    // a closed pipe is not an error of ours
    let _ = writeln!(std::io::stdout().lock(), "{json}");
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = Config {
        factor_bound: cli.limits.factor_bound,
        search_box: cli.limits.search_box,
        precision_digits: cli.limits.precision,
    };
    match cli.command {
        Command::Analyze { poly } => emit(&report::analyze(&parse_poly(&poly)?, &cfg)?),
        Command::Principalize { poly } => emit(&report::principalize(&parse_poly(&poly)?, &cfg)?),
        Command::Classify { poly } => emit(&report::classify(&parse_poly(&poly)?, &cfg)?),
        Command::Qcurve(QcurveCommand::FromT { t }) => {
            let t = parse_rational(t.trim()).ok_or_else(|| CliError::Parse {
                line: None,
                message: format!("bad rational `{t}`"),
            })?;
            emit(&report::qcurve_from_t(&t, &cfg)?)
        }
        Command::Qcurve(QcurveCommand::FromQuartic { poly }) => emit(&report::qcurve_from_quartic(&parse_poly(&poly)?, &cfg)?),
        Command::VerifyTables { path } => {
            let rows = table::parse_table(&path, cfg.factor_bound)?;
            let summary = table::verify_rows(&rows, &cfg);
            emit(&summary);
            for r in summary.rows.iter().filter(|r| !r.passed) {
                eprintln!("line {} (d = {}): {}", r.line, r.d, r.failures.join("; "));
            }
            eprintln!("{}/{} rows pass", summary.passed, summary.total);
            if !summary.all_passed() {
                return Err(CliError::RowsFailed {
                    failed: summary.failed.len(),
                    total: summary.total,
                });
            }
        }
        Command::Symbolic => {
            let ledger = suites::symbolic();
            emit(&ledger);
            if !ledger.passed {
                return Err(CliError::ChecksFailed(ledger.suite.failures().len()));
            }
        }
        Command::Gl2f9 { conjugacy } => {
            let ledger = suites::gl2f9(conjugacy);
            emit(&ledger);
            if !ledger.passed {
                return Err(CliError::ChecksFailed(ledger.group_checks.failures().len()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::RowsFailed { .. } | CliError::ChecksFailed(_)) {
                emit(&ErrorReport::new(&e));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
