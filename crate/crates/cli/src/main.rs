//! `qrr`: command-line front end to the q-series engine.
//!
//! Exit code 0 means every check passed and 1 means a coefficient mismatch.
//! Any usage or input error exits with 2.

mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{BaileyArgs, CmdResult, VerifyArgs};

const MAX_ORDER: i64 = 100_000;

#[derive(Parser)]
#[command(
    name = "qrr",
    version,
    about = "Exact q-series identities for A2(2) standard modules and Capparelli partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BaileyAction {
    Beta,
    Check,
}

fn order_arg(s: &str) -> Result<i64, String> {
    let n: i64 = s.parse().map_err(|e| format!("{e}"))?;
    if (1..=MAX_ORDER).contains(&n) {
        Ok(n)
    } else {
        Err(format!("order must lie in 1..={MAX_ORDER}"))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Expand a product expression such as "(q;q)_inf^2 / (q^2;q^3)_5".
    Expand {
        expr: String,
        #[arg(long, default_value_t = 20, value_parser = order_arg)]
        order: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify a catalog identity, or the whole suite with `all`.
    Verify {
        id: String,
        #[arg(long, allow_hyphen_values = true)]
        level: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        i: Option<i64>,
        /// Monomial argument such as `q^2` or `-q^-3`.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long, value_parser = order_arg)]
        order: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print one beta_n, or check every representation up to --max-n.
    Bailey {
        #[arg(value_enum)]
        action: BaileyAction,
        #[arg(long, allow_hyphen_values = true)]
        level: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long, default_value_t = 24, allow_hyphen_values = true)]
        max_n: i64,
        #[arg(long, default_value = "definitional")]
        form: String,
        #[arg(long, default_value_t = 80, value_parser = order_arg)]
        order: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate both sides of a Capparelli identity.
    Capparelli {
        #[arg(long, allow_hyphen_values = true)]
        which: i64,
        #[arg(long, default_value_t = 60, allow_hyphen_values = true)]
        max_n: i64,
        #[arg(long, value_parser = order_arg)]
        order: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the identities `verify` knows about.
    Catalog {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Thread pool sized by `QRR_THREADS`; `None` means run sequentially.
fn thread_pool() -> Result<Option<rayon::ThreadPool>, String> {
    let threads = match std::env::var("QRR_THREADS") {
        Ok(v) => {
            v.trim().parse::<usize>().map_err(|_| format!("QRR_THREADS must be a non-negative integer, got `{v}`"))?
        }
        Err(_) => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
    };
    if threads == 0 {
        return Ok(None);
    }
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().map(Some).map_err(|e| e.to_string())
}

fn run(command: Command) -> (CmdResult, Format) {
    match command {
        Command::Expand { expr, order, format } => (commands::expand(&expr, order), format),
        Command::Verify { id, level, i, z, order, format } => {
            let result = if id == "all" {
                thread_pool().and_then(|pool| commands::verify_all(order, pool.as_ref()))
            } else {
                commands::verify_one(&VerifyArgs { id, level, i, z, order })
            };
            (result, format)
        }
        Command::Bailey { action, level, i, n, max_n, form, order, format } => {
            let args = BaileyArgs { level, i, n, max_n, form, order };
            let result = match action {
                BaileyAction::Beta => commands::bailey_beta(&args),
                BaileyAction::Check => commands::bailey_check(&args),
            };
            (result, format)
        }
        Command::Capparelli { which, max_n, order, format } => (commands::capparelli(which, max_n, order), format),
        Command::Catalog { .. } => unreachable!("handled in main"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Catalog { format } = cli.command {
        let (json, text) = commands::catalog_listing();
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&json).expect("catalog serializes")),
            Format::Text => print!("{text}"),
        }
        return ExitCode::SUCCESS;
    }
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(|| run(cli.command));
    let (result, format) = match outcome {
        Ok(r) => r,
        Err(_) => {
            eprintln!("error: internal failure");
            return ExitCode::from(2);
        }
    };
    match result {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", out.report.to_json()),
                Format::Text => {
                    print!("{}", out.text);
                    println!("wall_time_ms: {}", start.elapsed().as_millis());
                }
            }
            ExitCode::from(out.report.status.exit_code() as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
