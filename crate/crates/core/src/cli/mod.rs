//! The `okubic` command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 invalid input.

pub mod commands;
pub mod payload;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::exactfield::{Rational, F3};
use crate::okubo::Flavor;

use commands::{DerivationAlgebra, TableAlgebra, VeroneseAction};
use suites::{Suite, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "okubic", version, about = "Exact computations in the Okubo algebra and the Okubic Albert algebra")]
pub struct Cli {
    /// Worker threads for sampled checks.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_q(s: &str) -> Result<F3, String> {
    s.parse::<Rational>().map(F3::rational).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a seeded verification suite.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value = "compact")]
        flavor: Flavor,
        #[arg(long, default_value = "1/2", value_parser = parse_q)]
        q: F3,
    },
    /// Print a multiplication table.
    Table {
        #[arg(value_enum)]
        algebra: TableAlgebra,
    },
    /// Embed a plane point as an idempotent, or decode an idempotent.
    Veronese {
        #[arg(value_enum)]
        action: VeroneseAction,
        /// JSON literal, `@file`, `-` for stdin, or a name such as `e0`.
        payload: String,
    },
    /// Kernel and image dimensions of left multiplication.
    Kernel {
        payload: String,
        #[arg(long, default_value = "1/2", value_parser = parse_q)]
        q: F3,
    },
    /// Derivation algebra report.
    Derivations {
        #[arg(value_enum)]
        algebra: DerivationAlgebra,
    },
}

enum Outcome {
    Done(String),
    Failed(String),
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if cli.format == Format::Csv && !matches!(cli.command, Command::Table { .. }) {
        eprintln!("okubic: --format csv is only available for `table`");
        return EXIT_USAGE;
    }
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("okubic: {e}");
            return EXIT_INVALID;
        }
    };
    let (text, code) = match outcome {
        Outcome::Done(t) => (t, EXIT_OK),
        Outcome::Failed(t) => (t, EXIT_FAILURE),
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("okubic: {e}");
        return EXIT_FAILURE;
    }
    code
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> crate::Result<Outcome> {
    match &cli.command {
        Command::Check { suite, seed, samples, flavor, q } => {
            let cfg = SuiteConfig { samples: *samples, seed: *seed, flavor: *flavor, q: q.clone() };
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(j) = cli.jobs {
                pool = pool.num_threads(j.max(1));
            }
            let pool = pool.build().map_err(|e| crate::Error::Parse(e.to_string()))?;
            let report = pool.install(|| suites::run_suite(*suite, &cfg))?;
            eprintln!("okubic: {} finished in {:.3}s", report.suite, report.wall_time.as_secs_f64());
            let text = to_json(&report);
            Ok(if report.passed { Outcome::Done(text) } else { Outcome::Failed(text) })
        }
        Command::Table { algebra } => {
            let t = commands::table(*algebra);
            Ok(Outcome::Done(match cli.format {
                Format::Csv => t.to_csv()?,
                Format::Json => to_json(&t),
            }))
        }
        Command::Veronese { action, payload } => {
            let v = payload::read_payload(payload)?;
            Ok(Outcome::Done(to_json(&commands::veronese(*action, &v)?)))
        }
        Command::Kernel { payload, q } => {
            let v = payload::read_payload(payload)?;
            Ok(Outcome::Done(to_json(&commands::kernel(&v, q)?)))
        }
        Command::Derivations { algebra } => Ok(Outcome::Done(to_json(&commands::derivations(*algebra)))),
    }
}
