//! `lfact`: tables, identity verification, series and the bijection demo.

macro_rules! out {
    ($($t:tt)*) => {
        $crate::write_out(format_args!($($t)*))?
    };
}

macro_rules! outln {
    () => {
        $crate::write_out(format_args!("\n"))?
    };
    ($($t:tt)*) => {
        $crate::write_out(format_args!("{}\n", format_args!($($t)*)))?
    };
}

mod bijection;
mod series;
mod table;
mod verify;

use std::fmt;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "lfact", version, about = "Exact λ-factorial and derangement toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of a number or polynomial family.
    Table {
        /// factorial, derangement, lambda-factorial, charlier, bell, hermite, stirling2 or q
        family: String,
        /// `a..b` (inclusive) or a single index
        n: String,
        /// second index range for stirling2 and q
        m: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// allow ranges beyond the default cutoffs
        #[arg(long = "unsafe")]
        allow_unsafe: bool,
    },
    /// Verify catalogued identities; prints one JSON report per line.
    Verify {
        /// identity ids, or `all`
        ids: Vec<String>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// allow ranges beyond the default cutoffs
        #[arg(long = "unsafe")]
        allow_unsafe: bool,
        /// list the catalogue instead of verifying
        #[arg(long)]
        list: bool,
    },
    /// Print a truncated series.
    Series {
        /// tree, egf-f or abel-rhs
        what: String,
        #[arg(long, env = "LFACT_ORDER", default_value_t = 8)]
        order: usize,
        /// coefficient family for abel-rhs
        #[arg(long, default_value = "ones")]
        a: String,
        /// integer value of λ; symbolic when omitted
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<i64>,
        /// print the coefficients as a JSON array of strings
        #[arg(long)]
        json: bool,
        /// allow orders beyond the default cutoff
        #[arg(long = "unsafe")]
        allow_unsafe: bool,
    },
    /// Run the colored functional-digraph bijection.
    Bijection {
        n: usize,
        lambda: usize,
        /// comma-separated image list of one σ to trace through the bijection
        #[arg(long)]
        sigma: Option<String>,
    },
}

/// Ends a command early; `code` becomes the exit status.
pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl From<io::Error> for CliError {
    /// A closed pipe ends output quietly.
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            CliError {
                message: String::new(),
                code: 0,
            }
        } else {
            CliError {
                message: e.to_string(),
                code: 1,
            }
        }
    }
}

pub fn write_out(args: fmt::Arguments) -> Result<(), CliError> {
    Ok(io::stdout().lock().write_fmt(args)?)
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table {
            family,
            n,
            m,
            format,
            allow_unsafe,
        } => table::run(&family, &n, m.as_deref(), format, allow_unsafe),
        Command::Verify {
            ids,
            n_max,
            m_max,
            order,
            allow_unsafe,
            list,
        } => {
            if list {
                verify::list()
            } else {
                let opts = lfact::identities::VerifyOptions {
                    n_max,
                    m_max,
                    order,
                    allow_unsafe,
                };
                verify::run(&ids, &opts)
            }
        }
        Command::Series {
            what,
            order,
            a,
            lambda,
            json,
            allow_unsafe,
        } => series::run(&what, order, &a, lambda, json, allow_unsafe),
        Command::Bijection { n, lambda, sigma } => bijection::run(n, lambda, sigma.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            if !e.message.is_empty() {
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}
