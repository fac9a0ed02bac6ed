//! `carleman`: computation and verification CLI for the correction-series
//! refinements of Carleman's inequality.
//!
//! Exit codes are a stable contract for CI use:
//! - 0: every assertion in the run passed,
//! - 1: a mathematical assertion failed (or quadrature failed to converge),
//! - 2: usage or configuration error.
//!
//! All behavior is driven by flags (no environment variables), and output is
//! deterministic for a fixed configuration: running any subcommand twice
//! yields byte-identical files.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use carleman_core::gquad::Precision;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "carleman",
    version,
    about = "Exact coefficients, quadrature checks, and positivity certificates for refined Carleman inequalities"
)]
struct Cli {
    /// Output format for machine-readable results.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Write primary output here instead of stdout (a directory for `report`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Working precision, in significant decimal digits (>= 25).
    #[arg(long, global = true, default_value_t = 34)]
    digits: usize,

    /// Absolute quadrature tolerance.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a coefficient table (exact values plus decimal renderings).
    Coeffs {
        /// Which sequence: b or d.
        #[arg(long)]
        kind: String,
        /// Number of coefficients.
        #[arg(long)]
        count: usize,
        /// Significant digits for the decimal column.
        #[arg(long, default_value_t = 12)]
        decimal_digits: usize,
    },
    /// Validate the kernel integral identities by quadrature.
    CheckIntegrals {
        /// Largest moment index to cross-check against the b table.
        #[arg(long, default_value_t = 20)]
        k_max: usize,
    },
    /// Exact grid sweep of S_m - sigma_m over log-spaced rational x.
    Verify {
        #[arg(long, default_value_t = 20)]
        m_max: usize,
        /// Left grid endpoint (rational like 1/1000, or decimal).
        #[arg(long, default_value = "1/1000")]
        x_min: String,
        /// Right grid endpoint.
        #[arg(long, default_value = "1000")]
        x_max: String,
        #[arg(long, default_value_t = 200)]
        points: usize,
        /// Evaluate in floating point (reports only; exact is the default).
        #[arg(long, conflicts_with = "exact")]
        float: bool,
        /// Exact rational evaluation (the default).
        #[arg(long)]
        exact: bool,
    },
    /// Build positivity certificates for the series difference.
    Certify {
        /// Certify a single order.
        #[arg(long, conflicts_with = "m_max")]
        m: Option<usize>,
        /// Certify every order from 1 through this bound.
        #[arg(long)]
        m_max: Option<usize>,
    },
    /// Check the integral decompositions of the partial sums.
    Identities {
        /// Orders to check, comma separated.
        #[arg(long, default_value = "2,3,8,10")]
        m_list: String,
        /// Evaluation points, comma separated.
        #[arg(long, default_value = "0.25,1,2,100")]
        x_list: String,
    },
    /// Evaluate both sides of the refined inequalities on a sequence.
    Carleman {
        /// Sequence family: power:P, geom:R, or file:PATH.
        #[arg(long)]
        family: String,
        /// Truncation length.
        #[arg(long)]
        terms: usize,
        /// Correction order.
        #[arg(long, default_value_t = 4)]
        m: usize,
        /// Truncations to report, comma separated (default: decades).
        #[arg(long)]
        sweep: Option<String>,
    },
    /// Write the full verification bundle to a directory.
    Report {
        /// Largest order to certify in the bundle.
        #[arg(long, default_value_t = 24)]
        m_max_cert: usize,
    },
}

/// Failure modes with their exit codes.
pub enum Failure {
    /// Bad flags or configuration: exit 2.
    Usage(String),
    /// A mathematical assertion failed: exit 1.
    Check(String),
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }
}

impl From<carleman_core::Error> for Failure {
    fn from(e: carleman_core::Error) -> Self {
        use carleman_core::Error::*;
        match e {
            NonConvergence { .. } | CancellationFailure { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("io error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let precision = match Precision::new(cli.tol, cli.digits) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let ctx = commands::Ctx {
        format: cli.format,
        out: cli.out,
        precision,
    };

    let result = match cli.command {
        Command::Coeffs {
            kind,
            count,
            decimal_digits,
        } => commands::coeffs::run(&ctx, &kind, count, decimal_digits),
        Command::CheckIntegrals { k_max } => commands::integrals::run(&ctx, k_max),
        Command::Verify {
            m_max,
            x_min,
            x_max,
            points,
            float,
            exact: _,
        } => commands::verify::run(&ctx, m_max, &x_min, &x_max, points, float),
        Command::Certify { m, m_max } => {
            let (lo, hi) = match (m, m_max) {
                (Some(m), None) => (m, m),
                (None, Some(mm)) => (1, mm),
                (None, None) => (1, 24),
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            };
            commands::certify::run(&ctx, lo, hi)
        }
        Command::Identities { m_list, x_list } => commands::identities::run(&ctx, &m_list, &x_list),
        Command::Carleman {
            family,
            terms,
            m,
            sweep,
        } => commands::harness::run(&ctx, &family, terms, m, sweep.as_deref()),
        Command::Report { m_max_cert } => commands::report::run(&ctx, m_max_cert),
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
