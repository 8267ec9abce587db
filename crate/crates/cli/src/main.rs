//! `atlas` — tables and verification for binary BCH codes of length 2^m + 1.
//!
//! Exit codes: 0 success / verification pass; 1 verification mismatch;
//! 2 usage or domain error; 3 I/O error.

mod emit;
mod tables;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use atlas_core::Scheme;
use emit::Format;
use tables::DimsSource;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<atlas_core::Error> for CliError {
    fn from(e: atlas_core::Error) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum SchemeArg {
    Ia1,
    Ia2,
}

#[derive(Parser)]
#[command(
    name = "atlas",
    version,
    about = "Coset-leader structure, closed-form parameters, and generator polynomials \
             of binary BCH codes of length n = 2^m + 1",
    after_help = "Exit codes: 0 ok, 1 verification mismatch, 2 usage, 3 I/O.\n\
                  ATLAS_WORKERS overrides the verify worker-thread count."
)]
struct Cli {
    /// Output format for tables and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write output to this path instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List coset leaders of n = 2^m + 1 in a residue range (default: all).
    Leaders {
        #[arg(long)]
        m: u32,
        /// Lowest residue scanned (default 1).
        #[arg(long)]
        lo: Option<u64>,
        /// Highest residue scanned (default n - 1).
        #[arg(long)]
        hi: Option<u64>,
    },
    /// The five largest coset leaders and their coset sizes (closed form).
    Deltas {
        #[arg(long)]
        m: u32,
    },
    /// Dimension, Bose distance, and distance bound for one (m, delta, b).
    Dims {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        delta: u64,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        b: u8,
        /// Closed-form row value only.
        #[arg(long, conflicts_with_all = ["brute", "both"])]
        closed: bool,
        /// Brute-force orbit value only.
        #[arg(long, conflicts_with = "both")]
        brute: bool,
        /// Both sources, one row each (default).
        #[arg(long)]
        both: bool,
    },
    /// Materialize a self-similar interval partition with its index algebra.
    Partition {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long)]
        t: u32,
    },
    /// Generator polynomial of the code (m, delta, b) over GF(2^{2m}).
    Genpoly {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        delta: u64,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        b: u8,
    },
    /// Sweep one closed-form theorem against the brute-force oracle.
    Verify {
        /// Theorem id: 3.1, 3.5, 3.7, 4.1, 4.5, 4.7, 5.1, 5.2, 5.4, or 2.4-band.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        m: u32,
        /// Force a fixed-seed uniform sample of this many cases.
        #[arg(long)]
        sample: Option<u64>,
    },
}

fn write_sink(rendered: &str, out: &Option<PathBuf>) -> Result<(), CliError> {
    match out {
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(rendered.as_bytes())?;
            lock.flush()?;
        }
        Some(path) => {
            std::fs::write(path, rendered.as_bytes())?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Leaders { m, lo, hi } => {
            let rows = tables::leaders_rows(m, lo, hi)?;
            emit::write_table(&rows, cli.format, &cli.out)?;
        }
        Command::Deltas { m } => {
            let rows = tables::deltas_rows(m)?;
            emit::write_table(&rows, cli.format, &cli.out)?;
        }
        Command::Dims { m, delta, b, closed, brute, both: _ } => {
            let source = match (closed, brute) {
                (true, false) => DimsSource::Closed,
                (false, true) => DimsSource::Brute,
                _ => DimsSource::Both,
            };
            let rows = tables::dims_rows(m, delta, b, source)?;
            emit::write_table(&rows, cli.format, &cli.out)?;
        }
        Command::Partition { scheme, t } => {
            let scheme = match scheme {
                SchemeArg::Ia1 => Scheme::Ia1,
                SchemeArg::Ia2 => Scheme::Ia2,
            };
            let rows = tables::partition_rows(scheme, t)?;
            emit::write_table(&rows, cli.format, &cli.out)?;
        }
        Command::Genpoly { m, delta, b } => {
            let rows = tables::genpoly_rows(m, delta, b)?;
            emit::write_table(&rows, cli.format, &cli.out)?;
        }
        Command::Verify { theorem, m, sample } => {
            let report = verify::run_verify(&theorem, m, sample)?;
            eprintln!("{}", report.summary_line());
            for line in report.detail_lines(10) {
                eprintln!("{line}");
            }
            write_sink(&report.render(cli.format), &cli.out)?;
            if !report.pass() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("I/O error: {e}");
            ExitCode::from(3)
        }
    }
}
