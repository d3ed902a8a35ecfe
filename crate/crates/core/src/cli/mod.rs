//! Command-line front end. Every command produces a [`CsvTable`]; `run`
//! parses arguments, writes the table and maps errors to exit codes
//! (0 success, 2 usage or parse error, 3 semantic rejection).

mod commands;
mod csv;
mod spec;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{
    cmd_check, cmd_eval, cmd_grid, cmd_region, cmd_sample, cmd_table1, BoundName, Measure,
    PairKind, SAMPLE_AUDIT_N,
};
pub use csv::{format_real, Cell, CsvTable};
pub use spec::CopulaSpec;

use crate::error::Error;
use crate::quadrature::DEFAULT_PANELS;

#[derive(Debug, Parser)]
#[command(
    name = "copula-bounds",
    version,
    about = "Local bounds of copulas with fixed footrule or Gini's gamma, as CSV"
)]
pub struct Cli {
    /// Write the CSV here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MeasureArg {
    Phi,
    Gamma,
    Beta,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BoundArg {
    FLower,
    FUpper,
    GLower,
    GUpper,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PairArg {
    PhiBeta,
    GammaBeta,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// A measure of concordance of one copula.
    Eval {
        #[arg(value_enum)]
        measure: MeasureArg,
        spec: String,
        /// Simpson panels for the integral measures.
        #[arg(long = "n", default_value_t = DEFAULT_PANELS)]
        n: usize,
    },
    /// A bound tabulated on an (n+1)x(n+1) grid with its region labels.
    Grid {
        #[arg(value_enum)]
        bound: BoundArg,
        #[arg(allow_negative_numbers = true)]
        param: f64,
        n_pos: Option<usize>,
        #[arg(long = "n", conflicts_with = "n_pos")]
        n: Option<usize>,
    },
    /// Effectiveness of the footrule and gamma bounds.
    Table1 {
        n_pos: Option<usize>,
        #[arg(long = "n", conflicts_with = "n_pos")]
        n: Option<usize>,
    },
    /// Boundary curves of the attainable (measure, beta) pairs.
    Region {
        #[arg(value_enum)]
        pair: PairArg,
        step_pos: Option<f64>,
        #[arg(long = "step", conflicts_with = "step_pos")]
        step: Option<f64>,
    },
    /// Random points from a copula; quasi-copulas are rejected.
    Sample {
        spec: String,
        count_pos: Option<usize>,
        seed_pos: Option<u64>,
        #[arg(long = "n", conflicts_with = "count_pos")]
        count: Option<usize>,
        #[arg(long = "seed", conflicts_with = "seed_pos")]
        seed: Option<u64>,
    },
    /// Grid audit of the quasi-copula and copula axioms.
    Check {
        spec: String,
        n_pos: Option<usize>,
        tol_pos: Option<f64>,
        #[arg(long = "n", conflicts_with = "n_pos")]
        n: Option<usize>,
        #[arg(long = "tol", conflicts_with = "tol_pos")]
        tol: Option<f64>,
    },
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidSpec(_)
        | Error::PointOutOfSquare { .. }
        | Error::BadRectangle { .. } => 2,
        _ => 3,
    }
}

fn execute(cmd: Command) -> crate::Result<CsvTable> {
    match cmd {
        Command::Eval { measure, spec, n } => {
            let m = match measure {
                MeasureArg::Phi => Measure::Phi,
                MeasureArg::Gamma => Measure::Gamma,
                MeasureArg::Beta => Measure::Beta,
            };
            cmd_eval(m, &spec, n)
        }
        Command::Grid {
            bound,
            param,
            n_pos,
            n,
        } => {
            let b = match bound {
                BoundArg::FLower => BoundName::FLower,
                BoundArg::FUpper => BoundName::FUpper,
                BoundArg::GLower => BoundName::GLower,
                BoundArg::GUpper => BoundName::GUpper,
            };
            cmd_grid(b, param, n_pos.or(n).unwrap_or(100))
        }
        Command::Table1 { n_pos, n } => cmd_table1(n_pos.or(n).unwrap_or(DEFAULT_PANELS)),
        Command::Region {
            pair,
            step_pos,
            step,
        } => {
            let k = match pair {
                PairArg::PhiBeta => PairKind::PhiBeta,
                PairArg::GammaBeta => PairKind::GammaBeta,
            };
            cmd_region(k, step_pos.or(step).unwrap_or(0.05))
        }
        Command::Sample {
            spec,
            count_pos,
            seed_pos,
            count,
            seed,
        } => cmd_sample(
            &spec,
            count_pos.or(count).unwrap_or(1000),
            seed_pos.or(seed).unwrap_or(0),
        ),
        Command::Check {
            spec,
            n_pos,
            tol_pos,
            n,
            tol,
        } => cmd_check(
            &spec,
            n_pos.or(n).unwrap_or(200),
            tol_pos.or(tol).unwrap_or(1e-9),
        ),
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let table = match execute(cli.command) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let text = table.render();
    let written = match &cli.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    match written {
        Ok(()) => 0,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}
