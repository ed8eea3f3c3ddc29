//! The `argand` command-line tool.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 invalid matrix,
//! 4 not a perfect entangler, 5 I/O failure, 1 internal inconsistency.

pub mod gates;
pub mod report;
pub mod svg;
pub mod sweep;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::error::Error;
use crate::oracle::SampleConfig;
use crate::DEFAULT_TOL;
use gates::{parse_coords, GateSpec};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("not a perfect entangler")]
    NotPerfectEntangler,
    #[error("{0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::InvalidMatrix(_) => 3,
            CliError::NotPerfectEntangler => 4,
            CliError::Io(_) => 5,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPerfectEntangler => CliError::NotPerfectEntangler,
            Error::NotUnitary(_) => CliError::InvalidMatrix(e.to_string()),
            Error::EmptySample => CliError::Usage(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "argand",
    version,
    about = "Nonlocal analysis of two-qubit gates via the Argand diagram of squared eigenvalues"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GateArgs {
    /// Named gate: I, CNOT, ISWAP, SWAP, SQRT_SWAP, SQRT_SWAP_DAG, SQRT_ISWAP, M_SQRT_ISWAP
    #[arg(long, conflicts_with_all = ["coords", "matrix"])]
    pub gate: Option<String>,
    /// Cartan coordinates `c1,c2,c3`
    #[arg(long, allow_hyphen_values = true, conflicts_with = "matrix")]
    pub coords: Option<String>,
    /// Read coordinates (and --step) as multiples of π
    #[arg(long)]
    pub pi_units: bool,
    /// JSON file `{"matrix": [[[re, im] x4] x4]}`
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Tolerance for plane, face and region membership
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

impl GateArgs {
    pub fn spec(&self) -> Result<GateSpec, CliError> {
        if let Some(name) = &self.gate {
            return Ok(GateSpec::Named(name.parse()?));
        }
        if let Some(s) = &self.coords {
            return Ok(GateSpec::Coords {
                values: parse_coords(s)?,
                pi_units: self.pi_units,
            });
        }
        if let Some(p) = &self.matrix {
            return Ok(GateSpec::Matrix(p.clone()));
        }
        Err(CliError::Usage("one of --gate, --coords, --matrix is required".into()))
    }

    fn tol(&self) -> Result<f64, CliError> {
        check_tol(self.tol)
    }
}

fn check_tol(tol: f64) -> Result<f64, CliError> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(CliError::Usage(format!("--tol must be positive, got {tol}")))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full JSON report: coordinates, chords, measures, region, product-state pairs
    Analyze(GateArgs),
    /// Product-state pairs mapped to maximally entangled states, with verification
    States(GateArgs),
    /// SVG Argand diagram of the squared eigenvalues
    Argand {
        #[command(flatten)]
        gate: GateArgs,
        /// Output file (standard output if absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV atlas over a grid of the canonical chamber
    Sweep {
        /// Grid step, in radians or with --pi-units in multiples of π
        #[arg(long)]
        step: f64,
        #[arg(long)]
        pi_units: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Compare chord, matrix and Monte Carlo entangling power
    Verify {
        #[command(flatten)]
        gate: GateArgs,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| CliError::Io(e.to_string())),
    }
}

/// Runs one parsed command, writing results to `stdout` or to `--out`.
pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Analyze(args) => {
            let gate = args.spec()?.resolve()?;
            let r = report::analyze(&gate, args.tol()?)?;
            emit(&None, &report::to_json(&r), stdout)
        }
        Command::States(args) => {
            let gate = args.spec()?.resolve()?;
            let r = report::states(&gate, args.tol()?)?;
            emit(&None, &report::to_json(&r), stdout)
        }
        Command::Argand { gate, out } => {
            let g = gate.spec()?.resolve()?;
            emit(out, &svg::render(&g.coords, &g.label), stdout)
        }
        Command::Sweep { step, pi_units, out, tol } => {
            let step = if *pi_units { step * std::f64::consts::PI } else { *step };
            let csv = sweep::sweep_csv(step, check_tol(*tol)?)?;
            emit(out, &csv, stdout)
        }
        Command::Verify { gate, samples, seed } => {
            let g = gate.spec()?.resolve()?;
            let cfg = SampleConfig::new(*samples, *seed).map_err(CliError::from)?;
            let r = report::verify(&g, &cfg)?;
            emit(&None, &report::to_json(&r), stdout)
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match execute(&cli, &mut lock) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("argand: {e}");
            e.exit_code()
        }
    }
}
