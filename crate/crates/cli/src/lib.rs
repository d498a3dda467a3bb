//! The `tracedet` command line: `det`, `bench` and `verify`.
//!
//! Exit codes: 0 success, 2 parse or I/O failure, 3 field guard or
//! enumeration cap violation, 4 disagreement between algorithms or a failed
//! identity check.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use tracedet_core::oracle::{gauss_det, leibniz_det};
use tracedet_core::{
    build_det_circuit, det_from_traces_dp, det_from_traces_partition_sum, io as mio,
    power_traces_sequential, power_traces_squaring, Error, Field, FieldSpec, Matrix, PrimeField,
    Rationals,
};

pub mod bench;
pub mod verify;

#[derive(Debug, Parser)]
#[command(
    name = "tracedet",
    version,
    about = "Exact determinants from traces of matrix powers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the determinant of the matrix in INPUT (`-` for stdin).
    Det(RunConfig),
    /// Time algorithms on seeded random matrices and print CSV.
    Bench(RunConfig),
    /// Run the identity suites.
    Verify(RunConfig),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Gauss,
    TraceDp,
    TracePartition,
    Leibniz,
    Circuit,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Gauss => "gauss",
            Algo::TraceDp => "trace-dp",
            Algo::TracePartition => "trace-partition",
            Algo::Leibniz => "leibniz",
            Algo::Circuit => "circuit",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Algorithm; `det` defaults to trace-dp, `bench` to trace-dp and gauss.
    #[arg(long, value_enum)]
    pub algo: Option<Algo>,
    /// `rational` or `mod:P` with P prime.
    #[arg(long, default_value = "rational")]
    pub field: String,
    /// Size of the worker pool (default: one per core).
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated matrix sizes for `bench`.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
    /// Also compute the determinant by Gaussian elimination and fail on mismatch.
    #[arg(long)]
    pub check: bool,
    /// Write the determinant circuit for the input size to PATH.
    #[arg(long, value_name = "PATH")]
    pub dump_circuit: Option<PathBuf>,
    pub input: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Core(#[from] Error),
    #[error("check failed: {algo} gives {got}, gauss gives {expected}")]
    Mismatch {
        algo: &'static str,
        got: String,
        expected: String,
    },
    #[error("identity {identity} failed (seed {seed})")]
    IdentityFailed { identity: String, seed: u64 },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Core(e) => match e {
                Error::DomainTooSmall { .. }
                | Error::CapExceeded { .. }
                | Error::NotPrime(_)
                | Error::DivisionByZero => 3,
                _ => 2,
            },
            CliError::Mismatch { .. } | CliError::IdentityFailed { .. } => 4,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Runs a parsed command line and returns what it prints on stdout.
pub fn run(cli: &Cli) -> CliResult<String> {
    let config = match &cli.command {
        Command::Det(c) | Command::Bench(c) | Command::Verify(c) => c,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = config.workers {
        pool = pool.num_threads(k as usize);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    pool.install(|| match &cli.command {
        Command::Det(c) => cmd_det(c),
        Command::Bench(c) => bench::cmd_bench(c),
        Command::Verify(c) => verify::cmd_verify(c),
    })
}

pub fn parse_field(text: &str) -> CliResult<FieldSpec> {
    match text.parse::<FieldSpec>() {
        Ok(spec) => Ok(spec),
        Err(e @ Error::NotPrime(_)) => Err(e.into()),
        Err(_) => Err(CliError::Usage(format!(
            "invalid field {text:?}: expected `rational` or `mod:P`"
        ))),
    }
}

fn read_input(path: &Path) -> CliResult<String> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(io_err)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

pub fn cmd_det(config: &RunConfig) -> CliResult<String> {
    let path = config
        .input
        .as_deref()
        .ok_or_else(|| CliError::Usage("det needs an INPUT file".into()))?;
    let text = read_input(path)?;
    let algo = config.algo.unwrap_or(Algo::TraceDp);
    match parse_field(&config.field)? {
        FieldSpec::Rational => det_in_field(Rationals, &text, algo, config),
        FieldSpec::PrimeModular(p) => det_in_field(PrimeField::new(p)?, &text, algo, config),
    }
}

fn det_in_field<F: Field>(
    field: F,
    text: &str,
    algo: Algo,
    config: &RunConfig,
) -> CliResult<String> {
    let a = mio::parse_matrix(&field, text)?;
    if let Some(path) = &config.dump_circuit {
        write_circuit(a.n(), path)?;
    }
    let value = compute_det(&a, algo)?;
    if config.check {
        let (reference, other) = if algo == Algo::Gauss {
            (compute_det(&a, Algo::TraceDp)?, Algo::TraceDp)
        } else {
            (gauss_det(&a), algo)
        };
        if reference != value {
            let (got, expected) = if algo == Algo::Gauss {
                (reference, value.clone())
            } else {
                (value.clone(), reference)
            };
            return Err(CliError::Mismatch {
                algo: other.name(),
                got: field.format(&got),
                expected: field.format(&expected),
            });
        }
    }
    Ok(format!("{}\n", field.format(&value)))
}

fn write_circuit(n: usize, path: &Path) -> CliResult<()> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = fs::File::create(path).map_err(io_err)?;
    let mut out = io::BufWriter::new(file);
    build_det_circuit(n).dump(&mut out).map_err(io_err)?;
    io::Write::flush(&mut out).map_err(io_err)
}

/// Power traces for the trace routes: repeated squaring when the worker pool
/// has more than one thread, iterated multiplication otherwise. Both give
/// identical values.
fn traces_for<F: Field>(a: &Matrix<F>) -> tracedet_core::TraceVector<F> {
    if rayon::current_num_threads() > 1 {
        power_traces_squaring(a)
    } else {
        power_traces_sequential(a)
    }
}

/// The determinant call timed by `bench`.
pub fn compute_det<F: Field>(a: &Matrix<F>, algo: Algo) -> CliResult<F::Elem> {
    let guard = || a.field().spec().check_trace_formula(a.n());
    Ok(match algo {
        Algo::Gauss => gauss_det(a),
        Algo::Leibniz => leibniz_det(a)?,
        Algo::TraceDp => {
            guard()?;
            det_from_traces_dp(&traces_for(a))?
        }
        Algo::TracePartition => {
            guard()?;
            det_from_traces_partition_sum(&traces_for(a))?
        }
        Algo::Circuit => {
            guard()?;
            build_det_circuit(a.n()).evaluate_parallel(a)?
        }
    })
}

/// Appends one line per item to `out`.
pub(crate) fn push_line(out: &mut String, line: impl std::fmt::Display) {
    let _ = writeln!(out, "{line}");
}
