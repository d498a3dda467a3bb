//! `tracedet bench`: wall-clock scaling of the determinant algorithms.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tracedet_core::{Field, FieldSpec, Matrix, PrimeField, Rationals};

use crate::{compute_det, parse_field, push_line, Algo, CliResult, RunConfig};

pub const DEFAULT_SIZES: [usize; 3] = [64, 128, 256];

/// Stop repeating a measurement once this much time has been spent on it.
const TIME_BUDGET: Duration = Duration::from_millis(300);
const MAX_REPS: usize = 50;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub algo: Algo,
    /// Fastest of the repetitions.
    pub millis: f64,
    pub ops_estimate: u128,
}

impl BenchRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{:.3},{}",
            self.n,
            self.algo.name(),
            self.millis,
            self.ops_estimate
        )
    }
}

pub const CSV_HEADER: &str = "n,algo,millis,ops_estimate";

/// Field operations predicted by the cost model of each algorithm.
pub fn ops_estimate(algo: Algo, n: usize) -> u128 {
    let n = n as u128;
    let log2 = (u128::BITS - n.leading_zeros()) as u128;
    match algo {
        Algo::Gauss => n * n * n,
        Algo::TraceDp => n.pow(4) + n.pow(3),
        Algo::TracePartition => {
            n.pow(4) + tracedet_core::enumerate_partitions(n as usize).len() as u128 * n
        }
        Algo::Leibniz => (1..=n).product::<u128>().saturating_mul(n),
        Algo::Circuit => n.pow(4) * log2 * log2,
    }
}

pub fn cmd_bench(config: &RunConfig) -> CliResult<String> {
    let sizes = config
        .sizes
        .clone()
        .unwrap_or_else(|| DEFAULT_SIZES.to_vec());
    let algos = match config.algo {
        Some(a) => vec![a],
        None => vec![Algo::TraceDp, Algo::Gauss],
    };
    let rows = match parse_field(&config.field)? {
        FieldSpec::Rational => bench_rows(Rationals, &sizes, &algos, config.seed)?,
        FieldSpec::PrimeModular(p) => bench_rows(PrimeField::new(p)?, &sizes, &algos, config.seed)?,
    };
    let mut out = String::new();
    push_line(&mut out, CSV_HEADER);
    for row in rows {
        push_line(&mut out, row.csv());
    }
    Ok(out)
}

/// The matrix used for size `n`: a function of `seed` and `n` only.
pub fn bench_matrix<F: Field>(field: F, n: usize, seed: u64) -> Matrix<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
    Matrix::random(field, n, &mut rng)
}

/// Times the determinant call only; matrix generation is excluded.
pub fn bench_rows<F: Field>(
    field: F,
    sizes: &[usize],
    algos: &[Algo],
    seed: u64,
) -> CliResult<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &n in sizes {
        let a = bench_matrix(field.clone(), n, seed);
        for &algo in algos {
            rows.push(BenchRow {
                n,
                algo,
                millis: time_min(|| compute_det(&a, algo).map(drop))?,
                ops_estimate: ops_estimate(algo, n),
            });
        }
    }
    Ok(rows)
}

fn time_min(mut f: impl FnMut() -> CliResult<()>) -> CliResult<f64> {
    let start = Instant::now();
    let mut best = f64::INFINITY;
    for _ in 0..MAX_REPS {
        let t = Instant::now();
        f()?;
        best = best.min(t.elapsed().as_secs_f64() * 1e3);
        if start.elapsed() >= TIME_BUDGET {
            break;
        }
    }
    Ok(best)
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 || points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let m = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / m;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
