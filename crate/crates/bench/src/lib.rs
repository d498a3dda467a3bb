//! Shared fixtures for the criterion benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tracedet_core::{Matrix, PrimeField, Rationals};

/// Prime used for the modular benchmarks; larger than every benchmarked `n`.
pub const BENCH_PRIME: u64 = 1_000_003;

pub fn modular(n: usize, seed: u64) -> Matrix<PrimeField> {
    let field = PrimeField::new(BENCH_PRIME).expect("prime");
    Matrix::random(field, n, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn rational(n: usize, seed: u64) -> Matrix<Rationals> {
    Matrix::random(Rationals, n, &mut ChaCha8Rng::seed_from_u64(seed))
}
