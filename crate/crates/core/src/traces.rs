//! Traces of matrix powers `tr(A^ℓ)` for `1 ≤ ℓ ≤ n`.

use rayon::prelude::*;

use crate::field::Field;
use crate::matrix::Matrix;

/// The sequence `tr(A), tr(A²), …, tr(Aⁿ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceVector<F: Field> {
    field: F,
    traces: Vec<F::Elem>,
}

impl<F: Field> TraceVector<F> {
    /// Wraps arbitrary values; the determinant routes accept any sequence,
    /// realizable by a matrix or not.
    pub fn new(field: F, traces: Vec<F::Elem>) -> Self {
        TraceVector { field, traces }
    }

    pub fn n(&self) -> usize {
        self.traces.len()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn traces(&self) -> &[F::Elem] {
        &self.traces
    }

    /// `tr(A^ℓ)` for `1 ≤ ℓ ≤ n`.
    pub fn get(&self, ell: usize) -> &F::Elem {
        &self.traces[ell - 1]
    }
}

/// Forms `A, A², …, Aⁿ` by repeatedly multiplying `A` onto the running
/// power. `O(n⁴)` with the cubic product.
pub fn power_traces_sequential<F: Field>(a: &Matrix<F>) -> TraceVector<F> {
    let n = a.n();
    let field = a.field().clone();
    if n <= 1 {
        return TraceVector::new(field, a.entries().to_vec());
    }
    let mut traces = Vec::with_capacity(n);
    let mut power = a.clone();
    traces.push(power.trace());
    for _ in 2..=n {
        power = power.matmul(a).expect("same dimension and field");
        traces.push(power.trace());
    }
    TraceVector::new(field, traces)
}

/// Computes `A^(2^j)` by squaring, then each `A^ℓ` as a balanced product of
/// the squares selected by the binary digits of `ℓ`. The per-`ℓ` products
/// are independent and run on the rayon pool; the output is identical to
/// [`power_traces_sequential`].
pub fn power_traces_squaring<F: Field>(a: &Matrix<F>) -> TraceVector<F> {
    let n = a.n();
    let field = a.field().clone();
    if n <= 1 {
        return TraceVector::new(field, a.entries().to_vec());
    }
    let mut squares = vec![a.clone()];
    while 1usize << squares.len() <= n {
        let last = squares.last().unwrap();
        squares.push(last.matmul(last).expect("same dimension and field"));
    }
    let traces = (1..=n)
        .into_par_iter()
        .map(|ell| {
            let factors: Vec<&Matrix<F>> = (0..squares.len())
                .filter(|j| ell >> j & 1 == 1)
                .map(|j| &squares[j])
                .collect();
            if let [single] = factors.as_slice() {
                return single.trace();
            }
            let mid = factors.len() / 2;
            let left = balanced_product(&factors[..mid]);
            let right = balanced_product(&factors[mid..]);
            left.product_trace(&right)
                .expect("same dimension and field")
        })
        .collect();
    TraceVector::new(field, traces)
}

fn balanced_product<F: Field>(factors: &[&Matrix<F>]) -> Matrix<F> {
    match factors {
        [] => unreachable!("products have at least one factor"),
        [single] => (*single).clone(),
        _ => {
            let mid = factors.len() / 2;
            balanced_product(&factors[..mid])
                .matmul(&balanced_product(&factors[mid..]))
                .expect("same dimension and field")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ints<F: Field>(f: &F, xs: &[i64]) -> Vec<F::Elem> {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn examples() {
        let f = Rationals;
        let a = Matrix::from_rows(f, &[vec![1, 2], vec![3, 4]]).unwrap();
        let nil = Matrix::from_rows(f, &[vec![0, 1], vec![0, 0]]).unwrap();
        for compute in [power_traces_sequential::<Rationals>, power_traces_squaring] {
            assert_eq!(
                compute(&Matrix::identity(f, 3)).traces(),
                ints(&f, &[3, 3, 3])
            );
            assert_eq!(
                compute(&Matrix::identity(f, 4)).traces(),
                ints(&f, &[4, 4, 4, 4])
            );
            assert_eq!(compute(&a).traces(), ints(&f, &[5, 29]));
            assert_eq!(compute(&nil).traces(), ints(&f, &[0, 0]));
            assert_eq!(compute(&Matrix::zeros(f, 0)).n(), 0);
            let one = Matrix::from_rows(f, &[vec![-7]]).unwrap();
            assert_eq!(compute(&one).traces(), ints(&f, &[-7]));
        }
    }

    #[test]
    fn first_trace_is_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = Matrix::random(Rationals, 6, &mut rng);
        assert_eq!(power_traces_sequential(&a).get(1), &a.trace());
    }

    #[test]
    fn schedules_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let gf = PrimeField::new(101).unwrap();
        for n in 0..=16 {
            let a = Matrix::random(Rationals, n, &mut rng);
            assert_eq!(
                power_traces_squaring(&a),
                power_traces_sequential(&a),
                "n={n}"
            );
            let b = Matrix::random(gf, n, &mut rng);
            assert_eq!(
                power_traces_squaring(&b),
                power_traces_sequential(&b),
                "n={n}"
            );
        }
    }

    #[test]
    fn directed_cycle_counts_closed_walks() {
        let f = Rationals;
        for n in 1..=6usize {
            let cycle = Matrix::from_fn(f, n, |i, j| f.from_i64(((i + 1) % n == j) as i64));
            // Pad the dimension so traces up to ℓ = 12 are produced.
            let big = Matrix::from_fn(f, 12, |i, j| {
                if i < n && j < n {
                    cycle.get(i, j).clone()
                } else {
                    f.zero()
                }
            });
            let t = power_traces_sequential(&big);
            for ell in 1..=12 {
                let expected = if ell % n == 0 { n as i64 } else { 0 };
                assert_eq!(t.get(ell), &f.from_i64(expected), "n={n} ell={ell}");
            }
        }
    }

    #[test]
    fn similarity_invariance() {
        let f = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 1..=5 {
            let a = Matrix::random(f, n, &mut rng);
            let (p, p_inv) = loop {
                let p = Matrix::random(f, n, &mut rng);
                if let Some(inv) = invert(&p) {
                    break (p, inv);
                }
            };
            let similar = p.matmul(&a).unwrap().matmul(&p_inv).unwrap();
            assert_eq!(
                power_traces_sequential(&similar),
                power_traces_sequential(&a)
            );
        }
    }

    /// Gauss-Jordan inverse, `None` when singular.
    fn invert(m: &Matrix<Rationals>) -> Option<Matrix<Rationals>> {
        let f = Rationals;
        let n = m.n();
        let mut a = m.clone();
        let mut inv = Matrix::identity(f, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !f.is_zero(a.get(r, col)))?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let scale = f.inv(a.get(col, col)).unwrap();
            for j in 0..n {
                a.set(col, j, f.mul(a.get(col, j), &scale));
                inv.set(col, j, f.mul(inv.get(col, j), &scale));
            }
            for r in (0..n).filter(|&r| r != col) {
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    a.set(r, j, f.sub(a.get(r, j), &f.mul(&factor, a.get(col, j))));
                    inv.set(r, j, f.sub(inv.get(r, j), &f.mul(&factor, inv.get(col, j))));
                }
            }
        }
        Some(inv)
    }
}
