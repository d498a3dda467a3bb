//! Dense square matrices over an exact field.
//!
//! Indices are 0-based. A matrix doubles as the weighted complete directed
//! graph on vertex set `0..n` whose edge `(u, v)` has weight `a[u][v]`.

use rand::RngCore;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;

/// Row count from which [`Matrix::matmul`] splits rows across the rayon pool.
const PAR_ROWS: usize = 32;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    n: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    /// Builds an `n × n` matrix from row-major entries.
    pub fn new(field: F, n: usize, entries: Vec<F::Elem>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: n * n,
                right: entries.len(),
            });
        }
        Ok(Matrix { field, n, entries })
    }

    pub fn from_fn(field: F, n: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { field, n, entries }
    }

    pub fn from_rows(field: F, rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            entries.extend(row.iter().map(|&z| field.from_i64(z)));
        }
        Ok(Matrix { field, n, entries })
    }

    pub fn identity(field: F, n: usize) -> Self {
        let (zero, one) = (field.zero(), field.one());
        Matrix::from_fn(
            field,
            n,
            |i, j| if i == j { one.clone() } else { zero.clone() },
        )
    }

    pub fn zeros(field: F, n: usize) -> Self {
        let zero = field.zero();
        Matrix {
            entries: vec![zero; n * n],
            field,
            n,
        }
    }

    pub fn random(field: F, n: usize, rng: &mut dyn RngCore) -> Self {
        let entries = (0..n * n).map(|_| field.sample(rng)).collect();
        Matrix { field, n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F::Elem) {
        self.entries[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.field.clone(), self.n, |i, j| self.get(j, i).clone())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DomainMismatch {
                left: self.field.spec(),
                right: other.field.spec(),
            });
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Classical cubic product. Every entry is an inner product summed in
    /// ascending inner index, so the result does not depend on how rows are
    /// distributed over worker threads.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.n;
        let cols = other.transpose();
        let mut entries = vec![self.field.zero(); n * n];
        let fill_row = |(i, out): (usize, &mut [F::Elem])| {
            let row = self.row(i);
            for (j, slot) in out.iter_mut().enumerate() {
                *slot = self.field.dot(row, cols.row(j));
            }
        };
        if n >= PAR_ROWS {
            entries.par_chunks_mut(n).enumerate().for_each(fill_row);
        } else if n > 0 {
            entries.chunks_mut(n).enumerate().for_each(fill_row);
        }
        Ok(Matrix {
            field: self.field.clone(),
            n,
            entries,
        })
    }

    pub fn trace(&self) -> F::Elem {
        self.field.sum((0..self.n).map(|i| self.get(i, i)))
    }

    /// `tr(self · other)` in `O(n²)` without forming the product.
    pub fn product_trace(&self, other: &Self) -> Result<F::Elem> {
        self.check_compatible(other)?;
        let cols = other.transpose();
        let diag: Vec<F::Elem> = (0..self.n)
            .map(|i| self.field.dot(self.row(i), cols.row(i)))
            .collect();
        Ok(self.field.sum(&diag))
    }

    /// Restriction to the rows and columns in `indices`, which must be
    /// strictly increasing and in range.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<Self> {
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidIndexSet(format!(
                    "indices must be strictly increasing, got {indices:?}"
                )));
            }
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.n) {
            return Err(Error::InvalidIndexSet(format!(
                "index {bad} out of range for dimension {}",
                self.n
            )));
        }
        Ok(Matrix::from_fn(
            self.field.clone(),
            indices.len(),
            |i, j| self.get(indices[i], indices[j]).clone(),
        ))
    }

    /// `A ⊗ J_t`: every entry blown up to a `t × t` constant block. Pair
    /// index `(i, a)` is linearized as `i * t + a`.
    pub fn kron_all_ones(&self, t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidArgument(
                "blow-up factor t must be >= 1".into(),
            ));
        }
        Ok(Matrix::from_fn(self.field.clone(), self.n * t, |r, c| {
            self.get(r / t, c / t).clone()
        }))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let n = self.n;
        for j in 0..n {
            self.entries.swap(a * n + j, b * n + j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(rows: &[Vec<i64>]) -> Matrix<Rationals> {
        Matrix::from_rows(Rationals, rows).unwrap()
    }

    /// Triple loop straight from the definition.
    fn naive_product<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        let f = a.field().clone();
        Matrix::from_fn(f.clone(), a.n(), |i, j| {
            let mut acc = f.zero();
            for k in 0..a.n() {
                acc = f.add(&acc, &f.mul(a.get(i, k), b.get(k, j)));
            }
            acc
        })
    }

    #[test]
    fn matmul_examples() {
        let a = q(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(a.matmul(&a).unwrap(), q(&[vec![7, 10], vec![15, 22]]));
        assert_eq!(a.matmul(&a).unwrap().trace(), Rationals.from_i64(29));

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = Matrix::random(Rationals, 5, &mut rng);
        assert_eq!(r.matmul(&Matrix::identity(Rationals, 5)).unwrap(), r);

        let empty = Matrix::zeros(Rationals, 0);
        assert_eq!(empty.matmul(&empty).unwrap().n(), 0);
        assert_eq!(empty.trace(), Rationals.from_i64(0));
    }

    #[test]
    fn matmul_matches_naive_across_threshold() {
        let f = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in [1, 7, PAR_ROWS - 1, PAR_ROWS, 45] {
            let a = Matrix::random(f, n, &mut rng);
            let b = Matrix::random(f, n, &mut rng);
            assert_eq!(a.matmul(&b).unwrap(), naive_product(&a, &b));
        }
    }

    #[test]
    fn matmul_rejects_mismatch() {
        let a = Matrix::zeros(Rationals, 2);
        let b = Matrix::zeros(Rationals, 3);
        assert!(matches!(a.matmul(&b), Err(Error::DimensionMismatch { .. })));
        let c = Matrix::zeros(PrimeField::new(5).unwrap(), 2);
        let d = Matrix::zeros(PrimeField::new(7).unwrap(), 2);
        assert!(matches!(c.matmul(&d), Err(Error::DomainMismatch { .. })));
        assert!(Matrix::new(Rationals, 2, vec![Rationals.zero(); 3]).is_err());
    }

    #[test]
    fn trace_examples() {
        assert_eq!(q(&[vec![1, 2], vec![3, 4]]).trace(), Rationals.from_i64(5));
        for n in 0..6 {
            assert_eq!(
                Matrix::identity(Rationals, n).trace(),
                Rationals.from_i64(n as i64)
            );
        }
    }

    #[test]
    fn principal_submatrix_examples() {
        let a = q(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(a.principal_submatrix(&[]).unwrap().n(), 0);
        assert_eq!(a.principal_submatrix(&[0, 1]).unwrap(), a);
        assert_eq!(a.principal_submatrix(&[1]).unwrap(), q(&[vec![4]]));
        assert!(a.principal_submatrix(&[2]).is_err());
        assert!(a.principal_submatrix(&[1, 1]).is_err());
        assert!(a.principal_submatrix(&[1, 0]).is_err());
    }

    #[test]
    fn kron_examples() {
        let five = q(&[vec![5]]);
        assert_eq!(
            five.kron_all_ones(3).unwrap(),
            q(&[vec![5; 3], vec![5; 3], vec![5; 3]])
        );
        let a = q(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(a.kron_all_ones(1).unwrap(), a);
        assert!(matches!(a.kron_all_ones(0), Err(Error::InvalidArgument(_))));
        let b = a.kron_all_ones(2).unwrap();
        // row (1, 0) -> 2, column (0, 1) -> 1
        assert_eq!(b.get(2, 1), &Rationals.from_i64(3));
    }

    #[test]
    fn kron_trace_scales_by_t() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = Rationals;
        for n in 0..5 {
            let a = Matrix::random(f, n, &mut rng);
            for t in 1..=4usize {
                let blown = a.kron_all_ones(t).unwrap();
                assert_eq!(blown.trace(), f.mul(&f.from_i64(t as i64), &a.trace()));
            }
        }
    }

    #[test]
    fn diagonal_picks_recover_a() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let f = PrimeField::new(101).unwrap();
        let (n, t) = (3, 3);
        let a = Matrix::random(f, n, &mut rng);
        let blown = a.kron_all_ones(t).unwrap();
        for choice in 0..t.pow(n as u32) {
            let picks: Vec<usize> = (0..n)
                .map(|i| i * t + (choice / t.pow(i as u32)) % t)
                .collect();
            assert_eq!(blown.principal_submatrix(&picks).unwrap(), a);
        }
    }

    #[test]
    fn product_trace_matches_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let a = Matrix::random(Rationals, 6, &mut rng);
        let b = Matrix::random(Rationals, 6, &mut rng);
        assert_eq!(a.product_trace(&b).unwrap(), a.matmul(&b).unwrap().trace());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn trace_is_cyclic(seed in any::<u64>(), n in 0usize..8) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let a = Matrix::random(Rationals, n, &mut rng);
                let b = Matrix::random(Rationals, n, &mut rng);
                prop_assert_eq!(
                    a.matmul(&b).unwrap().trace(),
                    b.matmul(&a).unwrap().trace()
                );
            }
        }
    }
}
