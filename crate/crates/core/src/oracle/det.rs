//! Reference determinants: Leibniz permutation sum, Gaussian elimination and
//! k-partial determinants (sums of principal minors).

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Default dimension cap for the `n!`-term Leibniz sum.
pub const LEIBNIZ_CAP: usize = 9;

/// Default dimension cap for [`partial_det`], which sums `C(n, k)` minors.
pub const PARTIAL_DET_CAP: usize = 12;

/// `Σ_π sgn(π) Π_i a_{i,π(i)}` over all permutations, with
/// `sgn(π) = (-1)^{n + #cycles(π)}`.
pub fn leibniz_det<F: Field>(a: &Matrix<F>) -> Result<F::Elem> {
    leibniz_det_with_cap(a, LEIBNIZ_CAP)
}

pub fn leibniz_det_with_cap<F: Field>(a: &Matrix<F>, cap: usize) -> Result<F::Elem> {
    let n = a.n();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "Leibniz determinant",
            size: n,
            cap,
        });
    }
    let f = a.field();
    let mut total = f.zero();
    for perm in (0..n).permutations(n) {
        let mut term = f.one();
        for (i, &j) in perm.iter().enumerate() {
            term = f.mul(&term, a.get(i, j));
            if f.is_zero(&term) {
                break;
            }
        }
        if (n + cycle_count(&perm)) % 2 == 1 {
            term = f.neg(&term);
        }
        total = f.add(&total, &term);
    }
    Ok(total)
}

pub(crate) fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
        }
    }
    cycles
}

/// Gaussian elimination, pivoting on the first nonzero entry of each column
/// and flipping the sign on every row swap.
pub fn gauss_det<F: Field>(a: &Matrix<F>) -> F::Elem {
    let f = a.field().clone();
    let n = a.n();
    let mut m = a.clone();
    let mut det = f.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !f.is_zero(m.get(r, col))) else {
            return f.zero();
        };
        if pivot != col {
            m.swap_rows(col, pivot);
            det = f.neg(&det);
        }
        let pivot_val = m.get(col, col).clone();
        det = f.mul(&det, &pivot_val);
        let pivot_inv = f.inv(&pivot_val).expect("pivot is nonzero");
        for r in col + 1..n {
            if f.is_zero(m.get(r, col)) {
                continue;
            }
            let factor = f.mul(m.get(r, col), &pivot_inv);
            for j in col..n {
                let updated = f.sub(m.get(r, j), &f.mul(&factor, m.get(col, j)));
                m.set(r, j, updated);
            }
        }
    }
    det
}

/// `det_k(A) = Σ_{|S| = k} det(A[S])`, each minor by the Leibniz sum.
pub fn partial_det<F: Field>(a: &Matrix<F>, k: usize) -> Result<F::Elem> {
    let n = a.n();
    if k > n {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds n = {n}")));
    }
    if n > PARTIAL_DET_CAP {
        return Err(Error::CapExceeded {
            what: "partial determinant",
            size: n,
            cap: PARTIAL_DET_CAP,
        });
    }
    let f = a.field();
    let mut total = f.zero();
    for subset in (0..n).combinations(k) {
        let minor = leibniz_det(&a.principal_submatrix(&subset)?)?;
        total = f.add(&total, &minor);
    }
    Ok(total)
}
