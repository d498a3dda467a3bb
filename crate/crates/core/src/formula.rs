//! The determinant as a function of the power traces:
//!
//! ```text
//! det(A) = (-1)^n  Σ_{λ ⊢ n}  (-1)^{|λ|}  Π_ℓ  tr(A^ℓ)^{s_ℓ} / (s_ℓ! · ℓ^{s_ℓ})
//! ```
//!
//! Two evaluation routes are provided. The partition sum walks all `λ ⊢ n`
//! (`exp(O(√n))` terms). The dynamic program multiplies the polynomials
//! `p_ℓ(X) = Σ_i (-1)^i tr(A^ℓ)^i / (i! ℓ^i) X^{ℓi}` truncated at degree `n`
//! and reads off the coefficient of `Xⁿ` in `O(n³)` field operations.
//!
//! Both routes divide by integers up to `n`, so they require a field of
//! characteristic 0 or a prime modulus `p > n`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::partition::Partition;
use crate::poly::{truncated_product, TruncatedPoly};
use crate::traces::{power_traces_sequential, TraceVector};

/// Which route [`det`] takes from the traces to the determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Dp,
    PartitionSum,
}

fn guard<F: Field>(field: &F, n: usize) -> Result<()> {
    field.spec().check_trace_formula(n)
}

/// `1 / m` for a small positive integer `m`.
fn inv_small<F: Field>(field: &F, m: usize, n: usize) -> Result<F::Elem> {
    field
        .inv(&field.from_i64(m as i64))
        .map_err(|_| Error::DomainTooSmall {
            field: field.spec(),
            n,
        })
}

/// Coefficients `(-t)^i / (i! · ℓ^i)` for `0 ≤ i ≤ max_i`, built incrementally.
fn factor_table<F: Field>(
    field: &F,
    ell: usize,
    t: &F::Elem,
    max_i: usize,
    n: usize,
) -> Result<Vec<F::Elem>> {
    let neg_t = field.neg(t);
    let mut table = Vec::with_capacity(max_i + 1);
    table.push(field.one());
    for i in 1..=max_i {
        let step = field.mul(&neg_t, &inv_small(field, i * ell, n)?);
        table.push(field.mul(&table[i - 1], &step));
    }
    Ok(table)
}

/// The `λ`-summand without the global sign:
/// `(-1)^{|λ|} Π_ℓ tr(A^ℓ)^{s_ℓ} / (s_ℓ! · ℓ^{s_ℓ})`.
pub fn partition_term<F: Field>(lambda: &Partition, traces: &TraceVector<F>) -> Result<F::Elem> {
    let n = traces.n();
    if lambda.k() != n {
        return Err(Error::InvalidArgument(format!(
            "partition of {} does not match {} traces",
            lambda.k(),
            n
        )));
    }
    let field = traces.field();
    guard(field, n)?;
    let mut term = field.one();
    for (ell, s) in lambda.multiplicities() {
        let factors = factor_table(field, ell, traces.get(ell), s, n)?;
        term = field.mul(&term, &factors[s]);
    }
    Ok(term)
}

/// Evaluates the formula by summing over all partitions of `n`.
///
/// Partitions are visited depth first (largest part sizes first, higher
/// multiplicities first), which is the descending lexicographic order of
/// [`crate::enumerate_partitions`]; each level multiplies one precomputed
/// factor onto the running product instead of rebuilding the term.
pub fn det_from_traces_partition_sum<F: Field>(traces: &TraceVector<F>) -> Result<F::Elem> {
    let n = traces.n();
    let field = traces.field();
    guard(field, n)?;
    if n == 0 {
        return Ok(field.one());
    }
    let mut tables = vec![Vec::new()];
    for ell in 1..=n {
        tables.push(factor_table(field, ell, traces.get(ell), n / ell, n)?);
    }
    let mut total = field.zero();
    accumulate(field, &tables, n, n, &field.one(), &mut total);
    Ok(apply_global_sign(field, n, total))
}

fn accumulate<F: Field>(
    field: &F,
    tables: &[Vec<F::Elem>],
    ell: usize,
    remaining: usize,
    acc: &F::Elem,
    total: &mut F::Elem,
) {
    if remaining == 0 {
        *total = field.add(total, acc);
        return;
    }
    if ell == 1 {
        *total = field.add(total, &field.mul(acc, &tables[1][remaining]));
        return;
    }
    for s in (0..=remaining / ell).rev() {
        if s == 0 {
            accumulate(field, tables, ell - 1, remaining, acc, total);
        } else {
            let next = field.mul(acc, &tables[ell][s]);
            accumulate(field, tables, ell - 1, remaining - s * ell, &next, total);
        }
    }
}

fn apply_global_sign<F: Field>(field: &F, n: usize, value: F::Elem) -> F::Elem {
    if n % 2 == 1 {
        field.neg(&value)
    } else {
        value
    }
}

/// `p_ℓ(X) = Σ_{i=0}^{⌊n/ℓ⌋} (-1)^i t^i / (i! · ℓ^i) X^{ℓi}`, truncated at `n`.
pub fn build_p_ell<F: Field>(
    field: &F,
    ell: usize,
    t: &F::Elem,
    n: usize,
) -> Result<TruncatedPoly<F>> {
    if ell == 0 || ell > n {
        return Err(Error::InvalidArgument(format!(
            "p_ell needs 1 <= ell <= n, got ell={ell}, n={n}"
        )));
    }
    guard(field, n)?;
    let table = factor_table(field, ell, t, n / ell, n)?;
    let mut coeffs = vec![field.zero(); n + 1];
    for (i, c) in table.into_iter().enumerate() {
        coeffs[ell * i] = c;
    }
    Ok(TruncatedPoly::from_coeffs(field.clone(), n, coeffs))
}

/// Evaluates the formula as `(-1)^n [Xⁿ] p_1 ⋯ p_n`, multiplying the
/// polynomials left to right with truncation at degree `n`.
pub fn det_from_traces_dp<F: Field>(traces: &TraceVector<F>) -> Result<F::Elem> {
    let n = traces.n();
    let field = traces.field();
    guard(field, n)?;
    if n == 0 {
        return Ok(field.one());
    }
    let polys = (1..=n)
        .map(|ell| build_p_ell(field, ell, traces.get(ell), n))
        .collect::<Result<Vec<_>>>()?;
    let product = truncated_product(&polys)?;
    Ok(apply_global_sign(field, n, product.coeff(n).clone()))
}

/// `det(A)` from the traces of `A, …, Aⁿ`. Costs `O(n⁴)` for the traces
/// plus `O(n³)` (DP) or `exp(O(√n))·n` (partition sum) afterwards.
pub fn det<F: Field>(a: &Matrix<F>, method: Method) -> Result<F::Elem> {
    guard(a.field(), a.n())?;
    let traces = power_traces_sequential(a);
    match method {
        Method::Dp => det_from_traces_dp(&traces),
        Method::PartitionSum => det_from_traces_partition_sum(&traces),
    }
}
