//! Exact determinants from traces of matrix powers.
//!
//! The determinant of an `n × n` matrix over a field where `1, …, n` are
//! invertible is a polynomial in `tr(A), tr(A²), …, tr(Aⁿ)`:
//!
//! ```text
//! det(A) = (-1)^n Σ_{λ ⊢ n} (-1)^{|λ|} Π_ℓ tr(A^ℓ)^{s_ℓ(λ)} / (s_ℓ(λ)! · ℓ^{s_ℓ(λ)})
//! ```
//!
//! This crate evaluates it by a direct partition sum and by an `O(n³)`
//! truncated-polynomial dynamic program ([`formula`]), computes the traces by
//! iterated multiplication or repeated squaring ([`traces`]), builds the
//! corresponding `O(log² n)`-depth arithmetic circuit ([`circuit`]) and
//! ships brute-force oracles for every combinatorial identity behind the
//! formula ([`oracle`]).
//!
//! ```
//! use tracedet_core::{det, Field, Matrix, Method, Rationals};
//!
//! let a = Matrix::from_rows(Rationals, &[vec![1, 2], vec![3, 4]]).unwrap();
//! assert_eq!(det(&a, Method::Dp).unwrap(), Rationals.from_i64(-2));
//! ```

pub mod circuit;
pub mod error;
pub mod field;
pub mod formula;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod traces;

pub use circuit::{build_det_circuit, Circuit, CircuitStats, Gate};
pub use error::{Error, Result};
pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals, Scalar};
pub use formula::{
    build_p_ell, det, det_from_traces_dp, det_from_traces_partition_sum, partition_term, Method,
};
pub use matrix::Matrix;
pub use partition::{enumerate_partitions, Partition};
pub use poly::{truncated_product, TruncatedPoly};
pub use traces::{power_traces_sequential, power_traces_squaring, TraceVector};
