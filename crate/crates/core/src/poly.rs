//! Polynomials in one indeterminate truncated at a fixed degree.

use crate::error::{Error, Result};
use crate::field::Field;

/// `c_0 + c_1 X + … + c_cap X^cap`; products discard every degree above `cap`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> TruncatedPoly<F> {
    pub fn zero(field: F, cap: usize) -> Self {
        let coeffs = vec![field.zero(); cap + 1];
        TruncatedPoly { field, coeffs }
    }

    pub fn one(field: F, cap: usize) -> Self {
        let mut p = TruncatedPoly::zero(field, cap);
        p.coeffs[0] = p.field.one();
        p
    }

    /// Coefficients beyond `cap` are dropped; missing ones are zero.
    pub fn from_coeffs(field: F, cap: usize, mut coeffs: Vec<F::Elem>) -> Self {
        coeffs.resize(cap + 1, field.zero());
        TruncatedPoly { field, coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, degree: usize) -> &F::Elem {
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Schoolbook product truncated to the shared cap, `O(cap²)`.
    pub fn mul_truncated(&self, other: &Self) -> Result<Self> {
        if self.cap() != other.cap() {
            return Err(Error::CapMismatch {
                left: self.cap(),
                right: other.cap(),
            });
        }
        let f = &self.field;
        let cap = self.cap();
        let mut out = vec![f.zero(); cap + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs[..=cap - i].iter().enumerate() {
                if !f.is_zero(b) {
                    out[i + j] = f.add(&out[i + j], &f.mul(a, b));
                }
            }
        }
        Ok(TruncatedPoly {
            field: f.clone(),
            coeffs: out,
        })
    }
}

/// Left-to-right product with every intermediate truncated to the shared cap.
pub fn truncated_product<F: Field>(polys: &[TruncatedPoly<F>]) -> Result<TruncatedPoly<F>> {
    let (first, rest) = polys
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("empty product has no cap".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, p| acc.mul_truncated(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn poly(cap: usize, cs: &[BigRational]) -> TruncatedPoly<Rationals> {
        TruncatedPoly::from_coeffs(Rationals, cap, cs.to_vec())
    }

    #[test]
    fn truncated_product_examples() {
        let p1 = poly(2, &[q(1, 1), q(-5, 1), q(25, 2)]);
        let p2 = poly(2, &[q(1, 1), q(0, 1), q(-29, 2)]);
        assert_eq!(truncated_product(std::slice::from_ref(&p1)).unwrap(), p1);
        let prod = truncated_product(&[p1.clone(), p2]).unwrap();
        assert_eq!(prod.coeffs(), &[q(1, 1), q(-5, 1), q(-2, 1)]);
        let zero = TruncatedPoly::zero(Rationals, 2);
        assert_eq!(truncated_product(&[p1, zero.clone()]).unwrap(), zero);
    }

    #[test]
    fn cap_mismatch_and_empty() {
        let a = TruncatedPoly::one(Rationals, 2);
        let b = TruncatedPoly::one(Rationals, 3);
        assert_eq!(
            truncated_product(&[a, b]),
            Err(Error::CapMismatch { left: 2, right: 3 })
        );
        assert!(truncated_product::<Rationals>(&[]).is_err());
    }

    #[test]
    fn truncation_matches_full_product() {
        // (1 + X)^5 truncated at degree 3 keeps binomial(5, i) for i <= 3.
        let x = poly(3, &[q(1, 1), q(1, 1)]);
        let prod = truncated_product(&vec![x; 5]).unwrap();
        assert_eq!(prod.coeffs(), &[q(1, 1), q(5, 1), q(10, 1), q(10, 1)]);
    }
}
