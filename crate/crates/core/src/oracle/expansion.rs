//! Embedding counts as integer combinations of homomorphism counts, and the
//! resulting expansion of partial determinants into homomorphism counts.
//!
//! Starting from `hom(H) = Σ_ρ emb(H/ρ)` over all partitions `ρ` of `V(H)`,
//! the finest partition gives `emb(H) = hom(H) - Σ_{ρ ≠ ⊥} emb(H/ρ)`; every
//! quotient on the right has fewer vertices, so recursing terminates at
//! single-vertex graphs. Terms are merged per isomorphism class.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::oracle::graph::{DirectedMultigraph, VertexPartition, RELABEL_CAP};
use crate::oracle::hom::{aut_count, hom_count};
use crate::partition::{enumerate_partitions, Partition};

/// Largest pattern size accepted by the expansions (Bell(7) = 877 quotients).
pub const EXPANSION_CAP: usize = 7;

/// A linear combination `Σ coeff · hom(F → ·)` keyed by canonical graphs.
pub type HomCombination<C> = Vec<(DirectedMultigraph, C)>;

fn check_cap(v: usize) -> Result<()> {
    if v > EXPANSION_CAP.min(RELABEL_CAP) {
        Err(Error::CapExceeded {
            what: "hom expansion",
            size: v,
            cap: EXPANSION_CAP,
        })
    } else {
        Ok(())
    }
}

/// Output order: more vertices first, then canonical graph order. The
/// leading term is `(H, 1)` in canonical labeling.
fn ordered<C>(terms: BTreeMap<DirectedMultigraph, C>) -> HomCombination<C> {
    let mut out: Vec<_> = terms.into_iter().collect();
    out.sort_by(|(a, _), (b, _)| b.vertex_count().cmp(&a.vertex_count()).then(a.cmp(b)));
    out
}

#[derive(Default)]
struct Expander {
    memo: HashMap<DirectedMultigraph, BTreeMap<DirectedMultigraph, i64>>,
}

impl Expander {
    fn expand(&mut self, h: &DirectedMultigraph) -> Result<BTreeMap<DirectedMultigraph, i64>> {
        let key = h.canonical_form()?;
        if let Some(done) = self.memo.get(&key) {
            return Ok(done.clone());
        }
        let mut terms = BTreeMap::new();
        terms.insert(key.clone(), 1i64);
        for rho in VertexPartition::all(key.vertex_count()) {
            if rho.is_finest() {
                continue;
            }
            for (g, c) in self.expand(&key.quotient(&rho)?)? {
                *terms.entry(g).or_insert(0) -= c;
            }
        }
        terms.retain(|_, c| *c != 0);
        self.memo.insert(key, terms.clone());
        Ok(terms)
    }
}

/// Integer coefficients `β_F` with `emb(H → A) = Σ_F β_F hom(F → A)` for
/// every `A`. The first entry is `(H, 1)`; all others have fewer vertices.
pub fn emb_as_hom_expansion(h: &DirectedMultigraph) -> Result<HomCombination<i64>> {
    check_cap(h.vertex_count())?;
    Ok(ordered(Expander::default().expand(h)?))
}

/// `det_k` as a combination of homomorphism counts: each `λ ⊢ k` contributes
/// `sgn(C_λ)/aut(C_λ) · emb(C_λ)`, and every embedding count is expanded
/// with [`emb_as_hom_expansion`].
pub fn partial_det_hom_expansion(k: usize) -> Result<HomCombination<BigRational>> {
    check_cap(k)?;
    let mut expander = Expander::default();
    let mut terms: BTreeMap<DirectedMultigraph, BigRational> = BTreeMap::new();
    for lambda in enumerate_partitions(k) {
        let scale = cycle_union_weight(&lambda);
        for (g, beta) in expander.expand(&DirectedMultigraph::cycle_union(&lambda))? {
            let entry = terms.entry(g).or_insert_with(BigRational::zero);
            *entry += &scale * BigRational::from_integer(BigInt::from(beta));
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(ordered(terms))
}

/// `sgn(C_λ) / aut(C_λ)` with `sgn(C_λ) = (-1)^{k + |λ|}`.
pub fn cycle_union_weight(lambda: &Partition) -> BigRational {
    let sign = if (lambda.k() + lambda.num_parts()).is_multiple_of(2) {
        1
    } else {
        -1
    };
    BigRational::new(BigInt::from(sign), BigInt::from(aut_count(lambda)))
}

/// Coefficient types of a [`HomCombination`].
pub trait Coefficient {
    fn to_rational(&self) -> BigRational;
}

impl Coefficient for i64 {
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(*self))
    }
}

impl Coefficient for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

/// Evaluates `Σ coeff · hom(F → A)`.
pub fn evaluate_hom_combination<F, C>(
    terms: &[(DirectedMultigraph, C)],
    a: &Matrix<F>,
) -> Result<F::Elem>
where
    F: Field,
    C: Coefficient,
{
    let f = a.field();
    let mut total = f.zero();
    for (g, c) in terms {
        let coeff = f.from_rational(&c.to_rational())?;
        total = f.add(&total, &f.mul(&coeff, &hom_count(g, a)?));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::oracle::hom::emb_count;

    #[test]
    fn single_vertex_is_its_own_expansion() {
        let v = DirectedMultigraph::new(1, vec![]).unwrap();
        assert_eq!(emb_as_hom_expansion(&v).unwrap(), vec![(v, 1)]);
        let lp = DirectedMultigraph::cycle(1);
        assert_eq!(emb_as_hom_expansion(&lp).unwrap(), vec![(lp, 1)]);
    }

    #[test]
    fn two_loops() {
        let h = DirectedMultigraph::cycle_union(&Partition::from_parts(&[1, 1]).unwrap());
        let exp = emb_as_hom_expansion(&h).unwrap();
        let double_loop = DirectedMultigraph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        assert_eq!(
            exp,
            vec![(h.canonical_form().unwrap(), 1), (double_loop, -1)]
        );

        let a = Matrix::from_rows(Rationals, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(
            evaluate_hom_combination(&exp, &a).unwrap(),
            Rationals.from_i64(8)
        );
        assert_eq!(emb_count(&h, &a).unwrap(), Rationals.from_i64(8));
    }

    #[test]
    fn cap() {
        let big = DirectedMultigraph::new(EXPANSION_CAP + 1, vec![]).unwrap();
        assert!(matches!(
            emb_as_hom_expansion(&big),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn weights() {
        let p = |xs: &[usize]| Partition::from_parts(xs).unwrap();
        assert_eq!(
            cycle_union_weight(&p(&[2])),
            BigRational::new((-1).into(), 2.into())
        );
        assert_eq!(
            cycle_union_weight(&p(&[1, 1])),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(
            cycle_union_weight(&p(&[3])),
            BigRational::new(1.into(), 3.into())
        );
    }
}
