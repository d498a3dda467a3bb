//! Weighted homomorphism, embedding and subgraph counts from small pattern
//! graphs into the weighted complete digraph of a matrix, plus the
//! Kronecker blow-up identities.

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::oracle::cover::enumerate_cycle_covers;
use crate::oracle::det::{leibniz_det, partial_det};
use crate::oracle::graph::DirectedMultigraph;
use crate::partition::Partition;

/// Cap on the number of vertex maps `n^|V(L)|` tried by [`hom_count`].
pub const MAP_CAP: usize = 50_000_000;

fn map_count(n: usize, v: usize) -> Option<usize> {
    u32::try_from(v).ok().and_then(|v| n.checked_pow(v))
}

fn edge_weight<F: Field>(l: &DirectedMultigraph, a: &Matrix<F>, image: &[usize]) -> F::Elem {
    let f = a.field();
    let mut w = f.one();
    for &(u, v) in l.edges() {
        w = f.mul(&w, a.get(image[u], image[v]));
        if f.is_zero(&w) {
            break;
        }
    }
    w
}

/// `hom(L → A) = Σ_{f: V(L) → [n]} Π_{uv ∈ E(L)} a_{f(u), f(v)}`.
pub fn hom_count<F: Field>(l: &DirectedMultigraph, a: &Matrix<F>) -> Result<F::Elem> {
    let (n, v) = (a.n(), l.vertex_count());
    let maps = map_count(n, v)
        .filter(|&m| m <= MAP_CAP)
        .ok_or(Error::CapExceeded {
            what: "homomorphism enumeration",
            size: v,
            cap: MAP_CAP,
        })?;
    let f = a.field();
    let mut total = f.zero();
    let mut image = vec![0usize; v];
    for _ in 0..maps {
        total = f.add(&total, &edge_weight(l, a, &image));
        // odometer
        for slot in image.iter_mut() {
            *slot += 1;
            if *slot < n {
                break;
            }
            *slot = 0;
        }
    }
    Ok(total)
}

/// `emb(L → A)`: as [`hom_count`] over injective maps only.
pub fn emb_count<F: Field>(l: &DirectedMultigraph, a: &Matrix<F>) -> Result<F::Elem> {
    let (n, v) = (a.n(), l.vertex_count());
    let f = a.field();
    if v > n {
        return Ok(f.zero());
    }
    if map_count(n, v).is_none_or(|m| m > MAP_CAP) {
        return Err(Error::CapExceeded {
            what: "embedding enumeration",
            size: v,
            cap: MAP_CAP,
        });
    }
    let mut total = f.zero();
    for image in (0..n).permutations(v) {
        total = f.add(&total, &edge_weight(l, a, &image));
    }
    Ok(total)
}

/// `sub(C_λ → A)`: weighted count of cycle covers of format `λ`.
pub fn sub_count<F: Field>(lambda: &Partition, a: &Matrix<F>) -> Result<F::Elem> {
    let f = a.field();
    if lambda.k() > a.n() {
        return Ok(f.zero());
    }
    let mut total = f.zero();
    for cover in enumerate_cycle_covers(a.n(), lambda.k())? {
        if cover.format() == *lambda {
            total = f.add(&total, &cover.weight(a));
        }
    }
    Ok(total)
}

/// `aut(C_λ) = Π_ℓ s_ℓ! · ℓ^{s_ℓ}`.
pub fn aut_count(lambda: &Partition) -> BigUint {
    let mut aut = BigUint::one();
    for (ell, s) in lambda.multiplicities() {
        for i in 1..=s {
            aut *= BigUint::from(i) * BigUint::from(ell);
        }
    }
    aut
}

/// Checks `hom(F → A ⊗ J_t) = t^{|V(F)|} hom(F → A)`.
pub fn verify_hom_blowup<F: Field>(
    pattern: &DirectedMultigraph,
    a: &Matrix<F>,
    t: usize,
) -> Result<bool> {
    let f = a.field();
    let blown = hom_count(pattern, &a.kron_all_ones(t)?)?;
    let scale = f.pow(&f.from_i64(t as i64), pattern.vertex_count() as u64);
    Ok(blown == f.mul(&scale, &hom_count(pattern, a)?))
}

/// Checks `det_n(A ⊗ J_t) = tⁿ det(A)` by summing all `n × n` principal
/// minors of the blow-up.
pub fn verify_det_blowup<F: Field>(a: &Matrix<F>, t: usize) -> Result<bool> {
    let f = a.field();
    let n = a.n();
    let lhs = partial_det(&a.kron_all_ones(t)?, n)?;
    let rhs = f.mul(&f.pow(&f.from_i64(t as i64), n as u64), &leibniz_det(a)?);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::traces::power_traces_sequential;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sample() -> Matrix<Rationals> {
        Matrix::from_rows(Rationals, &[vec![1, 2], vec![3, 4]]).unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::from_parts(p).unwrap()
    }

    #[test]
    fn hom_examples() {
        let f = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = Matrix::random(f, 4, &mut rng);
        let traces = power_traces_sequential(&a);
        for ell in 1..=4 {
            assert_eq!(
                hom_count(&DirectedMultigraph::cycle(ell), &a).unwrap(),
                *traces.get(ell)
            );
        }
        let vertex = DirectedMultigraph::new(1, vec![]).unwrap();
        assert_eq!(hom_count(&vertex, &a).unwrap(), f.from_i64(4));
        assert_eq!(
            hom_count(&DirectedMultigraph::empty(), &a).unwrap(),
            f.one()
        );
        let (c2, c3) = (DirectedMultigraph::cycle(2), DirectedMultigraph::cycle(3));
        assert_eq!(
            hom_count(&c2.disjoint_union(&c3), &a).unwrap(),
            f.mul(traces.get(2), traces.get(3))
        );
    }

    #[test]
    fn emb_examples() {
        let f = Rationals;
        let a = sample();
        let vertex = DirectedMultigraph::new(1, vec![]).unwrap();
        assert_eq!(emb_count(&vertex, &a).unwrap(), f.from_i64(2));
        assert_eq!(
            emb_count(&DirectedMultigraph::cycle(3), &a).unwrap(),
            f.zero()
        );
        let loops = DirectedMultigraph::cycle_union(&part(&[1, 1]));
        assert_eq!(emb_count(&loops, &a).unwrap(), f.from_i64(8));
    }

    #[test]
    fn sub_examples() {
        let f = Rationals;
        let a = sample();
        assert_eq!(sub_count(&part(&[1, 1]), &a).unwrap(), f.from_i64(4));
        assert_eq!(sub_count(&part(&[1]), &a).unwrap(), a.trace());
        for n in 2..=5 {
            assert_eq!(
                sub_count(&part(&[n]), &Matrix::identity(f, n)).unwrap(),
                f.zero()
            );
        }
    }

    #[test]
    fn aut_examples() {
        assert_eq!(aut_count(&part(&[1, 1, 2])), BigUint::from(4u32));
        assert_eq!(aut_count(&Partition::empty()), BigUint::one());
        for k in 1..=7 {
            assert_eq!(aut_count(&part(&[k])), BigUint::from(k));
        }
    }

    #[test]
    fn blowup_examples() {
        let f = Rationals;
        let a = sample();
        let c2 = DirectedMultigraph::cycle(2);
        assert_eq!(
            hom_count(&c2, &a.kron_all_ones(2).unwrap()).unwrap(),
            f.from_i64(116)
        );
        assert!(verify_hom_blowup(&c2, &a, 2).unwrap());
        assert!(verify_hom_blowup(&c2, &a, 1).unwrap());
        let vertex = DirectedMultigraph::new(1, vec![]).unwrap();
        assert_eq!(
            hom_count(&vertex, &a.kron_all_ones(3).unwrap()).unwrap(),
            f.from_i64(6)
        );

        let five = Matrix::from_rows(f, &[vec![5]]).unwrap();
        assert_eq!(
            partial_det(&five.kron_all_ones(3).unwrap(), 1).unwrap(),
            f.from_i64(15)
        );
        assert!(verify_det_blowup(&five, 3).unwrap());
        assert_eq!(
            partial_det(&a.kron_all_ones(2).unwrap(), 2).unwrap(),
            f.from_i64(-8)
        );
        assert!(verify_det_blowup(&a, 2).unwrap());

        let gf = PrimeField::new(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(verify_det_blowup(&Matrix::random(gf, 3, &mut rng), 2).unwrap());
    }

    #[test]
    fn caps() {
        let a = Matrix::zeros(Rationals, 20);
        let big = DirectedMultigraph::new(7, vec![]).unwrap();
        assert!(matches!(
            hom_count(&big, &a),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            emb_count(&big, &a),
            Err(Error::CapExceeded { .. })
        ));
    }
}
