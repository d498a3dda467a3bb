//! Integer partitions stored by part multiplicities.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A partition `λ ⊢ k`, kept as the map `ℓ ↦ s_ℓ(λ)` of part sizes to
/// multiplicities. Only parts that occur are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    k: usize,
    mults: BTreeMap<usize, usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition from its parts in any order. Zero parts are rejected.
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let mut mults = BTreeMap::new();
        for &part in parts {
            if part == 0 {
                return Err(Error::InvalidArgument(
                    "partition parts must be positive".into(),
                ));
            }
            *mults.entry(part).or_insert(0) += 1;
        }
        Ok(Partition {
            k: parts.iter().sum(),
            mults,
        })
    }

    /// The partitioned number.
    pub fn k(&self) -> usize {
        self.k
    }

    /// `|λ|`, the number of parts.
    pub fn num_parts(&self) -> usize {
        self.mults.values().sum()
    }

    /// `s_ℓ(λ)`.
    pub fn multiplicity(&self, ell: usize) -> usize {
        self.mults.get(&ell).copied().unwrap_or(0)
    }

    /// `(ℓ, s_ℓ)` pairs with `s_ℓ ≥ 1`, ascending in `ℓ`.
    pub fn multiplicities(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mults.iter().map(|(&l, &s)| (l, s))
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> Vec<usize> {
        self.mults
            .iter()
            .rev()
            .flat_map(|(&l, &s)| std::iter::repeat_n(l, s))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `k`, each once, in lexicographically descending order of
/// their non-increasing part lists. `k = 0` yields only the empty partition.
pub fn enumerate_partitions(k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    descend(k, k, &mut parts, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts(parts).expect("positive parts"));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        parts.push(part);
        descend(remaining - part, part, parts, out);
        parts.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// p(k) by the standard recurrence on the largest allowed part.
    fn count(k: usize, max: usize) -> u64 {
        if k == 0 {
            return 1;
        }
        (1..=max.min(k)).map(|p| count(k - p, p)).sum()
    }

    #[test]
    fn small_cases() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<Vec<usize>> = enumerate_partitions(4).iter().map(|p| p.parts()).collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn counts_match_recurrence() {
        let head: Vec<u64> = (0..7).map(|k| count(k, k)).collect();
        assert_eq!(head, vec![1, 1, 2, 3, 5, 7, 11]);
        for k in 0..=30 {
            assert_eq!(enumerate_partitions(k).len() as u64, count(k, k), "k={k}");
        }
    }

    #[test]
    fn partitions_are_distinct_and_valid() {
        for k in 0..=15 {
            let all = enumerate_partitions(k);
            let distinct: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            for p in &all {
                assert_eq!(p.multiplicities().map(|(l, s)| l * s).sum::<usize>(), k);
                assert_eq!(p.num_parts(), p.parts().len());
                assert!(p.multiplicities().all(|(_, s)| s >= 1));
            }
        }
    }

    #[test]
    fn accessors() {
        let p = Partition::from_parts(&[1, 2, 1]).unwrap();
        assert_eq!(p.k(), 4);
        assert_eq!(p.num_parts(), 3);
        assert_eq!(p.multiplicity(1), 2);
        assert_eq!(p.multiplicity(3), 0);
        assert_eq!(p.to_string(), "(2,1,1)");
        assert!(Partition::from_parts(&[0]).is_err());
    }
}
