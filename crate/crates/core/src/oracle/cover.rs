//! Partial cycle covers of the complete directed graph with loops.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::partition::Partition;

/// Default cap on `n` for cover enumeration.
pub const COVER_CAP: usize = 8;

/// Vertex-disjoint directed cycles on `0..n`. Each cycle is stored starting
/// at its smallest vertex; cycles are ordered by that anchor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleCover {
    cycles: Vec<Vec<usize>>,
}

impl CycleCover {
    /// Validates an arc set: every touched vertex must have in- and
    /// out-degree exactly one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut succ = vec![None; n];
        let mut has_pred = vec![false; n];
        for &(u, w) in edges {
            if u >= n || w >= n {
                return Err(Error::InvalidArgument(format!(
                    "arc ({u}, {w}) out of range"
                )));
            }
            if succ[u].replace(w).is_some() || std::mem::replace(&mut has_pred[w], true) {
                return Err(Error::InvalidArgument(format!(
                    "arc ({u}, {w}) breaks vertex-disjointness"
                )));
            }
        }
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || succ[start].is_none() {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = succ[v].ok_or_else(|| {
                    Error::InvalidArgument(format!("vertex {v} has no outgoing arc"))
                })?;
            }
            if v != start {
                return Err(Error::InvalidArgument(
                    "arcs do not close into cycles".into(),
                ));
            }
            cycles.push(cycle);
        }
        Ok(CycleCover { cycles })
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Total number of arcs (= covered vertices).
    pub fn k(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |i| (c[i], c[(i + 1) % c.len()])))
            .collect();
        edges.sort_unstable();
        edges
    }

    /// `(-1)^{#arcs + #cycles}`.
    pub fn sign(&self) -> i8 {
        if (self.k() + self.cycles.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The partition of `k` given by the cycle lengths.
    pub fn format(&self) -> Partition {
        let lens: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        Partition::from_parts(&lens).expect("cycles are nonempty")
    }

    /// Product of the arc weights `a_{u,v}`.
    pub fn weight<F: Field>(&self, a: &Matrix<F>) -> F::Elem {
        let f = a.field();
        self.cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |i| (c[i], c[(i + 1) % c.len()])))
            .fold(f.one(), |acc, (u, w)| f.mul(&acc, a.get(u, w)))
    }
}

/// Every `k`-partial cycle cover of the complete digraph on `0..n`, once.
///
/// The smallest undecided vertex is either left uncovered or becomes the
/// anchor (minimum) of a new cycle through larger undecided vertices.
pub fn enumerate_cycle_covers(n: usize, k: usize) -> Result<Vec<CycleCover>> {
    if k > n {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds n = {n}")));
    }
    if n > COVER_CAP {
        return Err(Error::CapExceeded {
            what: "cycle cover enumeration",
            size: n,
            cap: COVER_CAP,
        });
    }
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut cycles = Vec::new();
    extend_covers(0, k, &mut used, &mut cycles, &mut out);
    Ok(out)
}

fn extend_covers(
    from: usize,
    remaining: usize,
    used: &mut [bool],
    cycles: &mut Vec<Vec<usize>>,
    out: &mut Vec<CycleCover>,
) {
    if remaining == 0 {
        out.push(CycleCover {
            cycles: cycles.clone(),
        });
        return;
    }
    let n = used.len();
    let Some(anchor) = (from..n).find(|&v| !used[v]) else {
        return;
    };
    // anchor stays uncovered
    extend_covers(anchor + 1, remaining, used, cycles, out);
    // anchor starts a cycle
    used[anchor] = true;
    let mut path = vec![anchor];
    grow_cycle(anchor, remaining, &mut path, used, cycles, out);
    used[anchor] = false;
}

fn grow_cycle(
    anchor: usize,
    remaining: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    cycles: &mut Vec<Vec<usize>>,
    out: &mut Vec<CycleCover>,
) {
    // close the cycle here
    cycles.push(path.clone());
    extend_covers(anchor + 1, remaining - path.len(), used, cycles, out);
    cycles.pop();
    if path.len() == remaining {
        return;
    }
    for v in anchor + 1..used.len() {
        if !used[v] {
            used[v] = true;
            path.push(v);
            grow_cycle(anchor, remaining, path, used, cycles, out);
            path.pop();
            used[v] = false;
        }
    }
}

/// `det_k(A) = Σ_{C ∈ 𝒞(n,k)} sgn(C) Π_{uv ∈ C} a_{u,v}`.
pub fn partial_det_via_covers<F: Field>(a: &Matrix<F>, k: usize) -> Result<F::Elem> {
    let f = a.field();
    let mut total = f.zero();
    for cover in enumerate_cycle_covers(a.n(), k)? {
        let w = cover.weight(a);
        total = if cover.sign() > 0 {
            f.add(&total, &w)
        } else {
            f.sub(&total, &w)
        };
    }
    Ok(total)
}
