//! Small directed multigraphs: pattern graphs for homomorphism counting,
//! their quotients by vertex partitions, canonical forms and automorphisms.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest vertex count for which canonical forms and automorphism counts
/// are computed by trying every relabeling.
pub const RELABEL_CAP: usize = 8;

/// Directed graph on vertices `0..v` with loops and parallel edges. The edge
/// multiset is stored sorted, so equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedMultigraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl DirectedMultigraph {
    pub fn new(vertices: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, w)) = edges.iter().find(|&&(u, w)| u >= vertices || w >= vertices) {
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {w}) out of range for {vertices} vertices"
            )));
        }
        edges.sort_unstable();
        Ok(DirectedMultigraph { vertices, edges })
    }

    pub fn empty() -> Self {
        DirectedMultigraph {
            vertices: 0,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The directed cycle `0 → 1 → … → len-1 → 0`; `len = 1` is a loop.
    pub fn cycle(len: usize) -> Self {
        let edges = (0..len).map(|i| (i, (i + 1) % len)).collect();
        DirectedMultigraph::new(len, edges).expect("in range")
    }

    /// `C_λ`: one cycle of length `ℓ` per part `ℓ` of `λ`, largest first.
    pub fn cycle_union(lambda: &Partition) -> Self {
        lambda
            .parts()
            .into_iter()
            .fold(DirectedMultigraph::empty(), |g, len| {
                g.disjoint_union(&DirectedMultigraph::cycle(len))
            })
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.vertices;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, w)| (u + shift, w + shift)))
            .collect();
        DirectedMultigraph::new(self.vertices + other.vertices, edges).expect("in range")
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, w)| (perm[u], perm[w]))
            .collect();
        edges.sort_unstable();
        DirectedMultigraph {
            vertices: self.vertices,
            edges,
        }
    }

    /// Identifies the vertices inside each block of `rho`, keeping every
    /// resulting loop and parallel edge. Block `b` becomes vertex `b`.
    pub fn quotient(&self, rho: &VertexPartition) -> Result<Self> {
        if rho.ground_size() != self.vertices {
            return Err(Error::InvalidArgument(format!(
                "partition of {} elements applied to a graph with {} vertices",
                rho.ground_size(),
                self.vertices
            )));
        }
        let map = rho.block_of();
        let edges = self.edges.iter().map(|&(u, w)| (map[u], map[w])).collect();
        DirectedMultigraph::new(rho.blocks().len(), edges)
    }

    /// Representative of the isomorphism class: the relabeling with the
    /// lexicographically smallest sorted edge list.
    pub fn canonical_form(&self) -> Result<Self> {
        self.check_relabel_cap("canonical form")?;
        Ok((0..self.vertices)
            .permutations(self.vertices)
            .map(|perm| self.relabel(&perm))
            .min()
            .unwrap_or_else(DirectedMultigraph::empty))
    }

    pub fn is_isomorphic(&self, other: &Self) -> Result<bool> {
        if self.vertices != other.vertices || self.edges.len() != other.edges.len() {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }

    /// Number of vertex bijections preserving the edge multiset, by brute force.
    pub fn automorphism_count(&self) -> Result<u64> {
        self.check_relabel_cap("automorphism count")?;
        Ok((0..self.vertices)
            .permutations(self.vertices)
            .filter(|perm| self.relabel(perm) == *self)
            .count() as u64)
    }

    fn check_relabel_cap(&self, what: &'static str) -> Result<()> {
        if self.vertices > RELABEL_CAP {
            Err(Error::CapExceeded {
                what,
                size: self.vertices,
                cap: RELABEL_CAP,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for DirectedMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|(u, w)| format!("{u}>{w}")).collect();
        write!(f, "[{}; {}]", self.vertices, edges.join(" "))
    }
}

/// A partition of the vertex set `0..v` into nonempty blocks. Blocks are
/// sorted internally and ordered by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(ground: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; ground];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x >= ground || seen[x] {
                    return Err(Error::InvalidArgument(format!(
                        "element {x} out of range or repeated"
                    )));
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidArgument(
                "blocks do not cover the ground set".into(),
            ));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(VertexPartition { ground, blocks })
    }

    /// `⊥`, all singletons.
    pub fn finest(ground: usize) -> Self {
        VertexPartition {
            ground,
            blocks: (0..ground).map(|i| vec![i]).collect(),
        }
    }

    /// Every partition of `0..ground` (Bell-number many), via restricted
    /// growth strings.
    pub fn all(ground: usize) -> Vec<VertexPartition> {
        let mut out = Vec::new();
        let mut labels = vec![0usize; ground];
        fn grow(pos: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<VertexPartition>) {
            if pos == labels.len() {
                let blocks_n = if labels.is_empty() { 0 } else { max + 1 };
                let mut blocks = vec![Vec::new(); blocks_n];
                for (x, &b) in labels.iter().enumerate() {
                    blocks[b].push(x);
                }
                out.push(VertexPartition {
                    ground: labels.len(),
                    blocks,
                });
                return;
            }
            let limit = if pos == 0 { 0 } else { max + 1 };
            for b in 0..=limit {
                labels[pos] = b;
                grow(pos + 1, max.max(b), labels, out);
            }
        }
        grow(0, 0, &mut labels, &mut out);
        out
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_finest(&self) -> bool {
        self.blocks.len() == self.ground
    }

    /// `block_of()[x]` is the index of the block containing `x`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut map = vec![0; self.ground];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                map[x] = b;
            }
        }
        map
    }
}
