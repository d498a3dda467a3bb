//! Brute-force ground truth for every combinatorial object behind the trace
//! formula: Leibniz and partial determinants, cycle covers, weighted
//! hom/emb/sub counts, quotient graphs and Kronecker blow-ups.
//!
//! Everything here enumerates exhaustively and refuses inputs above a fixed
//! cap with [`crate::Error::CapExceeded`]. These are correctness oracles, not
//! performance paths.

pub mod cover;
pub mod det;
pub mod expansion;
pub mod graph;
pub mod hom;

pub use cover::{enumerate_cycle_covers, partial_det_via_covers, CycleCover};
pub use det::{gauss_det, leibniz_det, leibniz_det_with_cap, partial_det};
pub use expansion::{
    cycle_union_weight, emb_as_hom_expansion, evaluate_hom_combination, partial_det_hom_expansion,
    Coefficient, HomCombination,
};
pub use graph::{DirectedMultigraph, VertexPartition};
pub use hom::{aut_count, emb_count, hom_count, sub_count, verify_det_blowup, verify_hom_blowup};
