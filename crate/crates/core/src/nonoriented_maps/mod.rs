//! Maps on arbitrary (possibly non-orientable) surfaces as ribbon graphs,
//! the progressive unicellularity condition on edge orders, and the
//! correspondence between one-face non-oriented maps with admissible
//! orders and oriented maps with arbitrary orders.

mod bijection;
mod counting;
mod ribbon;

pub use bijection::{build_bijection, BijectionEntry, BijectionReport, MAX_BIJECTION_EDGES};
pub use counting::{
    count_s1_s2, enumerate_nonoriented_labeled, progressive_condition, root_orientations, OrderedMap,
    TheoremCounts,
    MAX_RIBBON_EDGES,
};
pub use ribbon::{edge_of, flip_equivalent, normalize_rotation, Color, RibbonGraph, Vertex};

use crate::oriented_maps::MapError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RibbonError {
    #[error("no edge labeled {0}")]
    UnknownEdge(usize),
    #[error("malformed ribbon graph: {0}")]
    Malformed(String),
    #[error("order {0:?} is not a permutation of the edge labels")]
    BadOrder(Vec<usize>),
    #[error(transparent)]
    Size(#[from] MapError),
    #[error("adding edge {edge} of {s1}: {s1_choices} admissible attachment(s) against {s2_choices} orientable one(s)")]
    AmbiguousChoice { edge: usize, s1: String, s1_choices: usize, s2_choices: usize },
}
