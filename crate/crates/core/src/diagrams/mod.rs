//! Young diagrams, deformed contents, and polynomial functions on diagrams.

mod difference;
mod family;
mod multirect;
mod young;

pub use difference::{delta_op, iterated_delta, sym_extend};
pub use family::{content_power_sums, evaluate_family, ContentPolynomialFamily, FamilyError};
pub use multirect::{concrete_to_multirect, evaluate_family_multirect, MultiRect, MultirectSubstitution};
pub use young::{content, partitions, partitions_up_to, Cell, YoungDiagram};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("malformed partition text {0:?}")]
    Malformed(String),
    #[error("the empty diagram has no multirectangular coordinates")]
    EmptyDiagram,
}
