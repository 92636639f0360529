//! Jack polynomials by Gram–Schmidt, their power-sum coefficients and the
//! normalized Jack characters built from them.
//!
//! Coefficients are rational functions in `A` with `α = A²`. Tables of
//! `θ_π(λ)` are memoised per size and optionally persisted to disk
//! (see [`set_cache_dir`]).

mod character;
mod jack;
mod mn;
mod symfunc;

use std::collections::BTreeMap;
use std::fmt;

pub use character::{jack_character, structure_constants, to_delta, StructureConstants};
pub use jack::{cache_dir, jack_inner_product, jack_j, set_cache_dir, theta};
pub use mn::{mn_character, normalized_character};
pub use symfunc::{powersum_to_monomial, z_factor};

use crate::algebra::RatFuncA;
use crate::diagrams::YoungDiagram;

pub const MAX_TRANSITION_SIZE: u32 = 10;
pub const MAX_JACK_SIZE: u32 = 8;
pub const MAX_STRUCTURE_SIZE: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JackError {
    #[error("size {size} exceeds the supported maximum {max}")]
    TooLarge { size: u32, max: u32 },
    #[error("|pi| = {pi} differs from |lambda| = {lambda}")]
    SizeMismatch { pi: u32, lambda: u32 },
    #[error("{0} is not a Laurent polynomial")]
    NotLaurent(String),
    #[error("inconsistent structure constants: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    PowerSum,
}

/// Homogeneous symmetric function, finitely supported on one basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SymFuncElement {
    pub basis: Basis,
    pub coeffs: BTreeMap<YoungDiagram, RatFuncA>,
}

impl SymFuncElement {
    pub fn coeff(&self, pi: &YoungDiagram) -> RatFuncA {
        self.coeffs.get(pi).cloned().unwrap_or_else(num_traits::Zero::zero)
    }
}

/// `(c)*p[2,1] + ...`, terms in decreasing partition order.
impl fmt::Display for SymFuncElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.basis {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
        };
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (pi, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{sym}[{pi}]")?;
        }
        Ok(())
    }
}
