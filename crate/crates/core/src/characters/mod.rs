//! Jack characters `Ch_n` as polynomial functions on Young diagrams: the
//! defining linear system, Stanley polynomials, their top-degree parts and
//! the vanishing system that characterises the top degree.

mod vanishing;
mod solver;

use std::collections::BTreeMap;

use serde::Serialize;

pub use vanishing::{verify_vanishing_system, VanishingCheck, VanishingReport};
pub use solver::{solve_character_family, symmetric_basis, BasisElement};

use crate::algebra::{homogeneous_part, parse_poly, AlgebraError, MultiPoly};
use crate::diagrams::{evaluate_family_multirect, ContentPolynomialFamily, MultiRect};

pub const MAX_SOLVER_N: u32 = 5;
pub const MAX_STANLEY_RECTS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharacterError {
    #[error("n = {n} outside 1..={max}")]
    OutOfRange { n: u32, max: u32 },
    #[error("at most {max} rectangles are supported, got {got}")]
    TooManyRects { got: usize, max: usize },
    #[error("system for Ch_{n} is underdetermined (rank defect {rank_defect})")]
    Underdetermined { n: u32, rank_defect: usize },
    #[error("system for Ch_{n} is inconsistent (rank {rank} of {unknowns} unknowns)")]
    Inconsistent { n: u32, rank: usize, unknowns: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Content polynomials of `Ch_n` (degree `n + 1`).
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterSolution {
    pub n: u32,
    pub family: ContentPolynomialFamily,
    /// Size of the linear system that produced the family.
    pub unknowns: usize,
    pub equations: usize,
}

#[derive(Serialize)]
struct SolutionRecord {
    n: u32,
    degree: u32,
    family: BTreeMap<usize, String>,
    unknowns: usize,
    equations: usize,
}

impl Serialize for CharacterSolution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SolutionRecord {
            n: self.n,
            degree: self.family.degree(),
            family: self.family.to_text_map(),
            unknowns: self.unknowns,
            equations: self.equations,
        }
        .serialize(s)
    }
}

/// Homogeneous top-degree part of a Stanley polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct TopDegreePart {
    pub n: u32,
    pub ell: usize,
    pub stanley_top: MultiPoly,
}

/// `p_0 = 0`, `p_1 = 3(c_1 + γ)(c_1 + 2γ) + 3/2`, `p_2 = −3/2`.
pub fn ch3_explicit_family() -> ContentPolynomialFamily {
    let polys = ["0", "3*c1^2 + 9*g*c1 + 6*g^2 + 3/2", "-3/2"]
        .iter()
        .map(|p| parse_poly(p).expect("literal polynomial"))
        .collect();
    ContentPolynomialFamily::new(4, polys).expect("degree-4 family")
}

fn rect(ell: usize) -> Result<MultiRect, CharacterError> {
    if ell > MAX_STANLEY_RECTS {
        return Err(CharacterError::TooManyRects { got: ell, max: MAX_STANLEY_RECTS });
    }
    MultiRect::new(ell).ok_or(CharacterError::TooManyRects { got: ell, max: MAX_STANLEY_RECTS })
}

/// `Ch_n` on `(−Ap) × (A⁻¹q)` with `ℓ` rectangles.
pub fn stanley_polynomial(sol: &CharacterSolution, ell: usize) -> Result<MultiPoly, CharacterError> {
    Ok(evaluate_family_multirect(&sol.family, rect(ell)?)?)
}

pub fn top_degree(sol: &CharacterSolution, ell: usize) -> Result<TopDegreePart, CharacterError> {
    let full = stanley_polynomial(sol, ell)?;
    Ok(TopDegreePart { n: sol.n, ell, stanley_top: homogeneous_part(&full, sol.n + 1) })
}

/// Keeps in each `p_k` only the monomials of degree exactly `n + 1 − 2k`.
pub fn family_top(sol: &CharacterSolution) -> ContentPolynomialFamily {
    sol.family.homogeneous_top(sol.n + 1)
}

/// `δ_n = Ch_n − Ch_n^top` as a Stanley polynomial.
pub fn delta_n(sol: &CharacterSolution, ell: usize) -> Result<MultiPoly, CharacterError> {
    let full = stanley_polynomial(sol, ell)?;
    let top = homogeneous_part(&full, sol.n + 1);
    Ok(full - top)
}
