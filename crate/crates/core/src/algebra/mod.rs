//! Exact coefficient arithmetic.
//!
//! The tower used by every other module:
//!
//! - [`Rational`]: arbitrary-precision rationals,
//! - [`Laurent`]: Laurent polynomials in the single symbol `A`,
//! - [`MultiPoly`]: sparse multivariate polynomials over named variables
//!   ([`Var`]), generic over the coefficient ring,
//! - [`RatFuncA`]: univariate rational functions, used as the coefficient
//!   field of the Jack polynomial computations.
//!
//! The symbol `γ = −A + A⁻¹` is kept opaque as the variable [`Var::G`]
//! and converted explicitly with [`gamma_substitute`] and [`a_to_gamma`].

mod faulhaber;
mod gamma;
mod laurent;
mod linsolve;
mod parse;
mod poly;
mod ratfunc;

pub use faulhaber::{bernoulli_plus, faulhaber_coefficients, faulhaber_range_sum};
pub use gamma::{a_to_gamma, gamma_laurent, gamma_substitute, gamma_univariate_to_laurent};
pub use laurent::Laurent;
pub use linsolve::{solve_linear, Field, LinearSolution};
pub use parse::{parse_laurent, parse_poly, ParseError};
pub use poly::{homogeneous_part, Monomial, MultiPoly, Ring, Var};
pub use ratfunc::{RatFuncA, UniPoly};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Errors raised by the algebraic rewrites.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("Laurent polynomial {0} is not a polynomial in gamma = -A + A^-1")]
    NotExpressible(String),
    #[error("rational function {0} does not reduce to a Laurent polynomial")]
    NotLaurent(String),
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n (n-1) ... (n-k+1)`.
pub fn falling_factorial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i))
}
