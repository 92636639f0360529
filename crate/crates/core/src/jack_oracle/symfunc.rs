use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{JackError, SymFuncElement, Basis, MAX_TRANSITION_SIZE};
use crate::algebra::{factorial, RatFuncA, Rational};
use crate::diagrams::{partitions, YoungDiagram};

/// `z_π = Π_i i^{m_i} m_i!`
pub fn z_factor(pi: &YoungDiagram) -> BigInt {
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &p in pi.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts
        .into_iter()
        .fold(BigInt::one(), |acc, (i, m)| acc * BigInt::from(i).pow(m as u32) * factorial(m))
}

/// Coefficient of `m_λ` in `p_π`: the number of ways to distribute the
/// parts of `π` into the rows of `λ` so that row `j` receives exactly `λ_j`.
pub(crate) fn transition_coefficient(pi: &YoungDiagram, lambda: &YoungDiagram) -> u64 {
    let mut states: HashMap<Vec<u32>, u64> = HashMap::new();
    states.insert(lambda.parts().to_vec(), 1);
    for &part in pi.parts() {
        let mut next: HashMap<Vec<u32>, u64> = HashMap::new();
        for (rest, count) in states {
            for j in 0..rest.len() {
                if rest[j] >= part {
                    let mut r = rest.clone();
                    r[j] -= part;
                    *next.entry(r).or_default() += count;
                }
            }
        }
        states = next;
    }
    states.into_iter().filter(|(r, _)| r.iter().all(|&x| x == 0)).map(|(_, c)| c).sum()
}

pub fn powersum_to_monomial(pi: &YoungDiagram) -> Result<SymFuncElement, JackError> {
    let n = pi.size();
    if n > MAX_TRANSITION_SIZE {
        return Err(JackError::TooLarge { size: n, max: MAX_TRANSITION_SIZE });
    }
    let coeffs = partitions(n)
        .into_iter()
        .filter_map(|lambda| {
            let c = transition_coefficient(pi, &lambda);
            (c != 0).then(|| (lambda, RatFuncA::constant(Rational::from_integer(c.into()))))
        })
        .collect();
    Ok(SymFuncElement { basis: Basis::Monomial, coeffs })
}

/// Partitions of `n` in lexicographic order, `(1^n)` first. This refines
/// dominance, so `m_λ` only meets `p_π` with `π` earlier or equal.
pub(crate) fn ordered_partitions(n: u32) -> Vec<YoungDiagram> {
    let mut parts = partitions(n);
    parts.reverse();
    parts
}

/// `Linv[λ][π]`: coefficient of `p_π` in `m_λ`, indexed by
/// [`ordered_partitions`].
pub(crate) fn monomial_to_powersum_matrix(order: &[YoungDiagram]) -> Vec<Vec<Rational>> {
    let n = order.len();
    // l[π][λ] is upper triangular with positive diagonal.
    let l: Vec<Vec<Rational>> = order
        .iter()
        .map(|pi| {
            order
                .iter()
                .map(|lambda| Rational::from_integer(transition_coefficient(pi, lambda).into()))
                .collect()
        })
        .collect();
    // m_λ = Σ_π inv[λ][π] p_π, i.e. inv = L⁻¹ as a matrix acting on rows.
    // With p_π = Σ_λ l[π][λ] m_λ, inv satisfies Σ_π inv[λ][π] l[π][μ] = δ_λμ.
    let mut inv = vec![vec![Rational::zero(); n]; n];
    for lam in 0..n {
        // Solve inv[lam][·] by back substitution over μ ascending.
        for mu in 0..n {
            let target = if lam == mu { Rational::one() } else { Rational::zero() };
            let mut acc = target;
            for pi in 0..mu {
                if !inv[lam][pi].is_zero() && !l[pi][mu].is_zero() {
                    acc -= &inv[lam][pi] * &l[pi][mu];
                }
            }
            inv[lam][mu] = acc / &l[mu][mu];
        }
    }
    inv
}
