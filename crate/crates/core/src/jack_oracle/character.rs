use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::jack::theta;
use super::symfunc::z_factor;
use super::{JackError, MAX_STRUCTURE_SIZE};
use crate::algebra::{a_to_gamma, binomial, solve_linear, Laurent, MultiPoly, RatFuncA, Rational, Var};
use crate::diagrams::{partitions, YoungDiagram};

/// `Ch_μ(λ) = A^{ℓ(μ)−|μ|} · binom(|λ|−|μ|+m_1(μ), m_1(μ)) · z_μ · θ_{μ∪1^{|λ|−|μ|}}(λ)`,
/// and zero when `|λ| < |μ|`.
pub fn jack_character(mu: &YoungDiagram, lambda: &YoungDiagram) -> Result<Laurent, JackError> {
    let (n, m) = (lambda.size(), mu.size());
    if n < m {
        return Ok(Laurent::zero());
    }
    let k = n - m;
    let ones = mu.multiplicity(1) as u64;
    let t = theta(&mu.with_ones(k), lambda)?;
    let c = Rational::from_integer(binomial(k as u64 + ones, ones) * z_factor(mu));
    let shift = mu.rows() as i32 - m as i32;
    let value = t * RatFuncA::from_laurent(&Laurent::monomial(c, shift));
    value.to_laurent().map_err(|_| JackError::NotLaurent(value.to_string()))
}

/// Expansion `Ch_μ · Ch_ν = Σ_ρ g_ρ Ch_ρ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureConstants {
    pub mu: YoungDiagram,
    pub nu: YoungDiagram,
    /// Nonzero `g_ρ` as Laurent polynomials in `A`.
    #[serde(serialize_with = "laurent_map")]
    pub coeffs: BTreeMap<YoungDiagram, Laurent>,
    /// `g_ρ` rewritten in `δ = A − A⁻¹`, when expressible.
    #[serde(serialize_with = "delta_map")]
    pub delta: BTreeMap<YoungDiagram, Option<MultiPoly>>,
}

fn laurent_map<S: serde::Serializer>(m: &BTreeMap<YoungDiagram, Laurent>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v.to_string())))
}

fn delta_map<S: serde::Serializer>(
    m: &BTreeMap<YoungDiagram, Option<MultiPoly>>,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v.as_ref().map(ToString::to_string))))
}

/// Rewrites a Laurent polynomial as a polynomial in `δ = −γ`.
pub fn to_delta(l: &Laurent) -> Option<MultiPoly> {
    let g = a_to_gamma(l).ok()?;
    Some(g.substitute(|v| (v == Var::G).then(|| -MultiPoly::var(Var::Delta))))
}

fn product(mu: &YoungDiagram, nu: &YoungDiagram, lambda: &YoungDiagram) -> Result<Laurent, JackError> {
    Ok(jack_character(mu, lambda)? * jack_character(nu, lambda)?)
}

pub fn structure_constants(mu: &YoungDiagram, nu: &YoungDiagram) -> Result<StructureConstants, JackError> {
    let top = mu.size() + nu.size();
    if top > MAX_STRUCTURE_SIZE {
        return Err(JackError::TooLarge { size: top, max: MAX_STRUCTURE_SIZE });
    }
    let mut found: Vec<(YoungDiagram, Laurent)> = Vec::new();
    let residual = |lambda: &YoungDiagram, found: &[(YoungDiagram, Laurent)]| -> Result<Laurent, JackError> {
        let mut r = product(mu, nu, lambda)?;
        for (rho, g) in found {
            r = r - g * &jack_character(rho, lambda)?;
        }
        Ok(r)
    };
    for s in 0..=top {
        let rhos = partitions(s);
        let mut rows = Vec::with_capacity(rhos.len());
        for lambda in &rhos {
            let coeffs = rhos
                .iter()
                .map(|rho| Ok(RatFuncA::from_laurent(&jack_character(rho, lambda)?)))
                .collect::<Result<Vec<_>, JackError>>()?;
            rows.push((coeffs, RatFuncA::from_laurent(&residual(lambda, &found)?)));
        }
        let sol = solve_linear(rows, rhos.len());
        if !sol.is_unique() {
            return Err(JackError::Inconsistent(format!(
                "size {s}: rank {} of {}, consistent = {}",
                sol.rank, sol.unknowns, sol.consistent
            )));
        }
        for (rho, g) in rhos.into_iter().zip(sol.particular.unwrap()) {
            let g = g.to_laurent().map_err(|_| JackError::NotLaurent(g.to_string()))?;
            if !g.is_zero() {
                found.push((rho, g));
            }
        }
    }
    for lambda in partitions(top + 1) {
        let r = residual(&lambda, &found)?;
        if !r.is_zero() {
            return Err(JackError::Inconsistent(format!("residual {r} at {lambda}")));
        }
    }
    let delta = found.iter().map(|(rho, g)| (rho.clone(), to_delta(g))).collect();
    Ok(StructureConstants { mu: mu.clone(), nu: nu.clone(), coeffs: found.into_iter().collect(), delta })
}

impl StructureConstants {
    pub fn at_one(&self) -> BTreeMap<YoungDiagram, Rational> {
        self.coeffs.iter().map(|(k, v)| (k.clone(), v.at_one())).collect()
    }

    /// True when every `g_ρ` is a polynomial in `δ` with non-negative
    /// integer coefficients.
    pub fn delta_nonnegative_integral(&self) -> bool {
        self.delta.values().all(|p| {
            p.as_ref().is_some_and(|p| {
                p.terms().all(|(_, c)| c.is_integer() && *c >= Rational::zero())
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_laurent, parse_poly};
    use crate::diagrams::{evaluate_family, partitions_up_to, ContentPolynomialFamily};
    use crate::jack_oracle::normalized_character;
    use num_traits::One;

    fn yd(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    #[test]
    fn spot_values() {
        assert_eq!(jack_character(&yd(&[1]), &yd(&[1])).unwrap(), Laurent::one());
        assert_eq!(jack_character(&yd(&[2]), &yd(&[2])).unwrap(), parse_laurent("2*A").unwrap());
        assert_eq!(jack_character(&yd(&[3]), &yd(&[2, 1])).unwrap(), parse_laurent("-3").unwrap());
        assert!(jack_character(&yd(&[3]), &yd(&[2])).unwrap().is_zero());
    }

    #[test]
    fn ch1_counts_boxes_and_ch11_pairs() {
        for lambda in partitions_up_to(6) {
            let n = lambda.size() as i64;
            assert_eq!(jack_character(&yd(&[1]), &lambda).unwrap(), Laurent::constant(int(n)));
            assert_eq!(jack_character(&yd(&[1, 1]), &lambda).unwrap(), Laurent::constant(int(n * (n - 1))));
        }
    }

    #[test]
    fn agrees_with_ch3_family() {
        let fam = ContentPolynomialFamily::new(
            4,
            vec![
                MultiPoly::zero(),
                parse_poly("3*c1^2 + 9*g*c1 + 6*g^2 + 3/2").unwrap(),
                parse_poly("-3/2").unwrap(),
            ],
        )
        .unwrap();
        for lambda in partitions_up_to(6) {
            assert_eq!(jack_character(&yd(&[3]), &lambda).unwrap(), evaluate_family(&fam, &lambda), "{lambda}");
        }
    }

    #[test]
    fn specialises_to_symmetric_group_characters() {
        for mu in partitions_up_to(4).into_iter().filter(|m| !m.is_empty()) {
            for lambda in partitions_up_to(6) {
                assert_eq!(
                    jack_character(&mu, &lambda).unwrap().at_one(),
                    normalized_character(&mu, &lambda),
                    "{mu} {lambda}"
                );
            }
        }
    }

    #[test]
    fn small_structure_constants() {
        let sc = structure_constants(&yd(&[1]), &yd(&[1])).unwrap();
        let expected: BTreeMap<_, _> =
            [(yd(&[1, 1]), Laurent::one()), (yd(&[1]), Laurent::one())].into_iter().collect();
        assert_eq!(sc.coeffs, expected);
        let sc = structure_constants(&yd(&[2]), &yd(&[1])).unwrap();
        let expected: BTreeMap<_, _> = [(yd(&[2, 1]), int(1)), (yd(&[2]), int(2))].into_iter().collect();
        assert_eq!(sc.at_one(), expected);
        assert!(matches!(structure_constants(&yd(&[4]), &yd(&[3])), Err(JackError::TooLarge { .. })));
    }

    #[test]
    fn three_times_three() {
        let sc = structure_constants(&yd(&[3]), &yd(&[3])).unwrap();
        let expected = [
            (vec![3], "6*delta^2 + 3"),
            (vec![2, 1], "9*delta"),
            (vec![4], "18*delta"),
            (vec![1, 1, 1], "3"),
            (vec![3, 1], "9"),
            (vec![2, 2], "9"),
            (vec![5], "9"),
            (vec![3, 3], "1"),
        ];
        assert_eq!(sc.delta.len(), expected.len());
        for (rho, text) in expected {
            assert_eq!(sc.delta[&yd(&rho)], Some(parse_poly(text).unwrap()), "{rho:?}");
        }
        assert!(sc.delta_nonnegative_integral());
    }
}
