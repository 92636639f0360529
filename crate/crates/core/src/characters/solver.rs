use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_traits::Zero;

use super::{CharacterError, CharacterSolution, MAX_SOLVER_N};
use crate::algebra::{int, solve_linear, Monomial, MultiPoly, Rational, Var};
use crate::diagrams::{evaluate_family, partitions_up_to, ContentPolynomialFamily};

/// One symmetrized monomial `g^a Σ_{distinct perms} c_1^{e_1} .. c_k^{e_k}`
/// living in slot `k` of a family.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisElement {
    pub k: usize,
    pub gamma_power: u32,
    /// Exponents in decreasing order, zeros included, length `k`.
    pub exponents: Vec<u32>,
    pub poly: MultiPoly,
}

fn exponent_vectors(k: usize, max_sum: u32) -> Vec<Vec<u32>> {
    fn rec(k: usize, max_part: u32, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for e in (0..=max_part.min(budget)).rev() {
            prefix.push(e);
            rec(k, e, budget - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, max_sum, max_sum, &mut Vec::new(), &mut out);
    out
}

/// Basis of the space of families of the given degree: symmetrized
/// monomials in every slot `k ≤ ⌊d/2⌋` with `(g,c)`-degree at most `d − 2k`.
pub fn symmetric_basis(degree: u32) -> Vec<BasisElement> {
    let mut out = Vec::new();
    for k in 0..=degree as usize / 2 {
        let bound = degree - 2 * k as u32;
        for exps in exponent_vectors(k, bound) {
            let used: u32 = exps.iter().sum();
            let mut sym = MultiPoly::zero();
            for perm in exps.iter().copied().permutations(k).unique() {
                let m = Monomial::from_pairs(
                    perm.iter().enumerate().map(|(i, &e)| (Var::C(i as u16 + 1), e)),
                );
                sym.add_term(m, int(1));
            }
            for a in 0..=bound - used {
                let poly = sym.mul_monomial(&int(1), &Monomial::from_pairs([(Var::G, a)]));
                out.push(BasisElement { k, gamma_power: a, exponents: exps.clone(), poly });
            }
        }
    }
    out
}

pub(crate) fn family_from(degree: u32, basis: &[BasisElement], coeffs: &[Rational]) -> ContentPolynomialFamily {
    let mut polys = vec![MultiPoly::zero(); degree as usize / 2 + 1];
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            polys[b.k] = &polys[b.k] + &b.poly.scale(c);
        }
    }
    ContentPolynomialFamily::new(degree, polys).expect("basis elements respect the degree bounds")
}

fn single(degree: u32, b: &BasisElement) -> ContentPolynomialFamily {
    let mut polys = vec![MultiPoly::zero(); degree as usize / 2 + 1];
    polys[b.k] = b.poly.clone();
    ContentPolynomialFamily::new(degree, polys).expect("basis elements respect the degree bounds")
}

/// Solves `(J3)` and `(J4)` for the content polynomials of `Ch_n`, with
/// `(J1)` built into the unknowns.
pub fn solve_character_family(n: u32) -> Result<CharacterSolution, CharacterError> {
    if n == 0 || n > MAX_SOLVER_N {
        return Err(CharacterError::OutOfRange { n, max: MAX_SOLVER_N });
    }
    let degree = n + 1;
    let basis = symmetric_basis(degree);
    let unknowns = basis.len();
    let singles: Vec<_> = basis.iter().map(|b| single(degree, b)).collect();
    let mut rows: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for lambda in partitions_up_to(n - 1) {
        let values: Vec<_> = singles.iter().map(|f| evaluate_family(f, &lambda)).collect();
        let mut by_power: BTreeMap<i32, Vec<Rational>> = BTreeMap::new();
        for (i, v) in values.iter().enumerate() {
            for (e, c) in v.terms() {
                by_power.entry(e).or_insert_with(|| vec![Rational::zero(); unknowns])[i] = c.clone();
            }
        }
        rows.extend(by_power.into_values());
    }
    let mut system: Vec<(Vec<Rational>, Rational)> = rows.into_iter().map(|r| (r, Rational::zero())).collect();
    let j4 = basis
        .iter()
        .position(|b| b.k == 1 && b.gamma_power == 0 && b.exponents == [n - 1])
        .expect("c1^(n-1) is a basis element");
    let mut row = vec![Rational::zero(); unknowns];
    row[j4] = int(1);
    system.push((row, int(n as i64)));
    let equations = system.len();
    let sol = solve_linear(system, unknowns);
    if !sol.consistent {
        return Err(CharacterError::Inconsistent { n, rank: sol.rank, unknowns });
    }
    if !sol.is_unique() {
        return Err(CharacterError::Underdetermined { n, rank_defect: sol.rank_defect() });
    }
    let coeffs = sol.particular.unwrap();
    Ok(CharacterSolution {
        n,
        family: family_from(degree, &basis, &coeffs),
        unknowns,
        equations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::characters::ch3_explicit_family;

    #[test]
    fn basis_sizes() {
        // d = 2: {1, g, g²} ∪ {1}
        assert_eq!(symmetric_basis(2).len(), 4);
        assert_eq!(symmetric_basis(6).len(), 30);
        let b = symmetric_basis(4);
        let mixed = b.iter().find(|e| e.k == 2 && e.exponents == [0, 0]).unwrap();
        assert_eq!(mixed.poly, parse_poly("1").unwrap());
    }

    #[test]
    fn symmetrized_monomials() {
        let b = symmetric_basis(6);
        let e = b.iter().find(|e| e.k == 2 && e.exponents == [1, 0] && e.gamma_power == 1).unwrap();
        assert_eq!(e.poly, parse_poly("g*c1 + g*c2").unwrap());
    }

    #[test]
    fn first_solutions() {
        let s1 = solve_character_family(1).unwrap();
        assert!(s1.family.poly(0).is_zero());
        assert_eq!(s1.family.poly(1), &parse_poly("1").unwrap());
        let s2 = solve_character_family(2).unwrap();
        assert!(s2.family.poly(0).is_zero());
        assert_eq!(s2.family.poly(1), &parse_poly("2*c1 + 2*g").unwrap());
        assert_eq!(solve_character_family(3).unwrap().family, ch3_explicit_family());
    }

    #[test]
    fn range_guard() {
        assert!(matches!(solve_character_family(0), Err(CharacterError::OutOfRange { .. })));
        assert!(matches!(solve_character_family(6), Err(CharacterError::OutOfRange { .. })));
    }
}
