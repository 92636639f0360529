use num_traits::{One, Zero};

use super::{AlgebraError, Laurent, Monomial, MultiPoly, Rational, Var};

/// `γ = −A + A⁻¹` as a Laurent polynomial.
pub fn gamma_laurent() -> Laurent {
    Laurent::a_pow(-1) - Laurent::a_pow(1)
}

/// Replaces every occurrence of `g` by `−A + A⁻¹`; the remaining variables
/// are kept and carry Laurent coefficients.
pub fn gamma_substitute(f: &MultiPoly) -> MultiPoly<Laurent> {
    let gamma = gamma_laurent();
    let mut powers: Vec<Laurent> = vec![Laurent::one()];
    let mut out = MultiPoly::<Laurent>::zero();
    for (m, c) in f.terms() {
        let (e, rest) = m.split(Var::G);
        while powers.len() <= e as usize {
            let next = powers.last().unwrap() * &gamma;
            powers.push(next);
        }
        out.add_term(rest, powers[e as usize].scale(c));
    }
    out
}

/// Laurent value of a polynomial in `g` alone.
///
/// # Panics
/// If `f` contains a variable other than `g`.
pub fn gamma_univariate_to_laurent(f: &MultiPoly) -> Laurent {
    let sub = gamma_substitute(f);
    assert!(
        sub.terms().all(|(m, _)| m.is_one()),
        "polynomial {f} is not univariate in g"
    );
    sub.coeff(&Monomial::one())
}

/// Rewrites a Laurent polynomial as a polynomial in `g`, matching the
/// extreme `A`-degree against powers of `−A + A⁻¹` from the top down.
pub fn a_to_gamma(f: &Laurent) -> Result<MultiPoly, AlgebraError> {
    let gamma = gamma_laurent();
    let mut rest = f.clone();
    let mut out = MultiPoly::zero();
    while let Some(top) = rest.max_degree() {
        if top < 0 {
            return Err(AlgebraError::NotExpressible(f.to_string()));
        }
        // leading coefficient of γ^top is (−1)^top
        let mut c: Rational = rest.coeff(top);
        if top % 2 == 1 {
            c = -c;
        }
        rest = rest - gamma.pow(top as u32).scale(&c);
        out.add_term(Monomial::from_pairs([(Var::G, top as u32)]), c);
    }
    debug_assert!(rest.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_laurent, parse_poly};

    #[test]
    fn substitution_examples() {
        let g = MultiPoly::var(Var::G);
        assert_eq!(gamma_univariate_to_laurent(&g).to_string(), "-A + A^-1");
        assert_eq!(gamma_univariate_to_laurent(&g.pow(2)).to_string(), "A^2 - 2 + A^-2");
        let f = g.scale(&int(3)) + MultiPoly::one();
        assert_eq!(gamma_univariate_to_laurent(&f).to_string(), "-3*A + 1 + 3*A^-1");
    }

    #[test]
    fn substitution_keeps_other_variables() {
        let f = parse_poly("g*p1 + q1").unwrap();
        let s = gamma_substitute(&f);
        assert_eq!(s.to_string(), "(-A + A^-1)*p1 + q1");
    }

    #[test]
    fn inverse_rewrite_examples() {
        let sq = parse_laurent("A^2 - 2 + A^-2").unwrap();
        assert_eq!(a_to_gamma(&sq).unwrap().to_string(), "g^2");
        let gm = parse_laurent("-A + A^-1").unwrap();
        assert_eq!(a_to_gamma(&gm).unwrap().to_string(), "g");
        let bad = parse_laurent("A + A^-1").unwrap();
        assert!(matches!(a_to_gamma(&bad), Err(AlgebraError::NotExpressible(_))));
        let neg_only = parse_laurent("A^-2").unwrap();
        assert!(a_to_gamma(&neg_only).is_err());
        assert!(a_to_gamma(&Laurent::zero()).unwrap().is_zero());
    }
}
