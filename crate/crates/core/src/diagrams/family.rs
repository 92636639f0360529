use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::young::{content, YoungDiagram};
use crate::algebra::{gamma_laurent, parse_poly, Laurent, MultiPoly, ParseError, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("p_{k} has degree {found}, above the bound {bound}")]
    DegreeTooHigh { k: usize, found: u32, bound: u32 },
    #[error("p_{k} uses variable {var}, outside g, c1..c{k}")]
    ForeignVariable { k: usize, var: String },
    #[error("p_{k} is not symmetric in c1..c{k}")]
    NotSymmetric { k: usize },
    #[error("family of degree {degree} has at most {max} content polynomials, got {got}")]
    TooManyPolynomials { degree: u32, max: usize, got: usize },
    #[error("polynomial p_{k}: {source}")]
    Parse { k: usize, source: ParseError },
}

/// The sequence `p_0, .., p_K` (`K = ⌊d/2⌋`) of content polynomials that
/// defines a polynomial function on Young diagrams:
///
/// `F(λ) = Σ_k Σ_{□_1..□_k ∈ λ} p_k(γ, c(□_1), .., c(□_k))`
///
/// where the boxes of a tuple range independently (repetition allowed).
/// Each `p_k` lives in `ℚ[g, c1..ck]`, has degree at most `d − 2k` and is
/// symmetric in the `c`s.
#[derive(Debug, Clone, PartialEq)]
pub struct ContentPolynomialFamily {
    degree: u32,
    polys: Vec<MultiPoly>,
}

impl ContentPolynomialFamily {
    pub fn new(degree: u32, mut polys: Vec<MultiPoly>) -> Result<Self, FamilyError> {
        let max = degree as usize / 2 + 1;
        if polys.len() > max {
            return Err(FamilyError::TooManyPolynomials { degree, max, got: polys.len() });
        }
        polys.resize(max, MultiPoly::zero());
        for (k, p) in polys.iter().enumerate() {
            for v in p.variables() {
                let ok = matches!(v, Var::G) || matches!(v, Var::C(i) if (i as usize) <= k);
                if !ok {
                    return Err(FamilyError::ForeignVariable { k, var: v.to_string() });
                }
            }
            let bound = degree - 2 * k as u32;
            if let Some(found) = p.total_degree() {
                if found > bound {
                    return Err(FamilyError::DegreeTooHigh { k, found, bound });
                }
            }
            for i in 1..k as u16 {
                let swapped = p.map_vars(|v| match v {
                    Var::C(j) if j == i => Var::C(i + 1),
                    Var::C(j) if j == i + 1 => Var::C(i),
                    other => other,
                });
                if &swapped != p {
                    return Err(FamilyError::NotSymmetric { k });
                }
            }
        }
        Ok(ContentPolynomialFamily { degree, polys })
    }

    pub fn zero(degree: u32) -> Self {
        ContentPolynomialFamily { degree, polys: vec![MultiPoly::zero(); degree as usize / 2 + 1] }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn poly(&self, k: usize) -> &MultiPoly {
        &self.polys[k]
    }

    /// Keeps only the terms of `p_k` of degree exactly `top − 2k`.
    pub fn homogeneous_top(&self, top: u32) -> Self {
        let polys = self
            .polys
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let want = top as i64 - 2 * k as i64;
                p.filter_terms(|m| m.degree() as i64 == want)
            })
            .collect();
        ContentPolynomialFamily { degree: self.degree, polys }
    }

    /// Pointwise sum; the result has the larger of the two degrees.
    pub fn add(&self, other: &Self) -> Self {
        let degree = self.degree.max(other.degree);
        let mut polys = vec![MultiPoly::zero(); degree as usize / 2 + 1];
        for (k, slot) in polys.iter_mut().enumerate() {
            if let Some(p) = self.polys.get(k) {
                *slot = &*slot + p;
            }
            if let Some(p) = other.polys.get(k) {
                *slot = &*slot + p;
            }
        }
        ContentPolynomialFamily { degree, polys }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ContentPolynomialFamily {
            degree: self.degree,
            polys: self.polys.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// `{k → canonical polynomial text}`, omitting zero polynomials.
    pub fn to_text_map(&self) -> BTreeMap<usize, String> {
        self.polys
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(k, p)| (k, p.to_string()))
            .collect()
    }

    pub fn from_text_map(degree: u32, map: &BTreeMap<usize, String>) -> Result<Self, FamilyError> {
        let len = map.keys().max().map_or(0, |&k| k + 1);
        let mut polys = vec![MultiPoly::zero(); len];
        for (&k, text) in map {
            polys[k] = parse_poly(text).map_err(|source| FamilyError::Parse { k, source })?;
        }
        ContentPolynomialFamily::new(degree, polys)
    }
}

/// `S_e = Σ_{□ ∈ λ} c(□)^e` for `e = 0..=max_e`.
pub fn content_power_sums(lambda: &YoungDiagram, max_e: usize) -> Vec<Laurent> {
    let mut sums = vec![Laurent::zero(); max_e + 1];
    for cell in lambda.cells() {
        let c = content(cell);
        let mut power = Laurent::one();
        for s in sums.iter_mut() {
            *s = &*s + &power;
            power = &power * &c;
        }
    }
    sums
}

/// Evaluates the polynomial function defined by `fam` on `λ`.
///
/// Because the boxes of a tuple range independently, each monomial
/// `g^a c_1^{e_1} .. c_k^{e_k}` sums to `γ^a S_{e_1} .. S_{e_k}`.
pub fn evaluate_family(fam: &ContentPolynomialFamily, lambda: &YoungDiagram) -> Laurent {
    let sums = content_power_sums(lambda, fam.degree as usize);
    let gamma = gamma_laurent();
    let mut total = Laurent::zero();
    for (k, p) in fam.polys.iter().enumerate() {
        for (m, c) in p.terms() {
            let mut value = gamma.pow(m.exponent(Var::G)).scale(c);
            for i in 1..=k as u16 {
                value = &value * &sums[m.exponent(Var::C(i)) as usize];
            }
            total = total + value;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_laurent, rat};
    use crate::diagrams::{partitions_up_to, Cell};

    fn yd(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    fn ch3() -> ContentPolynomialFamily {
        ContentPolynomialFamily::new(
            4,
            vec![
                MultiPoly::zero(),
                parse_poly("3*c1^2 + 9*g*c1 + 6*g^2 + 3/2").unwrap(),
                parse_poly("-3/2").unwrap(),
            ],
        )
        .unwrap()
    }

    /// Direct sum over ordered tuples of boxes; independent of the
    /// power-sum factorisation used by `evaluate_family`.
    fn brute_force(fam: &ContentPolynomialFamily, lambda: &YoungDiagram) -> Laurent {
        let cells: Vec<Cell> = lambda.cells().collect();
        let gamma = gamma_laurent();
        let mut total = Laurent::zero();
        for (k, p) in fam.polys().iter().enumerate() {
            let mut idx = vec![0usize; k];
            loop {
                if k > 0 && cells.is_empty() {
                    break;
                }
                let value = p.map_coeffs(|c| Laurent::constant(c.clone())).eval(|v| match v {
                    Var::G => gamma.clone(),
                    Var::C(i) => content(cells[idx[i as usize - 1]]),
                    _ => unreachable!(),
                });
                total = total + value;
                let mut pos = 0;
                while pos < k {
                    idx[pos] += 1;
                    if idx[pos] < cells.len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
                if pos == k {
                    break;
                }
            }
        }
        total
    }

    #[test]
    fn ch3_small_values() {
        assert!(evaluate_family(&ch3(), &yd(&[1])).is_zero());
        assert!(evaluate_family(&ch3(), &yd(&[2])).is_zero());
        assert_eq!(evaluate_family(&ch3(), &yd(&[2, 1])), parse_laurent("-3").unwrap());
        assert!(evaluate_family(&ContentPolynomialFamily::zero(4), &yd(&[3, 2])).is_zero());
    }

    #[test]
    fn factorised_sum_matches_tuple_enumeration() {
        for lambda in partitions_up_to(5) {
            assert_eq!(evaluate_family(&ch3(), &lambda), brute_force(&ch3(), &lambda), "{lambda}");
        }
    }

    #[test]
    fn linear_in_the_family() {
        let other = ContentPolynomialFamily::new(
            4,
            vec![parse_poly("g^3").unwrap(), parse_poly("c1^2 - g").unwrap()],
        )
        .unwrap();
        let combo = ch3().scale(&rat(2, 3)).add(&other.scale(&int(-5)));
        for lambda in partitions_up_to(5) {
            let lhs = evaluate_family(&combo, &lambda);
            let rhs = evaluate_family(&ch3(), &lambda).scale(&rat(2, 3))
                + evaluate_family(&other, &lambda).scale(&int(-5));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn validation() {
        let bad_degree = ContentPolynomialFamily::new(2, vec![MultiPoly::zero(), parse_poly("c1^2").unwrap()]);
        assert!(matches!(bad_degree, Err(FamilyError::DegreeTooHigh { k: 1, .. })));
        let asym = ContentPolynomialFamily::new(
            6,
            vec![MultiPoly::zero(), MultiPoly::zero(), parse_poly("c1").unwrap()],
        );
        assert!(matches!(asym, Err(FamilyError::NotSymmetric { k: 2 })));
        let foreign = ContentPolynomialFamily::new(4, vec![MultiPoly::zero(), parse_poly("c2").unwrap()]);
        assert!(matches!(foreign, Err(FamilyError::ForeignVariable { .. })));
        let sym = ContentPolynomialFamily::new(
            6,
            vec![MultiPoly::zero(), MultiPoly::zero(), parse_poly("c1 + c2").unwrap()],
        );
        assert!(sym.is_ok());
    }

    #[test]
    fn text_map_round_trip() {
        let fam = ch3();
        let map = fam.to_text_map();
        assert_eq!(map[&1], "6*g^2 + 9*g*c1 + 3*c1^2 + 3/2");
        assert_eq!(ContentPolynomialFamily::from_text_map(4, &map).unwrap(), fam);
    }
}
