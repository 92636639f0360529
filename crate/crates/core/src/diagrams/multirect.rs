use num_traits::{One, Zero};

use super::family::ContentPolynomialFamily;
use super::young::YoungDiagram;
use super::DiagramError;
use crate::algebra::{
    a_to_gamma, binomial, faulhaber_range_sum, gamma_laurent, int, AlgebraError, Laurent, Monomial,
    MultiPoly, Rational, Var,
};

/// Anisotropic multirectangular diagram `(−Ap) × (A⁻¹q)` with `ℓ` row groups.
///
/// Group `j` has `−A·p_j` rows of length `A⁻¹·q_j`, stacked top to bottom
/// with strictly decreasing lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiRect {
    ell: usize,
}

impl MultiRect {
    pub fn new(ell: usize) -> Option<Self> {
        (ell >= 1).then_some(MultiRect { ell })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    fn laurent_var(v: Var, scale_exp: i32, sign: i64) -> MultiPoly<Laurent> {
        MultiPoly::term(Laurent::monomial(int(sign), scale_exp), Monomial::var(v))
    }

    /// Number of rows in group `j` (1-based): `−A·p_j`.
    pub fn rows(&self, j: u16) -> MultiPoly<Laurent> {
        Self::laurent_var(Var::P(j), 1, -1)
    }

    /// Row length in group `j`: `A⁻¹·q_j`.
    pub fn length(&self, j: u16) -> MultiPoly<Laurent> {
        Self::laurent_var(Var::Q(j), -1, 1)
    }

    /// `Σ_{□} c(□)^e` over all boxes, for `e = 0..=max_e`, as polynomials in
    /// `p, q` with Laurent coefficients.
    pub fn content_power_sums(&self, max_e: usize) -> Vec<MultiPoly<Laurent>> {
        let mut sums = vec![MultiPoly::<Laurent>::zero(); max_e + 1];
        let mut offset = MultiPoly::<Laurent>::zero();
        for j in 1..=self.ell as u16 {
            let rows = self.rows(j);
            let len = self.length(j);
            let zero = MultiPoly::<Laurent>::zero();
            let x_sums: Vec<_> = (0..=max_e).map(|i| faulhaber_range_sum(i, &zero, &len)).collect();
            let y_sums: Vec<_> = (0..=max_e).map(|i| faulhaber_range_sum(i, &offset, &rows)).collect();
            // c^e = Σ_i binom(e,i) (A x)^i (−A⁻¹ y)^{e−i}
            for (e, total) in sums.iter_mut().enumerate() {
                for i in 0..=e {
                    let sign = if (e - i) % 2 == 1 { -1 } else { 1 };
                    let coeff = Rational::from_integer(binomial(e as u64, i as u64)) * int(sign);
                    let factor = Laurent::monomial(coeff, i as i32 - (e - i) as i32);
                    let term = (&x_sums[i] * &y_sums[e - i]).scale(&factor);
                    *total = &*total + &term;
                }
            }
            offset = &offset + &rows;
        }
        sums
    }
}

fn laurent_coefficients_to_gamma(f: &MultiPoly<Laurent>) -> Result<MultiPoly, AlgebraError> {
    let mut out = MultiPoly::zero();
    for (m, c) in f.terms() {
        let g = a_to_gamma(c)?;
        out = out + g.mul_monomial(&Rational::one(), m);
    }
    Ok(out)
}

/// Stanley polynomial of `fam`: its value on `(−Ap) × (A⁻¹q)` as a
/// polynomial in `g, p_1..p_ℓ, q_1..q_ℓ`.
pub fn evaluate_family_multirect(
    fam: &ContentPolynomialFamily,
    rect: MultiRect,
) -> Result<MultiPoly, AlgebraError> {
    let sums = rect.content_power_sums(fam.degree() as usize);
    let gamma = gamma_laurent();
    let mut total = MultiPoly::<Laurent>::zero();
    for (k, p) in fam.polys().iter().enumerate() {
        for (m, c) in p.terms() {
            let mut value = MultiPoly::constant(gamma.pow(m.exponent(Var::G)).scale(c));
            for i in 1..=k as u16 {
                value = &value * &sums[m.exponent(Var::C(i)) as usize];
            }
            total = total + value;
        }
    }
    laurent_coefficients_to_gamma(&total)
}

/// Values of `p_j, q_j` that turn `(−Ap) × (A⁻¹q)` into a concrete diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct MultirectSubstitution {
    pub p: Vec<Laurent>,
    pub q: Vec<Laurent>,
}

impl MultirectSubstitution {
    pub fn ell(&self) -> usize {
        self.p.len()
    }

    /// Evaluates a polynomial in `g, p_j, q_j`; variables beyond `ℓ` are zero.
    pub fn apply(&self, f: &MultiPoly) -> Laurent {
        let gamma = gamma_laurent();
        f.map_coeffs(|c| Laurent::constant(c.clone())).eval(|v| match v {
            Var::G => gamma.clone(),
            Var::P(j) => self.p.get(j as usize - 1).cloned().unwrap_or_else(Laurent::zero),
            Var::Q(j) => self.q.get(j as usize - 1).cloned().unwrap_or_else(Laurent::zero),
            other => panic!("variable {other} has no multirectangular value"),
        })
    }
}

/// Writes `λ = (s_1^{r_1} .. s_ℓ^{r_ℓ})` and returns `p_j = −A⁻¹ r_j`,
/// `q_j = A s_j`.
pub fn concrete_to_multirect(lambda: &YoungDiagram) -> Result<MultirectSubstitution, DiagramError> {
    if lambda.is_empty() {
        return Err(DiagramError::EmptyDiagram);
    }
    let mut groups: Vec<(u32, u32)> = Vec::new();
    for &part in lambda.parts() {
        match groups.last_mut() {
            Some((s, r)) if *s == part => *r += 1,
            _ => groups.push((part, 1)),
        }
    }
    Ok(MultirectSubstitution {
        p: groups.iter().map(|&(_, r)| Laurent::monomial(int(-(r as i64)), -1)).collect(),
        q: groups.iter().map(|&(s, _)| Laurent::monomial(int(s as i64), 1)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_laurent, parse_poly};
    use crate::diagrams::{evaluate_family, partitions_up_to};

    fn family(degree: u32, polys: &[&str]) -> ContentPolynomialFamily {
        ContentPolynomialFamily::new(degree, polys.iter().map(|p| parse_poly(p).unwrap()).collect()).unwrap()
    }

    fn rect(ell: usize) -> MultiRect {
        MultiRect::new(ell).unwrap()
    }

    fn yd(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    #[test]
    fn ch1_and_ch2() {
        let ch1 = family(2, &["0", "1"]);
        assert_eq!(evaluate_family_multirect(&ch1, rect(1)).unwrap(), parse_poly("-p1*q1").unwrap());
        let ch2 = family(3, &["0", "2*c1 + 2*g"]);
        assert_eq!(
            evaluate_family_multirect(&ch2, rect(1)).unwrap(),
            parse_poly("-p1^2*q1 - p1*q1^2 - g*p1*q1").unwrap()
        );
    }

    #[test]
    fn ch3_two_rectangles() {
        let ch3 = family(4, &["0", "3*c1^2 + 9*g*c1 + 6*g^2 + 3/2", "-3/2"]);
        let expected = parse_poly(
            "p1^3*q1 + 3*p1^2*q1^2 + p1*q1^3 + 3*p1^2*p2*q2 + 3*p1*p2^2*q2 + p2^3*q2 \
             + 3*p1*p2*q1*q2 + 3*p1*p2*q2^2 + 3*p2^2*q2^2 + p2*q2^3 + 3*p1^2*q1*g \
             + 3*p1*q1^2*g + 6*p1*p2*q2*g + 3*p2^2*q2*g + 3*p2*q2^2*g + 2*p1*q1*g^2 \
             + 2*p2*q2*g^2 + p1*q1 + p2*q2",
        )
        .unwrap();
        assert_eq!(evaluate_family_multirect(&ch3, rect(2)).unwrap(), -expected);
    }

    #[test]
    fn substitution_examples() {
        let s = concrete_to_multirect(&yd(&[2])).unwrap();
        assert_eq!(s.p, vec![parse_laurent("-A^-1").unwrap()]);
        assert_eq!(s.q, vec![parse_laurent("2*A").unwrap()]);
        let s = concrete_to_multirect(&yd(&[2, 1])).unwrap();
        assert_eq!(s.ell(), 2);
        assert_eq!(s.q[1], parse_laurent("A").unwrap());
        assert_eq!(concrete_to_multirect(&YoungDiagram::empty()), Err(DiagramError::EmptyDiagram));

        let ch2 = parse_poly("-p1^2*q1 - p1*q1^2 - g*p1*q1").unwrap();
        assert_eq!(s.apply(&ch2), concrete_to_multirect(&yd(&[2, 1])).unwrap().apply(&ch2));
        let two = concrete_to_multirect(&yd(&[2])).unwrap();
        assert_eq!(two.apply(&ch2), parse_laurent("2*A").unwrap());
    }

    #[test]
    fn symbolic_matches_concrete() {
        let families = [
            family(4, &["0", "3*c1^2 + 9*g*c1 + 6*g^2 + 3/2", "-3/2"]),
            family(6, &["g^5 - 2*g", "c1^3 - g*c1^2 + 7", "c1*c2 + g*c1 + g*c2"]),
        ];
        for fam in &families {
            let polys: Vec<_> = (1..=3).map(|l| evaluate_family_multirect(fam, rect(l)).unwrap()).collect();
            for lambda in partitions_up_to(6).into_iter().filter(|l| !l.is_empty()) {
                let sub = concrete_to_multirect(&lambda).unwrap();
                if sub.ell() > 3 {
                    continue;
                }
                assert_eq!(sub.apply(&polys[sub.ell() - 1]), evaluate_family(fam, &lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn odd_powers_of_a_are_rejected() {
        let mut bad = MultiPoly::<Laurent>::zero();
        bad.add_term(Monomial::one(), Laurent::a_pow(-1));
        assert!(laurent_coefficients_to_gamma(&bad).is_err());
    }
}
