use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{int, Laurent, MultiPoly, Rational, Var};
use crate::diagrams::{iterated_delta, partitions_up_to, sym_extend, ContentPolynomialFamily, YoungDiagram};

/// One equation of the vanishing system or of its diagnostic identities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VanishingCheck {
    /// `eq3.1`, `eq3.3`, `eq3.4`, `eq3.5` or `eq3.5-diagonal`.
    pub equation: String,
    pub k: usize,
    #[serde(serialize_with = "as_text")]
    pub lambda: YoungDiagram,
    pub pass: bool,
    #[serde(serialize_with = "as_text")]
    pub lhs: Rational,
    #[serde(serialize_with = "opt_text")]
    pub rhs: Option<Rational>,
}

fn as_text<T: ToString, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn opt_text<T: ToString, S: serde::Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VanishingReport {
    pub n: u32,
    pub checks: Vec<VanishingCheck>,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VanishingCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Left-hand sides of the vanishing equations only, in report order.
    pub fn vanishing_lhs(&self) -> Vec<(usize, YoungDiagram, Rational)> {
        self.checks
            .iter()
            .filter(|c| c.equation == "eq3.1")
            .map(|c| (c.k, c.lambda.clone(), c.lhs.clone()))
            .collect()
    }
}

fn padded(lambda: &YoungDiagram, k: usize) -> Vec<i64> {
    let mut v: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    v.resize(k, 0);
    v
}

/// `[A^e] Δ_{λ_1} .. Δ_{λ_k} G^sym(args)`
fn difference_coeff<G>(g: &G, args: &[i64], e: i32) -> Rational
where
    G: Fn(&YoungDiagram) -> Laurent + Sync + ?Sized,
{
    let js: Vec<usize> = (1..=args.len()).collect();
    let f = |xi: &[i64]| sym_extend(g, xi);
    iterated_delta(f, &js)(args).coeff(e)
}

fn eval_top(p: &MultiPoly, cs: &[Rational]) -> Rational {
    p.eval(|v| match v {
        Var::G => int(-1),
        Var::C(i) => cs[i as usize - 1].clone(),
        other => panic!("unexpected variable {other}"),
    })
}

/// Checks `[A^{n+1−2k}] Δ_{λ_1} .. Δ_{λ_k} G^sym(λ_1, .., λ_k) = 0` for
/// every `k` and every `λ` with at most `k` rows and `|λ| ≤ n − 1 − k`.
///
/// When `family` (the content polynomials of `G`) is given, also checks
/// how the top-degree parts `p_k^top` enter the left-hand sides for
/// `k ≤ 2`, including the modified identity on the diagonal `λ_1 = λ_2`.
pub fn verify_vanishing_system<G>(g: &G, n: u32, family: Option<&ContentPolynomialFamily>) -> VanishingReport
where
    G: Fn(&YoungDiagram) -> Laurent + Sync + ?Sized,
{
    let mut cases: Vec<(usize, YoungDiagram)> = Vec::new();
    for k in 0..n as usize {
        for lambda in partitions_up_to(n - 1 - k as u32) {
            if lambda.rows() <= k {
                cases.push((k, lambda));
            }
        }
    }
    let mut checks: Vec<VanishingCheck> = cases
        .into_par_iter()
        .map(|(k, lambda)| {
            let lhs = difference_coeff(g, &padded(&lambda, k), n as i32 + 1 - 2 * k as i32);
            VanishingCheck {
                equation: "eq3.1".into(),
                k,
                pass: lhs.is_zero(),
                lambda,
                lhs,
                rhs: Some(Rational::zero()),
            }
        })
        .collect();
    if let Some(fam) = family {
        checks.extend(diagnostics(g, n, &fam.homogeneous_top(n + 1)));
    }
    VanishingReport { n, checks }
}

fn diagnostics<G>(g: &G, n: u32, top: &ContentPolynomialFamily) -> Vec<VanishingCheck>
where
    G: Fn(&YoungDiagram) -> Laurent + Sync + ?Sized,
{
    let mut cases: Vec<(&str, usize, Vec<u32>)> = vec![("eq3.3", 0, vec![])];
    for l1 in 0..=n {
        cases.push(("eq3.4", 1, vec![l1]));
    }
    if n >= 3 {
        for l1 in 0..=n {
            for l2 in 0..=l1.min(n - l1) {
                let id = if l1 == l2 { "eq3.5-diagonal" } else { "eq3.5" };
                cases.push((id, 2, vec![l1, l2]));
            }
        }
    }
    let zero = MultiPoly::zero();
    let p = |k: usize| top.polys().get(k).unwrap_or(&zero);
    cases
        .into_par_iter()
        .map(|(id, k, parts)| {
            let args: Vec<i64> = parts.iter().map(|&x| x as i64).collect();
            let lhs = difference_coeff(g, &args, n as i32 + 1 - 2 * k as i32);
            let cs: Vec<Rational> = parts.iter().map(|&x| int(x as i64 + 1)).collect();
            let rhs = match k {
                0 => eval_top(p(0), &[]),
                1 => eval_top(p(1), &cs),
                _ => {
                    let mut r = int(2) * eval_top(p(2), &cs);
                    if parts[0] == parts[1] {
                        r -= eval_top(&p(1).derivative(Var::C(1)), &cs[..1]);
                    }
                    r
                }
            };
            VanishingCheck {
                equation: id.into(),
                k,
                lambda: YoungDiagram::from_unsorted(parts),
                pass: lhs == rhs,
                lhs,
                rhs: Some(rhs),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{ch3_explicit_family, solve_character_family};
    use crate::diagrams::evaluate_family;

    #[test]
    fn ch3_family_satisfies_the_system() {
        let fam = ch3_explicit_family();
        let g = |l: &YoungDiagram| evaluate_family(&fam, l);
        let report = verify_vanishing_system(&g, 3, Some(&fam));
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        assert!(report.checks.iter().any(|c| c.equation == "eq3.5-diagonal"));
    }

    #[test]
    fn naive_diagonal_identity_fails() {
        // Without the derivative term the diagonal identity is false.
        let sol = solve_character_family(3).unwrap();
        let top = sol.family.homogeneous_top(4);
        let g = |l: &YoungDiagram| evaluate_family(&sol.family, l);
        let args = [1i64, 1];
        let lhs = difference_coeff(&g, &args, 0);
        let naive = int(2) * eval_top(top.poly(2), &[int(2), int(2)]);
        assert_ne!(lhs, naive);
    }

    #[test]
    fn subleading_terms_do_not_matter() {
        let sol = solve_character_family(4).unwrap();
        let extra = ContentPolynomialFamily::new(
            4,
            vec![
                crate::algebra::parse_poly("g^4 - 3*g").unwrap(),
                crate::algebra::parse_poly("c1^2 - 5*c1*g").unwrap(),
                crate::algebra::parse_poly("7").unwrap(),
            ],
        )
        .unwrap();
        let perturbed = sol.family.add(&extra);
        let g0 = |l: &YoungDiagram| evaluate_family(&sol.family, l);
        let g1 = |l: &YoungDiagram| evaluate_family(&perturbed, l);
        let r0 = verify_vanishing_system(&g0, 4, None);
        let r1 = verify_vanishing_system(&g1, 4, None);
        assert!(r0.passed());
        assert_eq!(r0.vanishing_lhs(), r1.vanishing_lhs());
    }
}
