//! One test per acceptance criterion. Each prints a single
//! `criterion N: PASS|FAIL` line (visible with `--nocapture`) and asserts.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use jackmaps::algebra::{homogeneous_part, int, parse_poly, rat, MultiPoly, Rational};
use jackmaps::characters::{
    ch3_explicit_family, solve_character_family, stanley_polynomial, symmetric_basis, verify_vanishing_system,
};
use jackmaps::diagrams::{evaluate_family, partitions_up_to, ContentPolynomialFamily, YoungDiagram};
use jackmaps::jack_oracle::{jack_character, jack_inner_product, jack_j, normalized_character, structure_constants};
use jackmaps::nonoriented_maps::{build_bijection, count_s1_s2};
use jackmaps::oriented_maps::{ch_a1_one_face, ch_top_concrete, ch_top_maps};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, name: &str, failures: &[String], elapsed: Duration, limit: Option<Duration>) {
    let slow = limit.is_some_and(|l| elapsed > l);
    let pass = failures.is_empty() && !slow;
    println!(
        "criterion {id} ({name}): {} in {:.2?}{}",
        if pass { "PASS" } else { "FAIL" },
        elapsed,
        if slow { " (over time limit)" } else { "" }
    );
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(pass, "criterion {id} failed: {failures:?}");
}

fn yd(p: &[u32]) -> YoungDiagram {
    YoungDiagram::new(p.to_vec()).unwrap()
}

const TOP: &str = "p1^3*q1 + 3*p1^2*q1^2 + p1*q1^3 + 3*p1^2*p2*q2 + 3*p1*p2^2*q2 + p2^3*q2 \
    + 3*p1*p2*q1*q2 + 3*p1*p2*q2^2 + 3*p2^2*q2^2 + p2*q2^3 + 3*p1^2*q1*g + 3*p1*q1^2*g \
    + 6*p1*p2*q2*g + 3*p2^2*q2*g + 3*p2*q2^2*g + 2*p1*q1*g^2 + 2*p2*q2*g^2";

fn term_list(p: &MultiPoly) -> Vec<String> {
    p.terms().map(|(m, c)| format!("{c} {m}")).collect()
}

#[test]
fn criterion_01_two_rectangle_stanley_polynomial() {
    let start = Instant::now();
    let expected = -(parse_poly(TOP).unwrap() + parse_poly("p1*q1 + p2*q2").unwrap());
    let got = stanley_polynomial(&solve_character_family(3).unwrap(), 2).unwrap();
    let mut failures = Vec::new();
    if expected.len() != 19 {
        failures.push(format!("expected polynomial has {} terms", expected.len()));
    }
    if term_list(&got) != term_list(&expected) {
        failures.push(format!("got {got}"));
    }
    report(1, "Stanley polynomial of Ch_3 on two rectangles", &failures, start.elapsed(), Some(Duration::from_secs(10)));
}

#[test]
fn criterion_02_map_sum_top_degree() {
    let start = Instant::now();
    let got = ch_top_maps(3, 2).unwrap();
    let expected = -parse_poly(TOP).unwrap();
    let failures = if got == expected { vec![] } else { vec![format!("got {got}")] };
    report(2, "map sum equals top-degree part for n=3, two rectangles", &failures, start.elapsed(), Some(Duration::from_secs(5)));
}

#[test]
fn criterion_03_solver_recovers_ch3_family() {
    let start = Instant::now();
    let sol = solve_character_family(3).unwrap();
    let c1g = parse_poly("c1 + g").unwrap();
    let c12g = parse_poly("c1 + 2*g").unwrap();
    let p1 = (&c1g * &c12g).scale(&int(3)) + MultiPoly::constant(rat(3, 2));
    let p2 = MultiPoly::constant(rat(-3, 2));
    let mut failures = Vec::new();
    if !sol.family.poly(0).is_zero() {
        failures.push(format!("p0 = {}", sol.family.poly(0)));
    }
    if sol.family.poly(1) != &p1 {
        failures.push(format!("p1 = {}", sol.family.poly(1)));
    }
    if sol.family.poly(2) != &p2 {
        failures.push(format!("p2 = {}", sol.family.poly(2)));
    }
    if sol.family.degree() != 4 {
        failures.push(format!("degree {}", sol.family.degree()));
    }
    report(3, "content polynomials of Ch_3 from the linear system", &failures, start.elapsed(), None);
}

#[test]
fn criterion_04_oracle_agreement_and_vanishing() {
    let start = Instant::now();
    let fam = ch3_explicit_family();
    let mut failures = Vec::new();
    let diagrams = partitions_up_to(7);
    for lambda in &diagrams {
        let oracle = jack_character(&yd(&[3]), lambda).unwrap();
        let family = evaluate_family(&fam, lambda);
        if oracle != family {
            failures.push(format!("[{lambda}] oracle {oracle} vs family {family}"));
        }
    }
    for n in 1..=5u32 {
        for lambda in partitions_up_to(n - 1) {
            let v = jack_character(&yd(&[n]), &lambda).unwrap();
            if !v.is_zero() {
                failures.push(format!("Ch_{n}[{lambda}] = {v}"));
            }
        }
    }
    println!("    compared {} diagrams", diagrams.len());
    report(4, "oracle Ch_3 equals the explicit family; vanishing below size n", &failures, start.elapsed(), None);
}

#[test]
fn criterion_05_one_face_maps_at_a_equal_one() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=5u32 {
        for lambda in partitions_up_to(7) {
            let maps = ch_a1_one_face(n as usize, &lambda).unwrap();
            let mn = normalized_character(&yd(&[n]), &lambda);
            if maps != mn {
                failures.push(format!("n={n} [{lambda}]: maps {maps} vs characters {mn}"));
            }
        }
    }
    for (lambda, v) in [(vec![3], 6), (vec![2, 1], -3), (vec![1], 0)] {
        let got = ch_a1_one_face(3, &yd(&lambda)).unwrap();
        if got != int(v) {
            failures.push(format!("spot [{lambda:?}] = {got}, expected {v}"));
        }
    }
    report(5, "one-face map sum equals normalized characters at A=1", &failures, start.elapsed(), None);
}

#[test]
fn criterion_06_structure_constants_three_three() {
    let start = Instant::now();
    let sc = structure_constants(&yd(&[3]), &yd(&[3])).unwrap();
    let expected: BTreeMap<YoungDiagram, MultiPoly> = [
        (vec![3], "6*delta^2 + 3"),
        (vec![2, 1], "9*delta"),
        (vec![4], "18*delta"),
        (vec![1, 1, 1], "3"),
        (vec![3, 1], "9"),
        (vec![2, 2], "9"),
        (vec![5], "9"),
        (vec![3, 3], "1"),
    ]
    .into_iter()
    .map(|(p, t)| (yd(&p), parse_poly(t).unwrap()))
    .collect();
    let mut failures = Vec::new();
    if sc.delta.len() != expected.len() {
        failures.push(format!("{} nonzero coefficients", sc.delta.len()));
    }
    for (rho, want) in &expected {
        match sc.delta.get(rho) {
            Some(Some(got)) if got == want => {}
            other => failures.push(format!("[{rho}] {other:?}, expected {want}")),
        }
    }
    for (rho, p) in &sc.delta {
        let ok = p.as_ref().is_some_and(|p| p.terms().all(|(_, c)| c.is_integer() && *c >= Rational::from_integer(0.into())));
        if !ok {
            failures.push(format!("[{rho}] is not a non-negative integral polynomial in delta"));
        }
    }
    report(6, "structure constants of Ch_3 * Ch_3", &failures, start.elapsed(), None);
}

#[test]
fn criterion_07_top_degree_routes_agree() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=5u32 {
        let sol = solve_character_family(n).unwrap();
        for ell in 1..=2 {
            let solver = homogeneous_part(&stanley_polynomial(&sol, ell).unwrap(), n + 1);
            let maps = ch_top_maps(n as usize, ell).unwrap();
            if solver != maps {
                failures.push(format!("n={n} l={ell}: solver {solver} vs maps {maps}"));
            }
        }
    }
    report(7, "top-degree Stanley polynomial equals the map sum, n<=5", &failures, start.elapsed(), Some(Duration::from_secs(60)));
}

fn random_family(degree: u32, rng: &mut ChaCha8Rng) -> ContentPolynomialFamily {
    let basis = symmetric_basis(degree);
    let mut polys = vec![MultiPoly::zero(); degree as usize / 2 + 1];
    for b in basis {
        let c = rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        polys[b.k] = &polys[b.k] + &b.poly.scale(&c);
    }
    ContentPolynomialFamily::new(degree, polys).unwrap()
}

#[test]
fn criterion_08_vanishing_system() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 1..=4u32 {
        let mu = yd(&[n]);
        let sol = solve_character_family(n).unwrap();
        let oracle = |l: &YoungDiagram| jack_character(&mu, l).unwrap();
        let r = verify_vanishing_system(&oracle, n, Some(&sol.family));
        failures.extend(r.failures().map(|c| format!("oracle n={n} {} k={} [{}] lhs={}", c.equation, c.k, c.lambda, c.lhs)));
        if n >= 3 {
            let diagonal = r.checks.iter().filter(|c| c.equation == "eq3.5-diagonal").count();
            if diagonal == 0 {
                failures.push(format!("n={n}: no diagonal checks ran"));
            }
        }
        let maps = |l: &YoungDiagram| ch_top_concrete(n as usize, l).unwrap();
        let base = verify_vanishing_system(&maps, n, None);
        failures.extend(base.failures().map(|c| format!("maps n={n} k={} [{}] lhs={}", c.k, c.lambda, c.lhs)));
        for trial in 0..3 {
            let extra = random_family(n, &mut rng);
            let g = |l: &YoungDiagram| ch_top_concrete(n as usize, l).unwrap() + evaluate_family(&extra, l);
            let r = verify_vanishing_system(&g, n, None);
            if r.vanishing_lhs() != base.vanishing_lhs() {
                failures.push(format!("n={n} trial {trial}: a degree-{n} perturbation changed the left-hand sides"));
            }
        }
    }
    report(8, "vanishing system for the oracle and the map sum", &failures, start.elapsed(), None);
}

#[test]
fn criterion_09_counting_identity_and_bijection() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (n, want) in [(1, Some(1)), (2, Some(6)), (3, Some(78)), (4, None)] {
        let c = count_s1_s2(n).unwrap();
        if c.s1 != c.s2 || want.is_some_and(|w| c.s1 != w) {
            failures.push(format!("n={n}: S1={} S2={}", c.s1, c.s2));
        }
        println!("    n={n}: S1 = S2 = {}", c.s1);
    }
    for n in 1..=3 {
        match build_bijection(n) {
            Ok(r) if r.injective && r.surjective && r.entries.len() == r.s2_size => {}
            Ok(r) => failures.push(format!("n={n}: injective={} surjective={}", r.injective, r.surjective)),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    report(9, "S1 = S2 and the correspondence is a bijection", &failures, start.elapsed(), None);
}

mod properties {
    use super::*;
    use jackmaps::algebra::{a_to_gamma, faulhaber_range_sum, gamma_univariate_to_laurent, Monomial, Var};
    use jackmaps::diagrams::concrete_to_multirect;
    use jackmaps::nonoriented_maps::RibbonGraph;
    use jackmaps::oriented_maps::{enumerate_labeled, weight_n, weight_n_multirect, OrientedBicolMap};
    use proptest::prelude::*;
    use proptest::test_runner::{Config, TestRunner};

    pub const CASES: u32 = 128;

    fn runner() -> TestRunner {
        TestRunner::new(Config { cases: CASES, failure_persistence: None, ..Config::default() })
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(a, b)| rat(a, b))
    }

    fn diagram(max: u32) -> impl Strategy<Value = YoungDiagram> {
        let all = partitions_up_to(max);
        (0..all.len()).prop_map(move |i| all[i].clone())
    }

    fn labeled_map(max_n: usize) -> impl Strategy<Value = OrientedBicolMap> {
        let all: Vec<Vec<OrientedBicolMap>> = (1..=max_n).map(|n| enumerate_labeled(n).unwrap()).collect();
        (0..max_n).prop_flat_map(move |i| {
            let maps = all[i].clone();
            (0..maps.len()).prop_map(move |j| maps[j].clone())
        })
    }

    pub fn gamma_round_trip() -> Result<(), String> {
        runner()
            .run(&prop::collection::vec(small_rational(), 0..8), |coeffs| {
                let f = MultiPoly::from_terms(
                    coeffs.iter().enumerate().map(|(e, c)| (Monomial::from_pairs([(Var::G, e as u32)]), c.clone())),
                );
                prop_assert_eq!(a_to_gamma(&gamma_univariate_to_laurent(&f)).unwrap(), f);
                Ok(())
            })
            .map_err(|e| e.to_string())
    }

    pub fn faulhaber_literal() -> Result<(), String> {
        runner()
            .run(&(0usize..8, 0i64..15, 0i64..15), |(m, offset, len)| {
                let closed = faulhaber_range_sum(m, &MultiPoly::constant(int(offset)), &MultiPoly::constant(int(len)));
                let literal = ((offset + 1)..=(offset + len)).fold(Rational::from_integer(0.into()), |acc, x| {
                    acc + Rational::from_integer(x.into()).pow(m as i32)
                });
                prop_assert_eq!(closed.coeff(&Monomial::one()), literal);
                Ok(())
            })
            .map_err(|e| e.to_string())
    }

    pub fn euler_parity() -> Result<(), String> {
        runner()
            .run(&labeled_map(5), |m| {
                let s = m.stats();
                let chi = (s.whites + s.blacks + s.faces) as i64 - m.n() as i64;
                prop_assert!(chi % 2 == 0 && chi <= 2);
                prop_assert_eq!(2 - 2 * s.genus as i64, chi);
                Ok(())
            })
            .map_err(|e| e.to_string())
    }

    pub fn multirect_consistency() -> Result<(), String> {
        runner()
            .run(&(labeled_map(4), diagram(7)), |(m, lambda)| {
                prop_assume!(!lambda.is_empty());
                let sub = concrete_to_multirect(&lambda).unwrap();
                prop_assume!(sub.ell() <= 3);
                let symbolic = weight_n_multirect(&m, sub.ell());
                prop_assert_eq!(sub.apply(&symbolic), weight_n(&m, &lambda));
                Ok(())
            })
            .map_err(|e| e.to_string())
    }

    pub fn flip_invariance() -> Result<(), String> {
        let strategy = labeled_map(4).prop_flat_map(|m| {
            let n = m.n();
            (Just(m), prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), 2 * n))
        });
        runner()
            .run(&strategy, |(m, twists, flips)| {
                let mut r = RibbonGraph::from_oriented(&m);
                for (i, t) in twists.iter().enumerate() {
                    if *t {
                        r = r.twist_edge(i + 1).unwrap();
                    }
                }
                let flips: Vec<bool> = flips.into_iter().take(r.vertices().len()).collect();
                let flipped = r.apply_flips(&flips);
                prop_assert_eq!(flipped.trace_faces(), r.trace_faces());
                prop_assert_eq!(flipped.is_orientable(), r.is_orientable());
                Ok(())
            })
            .map_err(|e| e.to_string())
    }

    pub fn jack_orthogonality() -> Result<(), String> {
        let strategy = (1u32..=6).prop_flat_map(|n| {
            let parts = jackmaps::diagrams::partitions(n);
            let k = parts.len();
            (Just(parts), 0..k, 0..k)
        });
        runner()
            .run(&strategy, |(parts, i, j)| {
                let a = jack_j(&parts[i]).unwrap();
                let b = jack_j(&parts[j]).unwrap();
                prop_assert_eq!(jack_inner_product(&a, &b).is_zero(), i != j);
                Ok(())
            })
            .map_err(|e| e.to_string())
    }

}

#[test]
fn criterion_10_property_suites() {
    let start = Instant::now();
    let suites: [(&str, fn() -> Result<(), String>); 6] = [
        ("gamma round trip", properties::gamma_round_trip),
        ("Faulhaber vs literal sums", properties::faulhaber_literal),
        ("Euler parity", properties::euler_parity),
        ("multirectangular vs concrete embeddings", properties::multirect_consistency),
        ("flip invariance of faces", properties::flip_invariance),
        ("Jack orthogonality", properties::jack_orthogonality),
    ];
    let mut failures = Vec::new();
    for (name, run) in suites {
        match run() {
            Ok(()) => println!("    {name}: {} cases ok", properties::CASES),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    report(10, "property suites", &failures, start.elapsed(), None);
}
