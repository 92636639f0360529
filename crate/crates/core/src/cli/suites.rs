use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{homogeneous_part, parse_poly, MultiPoly};
use crate::characters::{
    ch3_explicit_family, solve_character_family, stanley_polynomial, verify_vanishing_system, MAX_SOLVER_N,
};
use crate::diagrams::{evaluate_family, partitions_up_to, YoungDiagram};
use crate::jack_oracle::{jack_character, normalized_character, structure_constants};
use crate::nonoriented_maps::{build_bijection, count_s1_s2, MAX_BIJECTION_EDGES, MAX_RIBBON_EDGES};
use crate::oriented_maps::{ch_a1_one_face, ch_top_concrete, ch_top_maps};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Eq11,
    Eq15,
    Eq21,
    Def12,
    Lemma33,
    Theorem41,
    Theorem22,
    Structconst,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteRow {
    pub suite: String,
    pub case: String,
    pub pass: bool,
    pub detail: String,
}

fn row(suite: &str, case: impl Into<String>, pass: bool, detail: impl Into<String>) -> SuiteRow {
    SuiteRow { suite: suite.into(), case: case.into(), pass, detail: detail.into() }
}

/// The two-rectangle Stanley polynomial of `Ch_3`, negated; the first
/// seventeen terms form its top-degree part.
const CH3_TOP_NEG: &str = "p1^3*q1 + 3*p1^2*q1^2 + p1*q1^3 + 3*p1^2*p2*q2 + 3*p1*p2^2*q2 + p2^3*q2 \
    + 3*p1*p2*q1*q2 + 3*p1*p2*q2^2 + 3*p2^2*q2^2 + p2*q2^3 + 3*p1^2*q1*g + 3*p1*q1^2*g \
    + 6*p1*p2*q2*g + 3*p2^2*q2*g + 3*p2*q2^2*g + 2*p1*q1*g^2 + 2*p2*q2*g^2";
const CH3_LOWER_NEG: &str = "p1*q1 + p2*q2";

pub fn ch3_two_rect_stanley() -> MultiPoly {
    -(parse_poly(CH3_TOP_NEG).expect("literal") + parse_poly(CH3_LOWER_NEG).expect("literal"))
}

pub fn ch3_two_rect_top() -> MultiPoly {
    -parse_poly(CH3_TOP_NEG).expect("literal")
}

fn err_row(suite: &str, case: impl Into<String>, e: impl ToString) -> SuiteRow {
    row(suite, case, false, e.to_string())
}

fn eq11() -> Vec<SuiteRow> {
    match solve_character_family(3) {
        Ok(sol) => {
            let pass = sol.family == ch3_explicit_family();
            let detail = format!("{:?}", sol.family.to_text_map());
            vec![row("eq11", "solver n=3", pass, detail)]
        }
        Err(e) => vec![err_row("eq11", "solver n=3", e)],
    }
}

fn eq15() -> Vec<SuiteRow> {
    let mut out = Vec::new();
    match solve_character_family(3).map_err(|e| e.to_string()).and_then(|s| {
        stanley_polynomial(&s, 2).map_err(|e| e.to_string())
    }) {
        Ok(p) => out.push(row("eq15", "stanley n=3 l=2", p == ch3_two_rect_stanley(), format!("{} terms", p.len()))),
        Err(e) => out.push(err_row("eq15", "stanley n=3 l=2", e)),
    }
    match ch_top_maps(3, 2) {
        Ok(p) => out.push(row("eq15", "map sum top n=3 l=2", p == ch3_two_rect_top(), format!("{} terms", p.len()))),
        Err(e) => out.push(err_row("eq15", "map sum top n=3 l=2", e)),
    }
    out
}

fn eq21(max_n: u32) -> Vec<SuiteRow> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(5) {
        let mut bad = Vec::new();
        let diagrams = partitions_up_to(7);
        for lambda in &diagrams {
            match ch_a1_one_face(n as usize, lambda) {
                Ok(v) if v == normalized_character(&YoungDiagram::from_unsorted(vec![n]), lambda) => {}
                Ok(v) => bad.push(format!("{lambda}: {v}")),
                Err(e) => bad.push(e.to_string()),
            }
        }
        out.push(row("eq21", format!("n={n}"), bad.is_empty(), detail(diagrams.len(), &bad)));
    }
    out
}

fn detail(total: usize, bad: &[String]) -> String {
    if bad.is_empty() {
        format!("{total} diagrams agree")
    } else {
        format!("mismatch at {}", bad.join("; "))
    }
}

fn def12(max_n: u32) -> Vec<SuiteRow> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(MAX_SOLVER_N) {
        let mu = YoungDiagram::from_unsorted(vec![n]);
        let sol = match solve_character_family(n) {
            Ok(s) => s,
            Err(e) => {
                out.push(err_row("def12", format!("n={n}"), e));
                continue;
            }
        };
        let mut bad = Vec::new();
        let diagrams = partitions_up_to(7);
        for lambda in &diagrams {
            match jack_character(&mu, lambda) {
                Ok(v) => {
                    if lambda.size() < n && !v.is_zero() {
                        bad.push(format!("{lambda}: oracle {v} is nonzero"));
                    }
                    let f = evaluate_family(&sol.family, lambda);
                    if f != v {
                        bad.push(format!("{lambda}: family {f} vs oracle {v}"));
                    }
                }
                Err(e) => bad.push(e.to_string()),
            }
        }
        let case = format!("n={n} unknowns={} equations={}", sol.unknowns, sol.equations);
        out.push(row("def12", case, bad.is_empty(), detail(diagrams.len(), &bad)));
    }
    out
}

fn lemma33(max_n: u32) -> Vec<SuiteRow> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(4) {
        let mu = YoungDiagram::from_unsorted(vec![n]);
        let sol = match solve_character_family(n) {
            Ok(s) => s,
            Err(e) => {
                out.push(err_row("lemma33", format!("n={n}"), e));
                continue;
            }
        };
        let oracle = |l: &YoungDiagram| jack_character(&mu, l).expect("oracle in range");
        let report = verify_vanishing_system(&oracle, n, Some(&sol.family));
        let fails: Vec<String> = report.failures().map(|c| format!("{} k={} [{}]", c.equation, c.k, c.lambda)).collect();
        out.push(row("lemma33", format!("oracle n={n}"), fails.is_empty(), format!("{} checks {}", report.checks.len(), fails.join("; "))));
        let maps = |l: &YoungDiagram| ch_top_concrete(n as usize, l).expect("map sum in range");
        let report = verify_vanishing_system(&maps, n, None);
        let fails: Vec<String> = report.failures().map(|c| format!("k={} [{}]", c.k, c.lambda)).collect();
        out.push(row("lemma33", format!("map sum n={n}"), fails.is_empty(), format!("{} checks {}", report.checks.len(), fails.join("; "))));
    }
    out
}

fn theorem41(max_n: u32) -> Vec<SuiteRow> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(MAX_SOLVER_N) {
        for ell in 1..=2 {
            let case = format!("n={n} l={ell}");
            let lhs = solve_character_family(n)
                .map_err(|e| e.to_string())
                .and_then(|s| stanley_polynomial(&s, ell).map_err(|e| e.to_string()))
                .map(|p| homogeneous_part(&p, n + 1));
            let rhs = ch_top_maps(n as usize, ell).map_err(|e| e.to_string());
            match (lhs, rhs) {
                (Ok(a), Ok(b)) => out.push(row("theorem41", case, a == b, format!("{} terms", b.len()))),
                (Err(e), _) | (_, Err(e)) => out.push(err_row("theorem41", case, e)),
            }
        }
    }
    out
}

fn theorem22(max_n: u32) -> Vec<SuiteRow> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(MAX_RIBBON_EDGES as u32) as usize {
        match count_s1_s2(n) {
            Ok(c) => out.push(row("theorem22", format!("n={n}"), c.s1 == c.s2, format!("S1={} S2={}", c.s1, c.s2))),
            Err(e) => out.push(err_row("theorem22", format!("n={n}"), e)),
        }
    }
    for n in 1..=max_n.min(MAX_BIJECTION_EDGES as u32) as usize {
        match build_bijection(n) {
            Ok(r) => {
                let pass = r.injective && r.surjective;
                let d = format!("{} entries injective={} surjective={}", r.entries.len(), r.injective, r.surjective);
                out.push(row("theorem22", format!("bijection n={n}"), pass, d));
            }
            Err(e) => out.push(err_row("theorem22", format!("bijection n={n}"), e)),
        }
    }
    out
}

/// `Ch_3 · Ch_3` in the `δ` form.
pub fn ch3_squared_expected() -> BTreeMap<YoungDiagram, MultiPoly> {
    [
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
    .map(|(p, t)| (YoungDiagram::from_unsorted(p), parse_poly(t).expect("literal")))
    .collect()
}

fn structconst() -> Vec<SuiteRow> {
    let three = YoungDiagram::from_unsorted(vec![3]);
    match structure_constants(&three, &three) {
        Ok(sc) => {
            let got: Option<BTreeMap<YoungDiagram, MultiPoly>> =
                sc.delta.iter().map(|(k, v)| v.clone().map(|v| (k.clone(), v))).collect();
            let pass = got.as_ref() == Some(&ch3_squared_expected()) && sc.delta_nonnegative_integral();
            let d: Vec<String> = sc
                .delta
                .iter()
                .map(|(k, v)| format!("[{k}] {}", v.as_ref().map_or("-".into(), |v| v.to_string())))
                .collect();
            vec![row("structconst", "(3)x(3)", pass, d.join("; "))]
        }
        Err(e) => vec![err_row("structconst", "(3)x(3)", e)],
    }
}

pub fn run_suite(suite: Suite, max_n: u32) -> Vec<SuiteRow> {
    match suite {
        Suite::Eq11 => eq11(),
        Suite::Eq15 => eq15(),
        Suite::Eq21 => eq21(max_n),
        Suite::Def12 => def12(max_n),
        Suite::Lemma33 => lemma33(max_n),
        Suite::Theorem41 => theorem41(max_n),
        Suite::Theorem22 => theorem22(max_n),
        Suite::Structconst => structconst(),
        Suite::All => [
            Suite::Eq11,
            Suite::Eq15,
            Suite::Eq21,
            Suite::Def12,
            Suite::Lemma33,
            Suite::Theorem41,
            Suite::Theorem22,
            Suite::Structconst,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, max_n))
        .collect(),
    }
}
