//! Checks the finite-difference vanishing conditions that characterize
//! `Ch_n`, for the solved family and for a perturbed one.

use jackmaps::algebra::parse_poly;
use jackmaps::characters::{solve_character_family, verify_vanishing_system};
use jackmaps::diagrams::{evaluate_family, ContentPolynomialFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fam = solve_character_family(3)?.family;
    let report = verify_vanishing_system(&|l| evaluate_family(&fam, l), 3, Some(&fam));
    println!("solved family: {} checks, passed {}", report.checks.len(), report.passed());

    let bump = ContentPolynomialFamily::new(4, vec![parse_poly("0")?, parse_poly("c1^2")?])?;
    let perturbed = fam.add(&bump);
    let report = verify_vanishing_system(&|l| evaluate_family(&perturbed, l), 3, Some(&perturbed));
    println!("perturbed family: passed {}", report.passed());
    for c in report.failures().take(5) {
        println!("  {} k={} λ=({}) lhs={}", c.equation, c.k, c.lambda, c.lhs);
    }
    Ok(())
}
