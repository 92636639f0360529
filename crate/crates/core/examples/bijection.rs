//! Builds the explicit correspondence between ordered one-face
//! non-oriented maps and ordered oriented maps for three edges.

use jackmaps::nonoriented_maps::build_bijection;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = build_bijection(3)?;
    println!(
        "{} pairs on each side; injective {}, surjective {}, same underlying graph {}",
        report.s1_size, report.injective, report.surjective, report.preserves_graph
    );
    println!("choices on bridges {:?}, on cycles {:?}", report.bridge_choices, report.cycle_choices);
    for e in report.entries.iter().filter(|e| e.root == 1).take(6) {
        println!("  {}  ->  σ = {:?}, τ = {:?}", e.s1, e.s2.sigma(), e.s2.tau());
    }
    Ok(())
}
