//! Stanley polynomials of `Ch_n` on multirectangular diagrams, split into
//! the top-degree part and the rest.

use jackmaps::algebra::homogeneous_part;
use jackmaps::characters::{solve_character_family, stanley_polynomial, top_degree};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sol = solve_character_family(3)?;
    for ell in 1..=2 {
        let full = stanley_polynomial(&sol, ell)?;
        let top = top_degree(&sol, ell)?.stanley_top;
        println!("ℓ = {ell}");
        println!("  full: {full}");
        println!("  top:  {top}");
        println!("  degree-2 part: {}", homogeneous_part(&full, 2));
    }
    Ok(())
}
