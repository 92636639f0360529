//! Solves the linear system that determines `Ch_n` as a content-polynomial
//! family, for `n = 1..=4`.

use jackmaps::characters::solve_character_family;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=4 {
        let sol = solve_character_family(n)?;
        println!("n = {n}: {} unknowns, {} equations", sol.unknowns, sol.equations);
        for (k, p) in sol.family.polys().iter().enumerate() {
            println!("  p_{k} = {p}");
        }
    }
    Ok(())
}
