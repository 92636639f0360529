//! Top-degree part of `Ch_n` from the weighted sum over oriented bicolored
//! maps, checked against the algebraic route.

use jackmaps::characters::{solve_character_family, top_degree};
use jackmaps::oriented_maps::ch_top_maps;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=4 {
        let from_maps = ch_top_maps(n, 2)?;
        let from_solver = top_degree(&solve_character_family(n as u32)?, 2)?.stanley_top;
        println!("n = {n}: {from_maps}");
        println!("  agrees with solver: {}", from_maps == from_solver);
    }
    Ok(())
}
