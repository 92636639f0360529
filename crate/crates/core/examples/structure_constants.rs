//! Expands a product of Jack characters in the character basis and shows
//! the coefficients in the shifted variable δ.

use jackmaps::diagrams::YoungDiagram;
use jackmaps::jack_oracle::structure_constants;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mu: YoungDiagram = "2".parse()?;
    let nu: YoungDiagram = "2".parse()?;
    let sc = structure_constants(&mu, &nu)?;
    for (pi, c) in &sc.coeffs {
        let delta = sc.delta[pi].as_ref().map_or("-".to_string(), |d| d.to_string());
        println!("Ch_{pi}: {c}    in δ: {delta}");
    }
    for (pi, c) in sc.at_one() {
        println!("at A = 1, Ch_{pi}: {c}");
    }
    println!("non-negative integer in δ: {}", sc.delta_nonnegative_integral());
    Ok(())
}
