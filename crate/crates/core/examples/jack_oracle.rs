//! Jack polynomials in the power-sum basis and the normalized characters
//! read off from them.

use jackmaps::diagrams::YoungDiagram;
use jackmaps::jack_oracle::{jack_character, jack_j, theta};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda: YoungDiagram = "2,1".parse()?;
    println!("J_{{{lambda}}} = {}", jack_j(&lambda)?);
    for pi in ["3", "2,1", "1,1,1"] {
        let pi: YoungDiagram = pi.parse()?;
        println!("θ_{pi}({lambda}) = {}", theta(&pi, &lambda)?);
    }
    let mu: YoungDiagram = "2".parse()?;
    for parts in ["2", "3,1", "2,2,1"] {
        let lambda: YoungDiagram = parts.parse()?;
        println!("Ch_{mu}({lambda}) = {}", jack_character(&mu, &lambda)?);
    }
    Ok(())
}
