//! Persists Jack tables to a cache directory so that later runs skip the
//! Gram–Schmidt step.

use std::time::Instant;

use jackmaps::diagrams::YoungDiagram;
use jackmaps::jack_oracle::{set_cache_dir, theta};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("jackmaps-example-cache");
    std::fs::create_dir_all(&dir)?;
    set_cache_dir(Some(dir.clone()));
    let pi: YoungDiagram = "3,2,1".parse()?;
    let lambda: YoungDiagram = "4,2".parse()?;
    let t = Instant::now();
    println!("θ_{pi}({lambda}) = {}", theta(&pi, &lambda)?);
    println!("{:?}, cache in {}", t.elapsed(), dir.display());
    Ok(())
}
