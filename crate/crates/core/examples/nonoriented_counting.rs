//! Counts one-face non-oriented maps with an admissible edge order against
//! oriented maps with an arbitrary order.

use jackmaps::nonoriented_maps::{count_s1_s2, enumerate_nonoriented_labeled};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=4 {
        let classes = enumerate_nonoriented_labeled(n)?;
        let one_face = classes.iter().filter(|r| r.trace_faces() == 1).count();
        let c = count_s1_s2(n)?;
        println!(
            "n = {n}: {} classes ({one_face} one-face), S1 = {}, S2 = {}",
            classes.len(),
            c.s1,
            c.s2
        );
    }
    Ok(())
}
