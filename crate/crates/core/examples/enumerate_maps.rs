//! Enumerates rooted oriented bicolored maps and tabulates them by genus
//! and vertex counts.

use std::collections::BTreeMap;

use jackmaps::oriented_maps::{enumerate_labeled, enumerate_rooted};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=5 {
        let rooted = enumerate_rooted(n)?;
        let mut table: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        for m in &rooted {
            let s = m.stats();
            *table.entry((s.genus, s.whites, s.blacks)).or_default() += 1;
        }
        println!("n = {n}: {} rooted, {} labeled", rooted.len(), enumerate_labeled(n)?.len());
        for ((genus, w, b), count) in table {
            println!("  genus {genus}, {w} white, {b} black: {count}");
        }
    }
    Ok(())
}
