//! Evaluates the explicit content-polynomial family of `Ch_3` on a few
//! diagrams and compares with the symmetric-group value at `A = 1`.

use jackmaps::characters::ch3_explicit_family;
use jackmaps::diagrams::{evaluate_family, YoungDiagram};
use jackmaps::jack_oracle::normalized_character;

fn main() {
    let fam = ch3_explicit_family();
    for (k, p) in fam.polys().iter().enumerate() {
        println!("p_{k} = {p}");
    }
    let mu = YoungDiagram::from_unsorted(vec![3]);
    for parts in [vec![3], vec![2, 1], vec![3, 2], vec![4, 2, 1]] {
        let lambda = YoungDiagram::from_unsorted(parts);
        let value = evaluate_family(&fam, &lambda);
        println!(
            "Ch_3({lambda}) = {value}    at A=1: {}    symmetric group: {}",
            value.at_one(),
            normalized_character(&mu, &lambda)
        );
    }
}
