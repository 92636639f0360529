//! Irreducible characters of symmetric groups by the Murnaghan–Nakayama
//! rule, printed as a character table.

use jackmaps::diagrams::partitions;
use jackmaps::jack_oracle::mn_character;

fn main() {
    let n = 5;
    let classes = partitions(n);
    print!("{:>10}", "");
    for pi in &classes {
        print!("{:>10}", pi.to_string());
    }
    println!();
    for lambda in &classes {
        print!("{:>10}", lambda.to_string());
        for pi in &classes {
            print!("{:>10}", mn_character(lambda, pi));
        }
        println!();
    }
}
