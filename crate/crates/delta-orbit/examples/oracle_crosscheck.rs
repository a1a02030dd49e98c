//! Builds standard modules as explicit quiver representations and checks the
//! closed-form Hom/Ext dimensions against the linear-algebra oracle for every
//! ordered pair at a small rank.
//!
//! Run with: cargo run --example oracle_crosscheck

use delta_orbit::build::build_delta_signed;
use delta_orbit::field::PrimeField;
use delta_orbit::formulas::{ext1_dim_signed, hom_dim_signed};
use delta_orbit::rep::{ext1_dim, hom_dim};
use delta_orbit::sweeps::enumerate_alternating;

fn main() {
    let n = 4;
    let field = PrimeField::new(101).unwrap();
    let sets: Vec<_> = enumerate_alternating(n)
        .into_iter()
        .filter(|s| !s.elems().is_empty())
        .collect();
    println!("rank {}: {} alternating supports", n, sets.len());

    let built: Vec<_> = sets
        .iter()
        .map(|s| build_delta_signed(s, field.clone()).unwrap().rep)
        .collect();

    let mut pairs = 0usize;
    let mut mismatches = 0usize;
    for (a, i) in sets.iter().zip(&built) {
        for (b, j) in sets.iter().zip(&built) {
            let (hf, ho) = (hom_dim_signed(a, b), hom_dim(i, j));
            let (ef, eo) = (ext1_dim_signed(a, b).unwrap(), ext1_dim(i, j));
            pairs += 1;
            if hf != ho || ef != eo {
                mismatches += 1;
                println!("MISMATCH I={} J={}: hom {}/{} ext {}/{}", a, b, hf, ho, ef, eo);
            }
        }
    }
    println!("{} ordered pairs checked, {} mismatches", pairs, mismatches);
}
