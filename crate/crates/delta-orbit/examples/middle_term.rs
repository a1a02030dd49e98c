//! Realizes the canonical rigid extension of Delta(I) by Delta(J) for a
//! mirrored pair as a pullback, and verifies its two exact sequences and
//! rigidity with the oracle.
//!
//! Run with: cargo run --example middle_term

use delta_orbit::build::{build_delta_signed, build_middle_term, cyclicity_check, splitting_test};
use delta_orbit::field::Rationals;
use delta_orbit::formulas::MirrorPairContext;
use delta_orbit::rep::{ext1_dim, sub_to_rep};
use delta_orbit::signed::SignedSubset;

fn main() {
    let n = 8;
    let i = SignedSubset::parse(n, "8+,7-,6+,5-,4+,1-").unwrap();
    let ctx = MirrorPairContext::new(&i).unwrap();
    println!("I = {{{}}}, J = {{{}}}, r = {}", ctx.i, ctx.j, ctx.r);

    let mid = build_middle_term(&ctx, false, Rationals).unwrap();
    println!("dim E = {}", mid.e.total_dim());
    println!(
        "hom(Delta(J), cokernel) = {} (theta injective: {})",
        mid.hom_to_cokernel, mid.theta_injective
    );
    println!("generator is cyclic over the cokernel endomorphisms: {}", cyclicity_check(&mid));

    // the second exact sequence 0 -> Delta(tilde-J) -> E -> Delta(tilde-I) -> 0
    let (ti, tj) = ctx.tilde_sets().unwrap();
    let kernel_piece = sub_to_rep(&mid.e, &mid.bottom_ker);
    println!(
        "kernel piece has dim {} = dim Delta({{{}}})",
        kernel_piece.total_dim(),
        tj
    );
    let top = build_delta_signed(&ti, Rationals).unwrap().rep;
    let split = splitting_test(&mid.e, &mid.bottom_ker, &top).unwrap();
    println!("tilde sequence splits: {} (expected iff r is odd)", split);

    println!("ext1(E, E) = {}", ext1_dim(&mid.e, &mid.e));
}
