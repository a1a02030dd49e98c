//! Demonstrates the functors between the plain and signed algebras:
//! restriction forgets signs, induction doubles onto both rails, and the two
//! are adjoint.
//!
//! Run with: cargo run --example restriction_induction

use delta_orbit::build::{build_delta_plain, build_delta_signed};
use delta_orbit::field::Rationals;
use delta_orbit::functors::{induce_to_signed, restrict_to_plain};
use delta_orbit::rep::hom_dim;
use delta_orbit::signed::{Sign, SignedSubset, UnsignedSubset};

fn main() {
    let n = 5;
    let i = SignedSubset::parse(n, "5+,3-,2+").unwrap();
    let d = build_delta_signed(&i, Rationals).unwrap().rep;
    let r = restrict_to_plain(&d);
    println!(
        "restrict(Delta({{{}}})): dim {} -> {} over the plain algebra",
        i,
        d.total_dim(),
        r.total_dim()
    );
    println!("plain composition dims: {:?}", r.comp_dims_plain());

    let i0 = UnsignedSubset::parse(n, "5,3,2").unwrap();
    let x = build_delta_plain(&i0, Rationals).unwrap().rep;
    let ind = induce_to_signed(&x);
    println!(
        "induce(Delta({{{}}})): dim {} -> {}, support {:?}",
        i0,
        x.total_dim(),
        ind.total_dim(),
        ind.comp_dims()
    );

    // hom(induce X, Y) = hom(X, restrict Y)
    let j = i0.anchor_signs(Sign::Plus);
    let y = build_delta_signed(&j, Rationals).unwrap().rep;
    let lhs = hom_dim(&ind, &y);
    let rhs = hom_dim(&x, &restrict_to_plain(&y));
    println!("adjunction: hom(ind X, Y) = {} = hom(X, res Y) = {}", lhs, rhs);
}
