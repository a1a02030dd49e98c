//! Walks through the combinatorial layer on a mirrored pair of signed
//! subsets: supports, complements, and the closed-form Hom/Ext dimensions.
//!
//! Run with: cargo run --example closed_forms

use delta_orbit::formulas::{
    complement_signed, delta_dims, ext1_dim_signed, hom_dim_signed, MiddleTermClass,
    MirrorPairContext,
};
use delta_orbit::signed::SignedSubset;

fn main() {
    let n = 8;
    let i = SignedSubset::parse(n, "8+,7-,6+,5-,4+,1-").unwrap();
    println!("I = {{{}}} on [{}]", i, n);
    println!("alternating: {}", i.is_alternating());

    let dims = delta_dims(&i);
    println!("dim Delta(I) = {} (componentwise {:?})", dims.total(), dims);

    let ic = complement_signed(&i).unwrap();
    println!("costandard complement I^c = {{{}}}", ic);

    let ctx = MirrorPairContext::new(&i).unwrap();
    println!("mirror J = {{{}}}", ctx.j);
    println!("shared gaps = {:?}  (r = {})", ctx.shared_gaps, ctx.r);

    println!("hom(Delta(I), Delta(J)) = {}", hom_dim_signed(&i, &ctx.j));
    println!("hom(Delta(J), Delta(I)) = {}", hom_dim_signed(&ctx.j, &i));
    println!(
        "ext1(Delta(I), Delta(J)) = {}",
        ext1_dim_signed(&i, &ctx.j).unwrap()
    );
    println!(
        "ext1(Delta(J), Delta(I)) = {}",
        ext1_dim_signed(&ctx.j, &i).unwrap()
    );

    let (ti, tj) = ctx.tilde_sets().unwrap();
    println!("tilde-I = {{{}}}  tilde-J = {{{}}}", ti, tj);
    let class = match ctx.classify().unwrap() {
        MiddleTermClass::Decomposable { .. } => "decomposable (r odd)",
        MiddleTermClass::Indecomposable { .. } => "indecomposable (r even)",
    };
    println!("canonical middle term: {}", class);
}
