//! Decomposes a symmetric dimension vector into stages, assembles the rigid
//! module and certifies it with the oracle; also lists the sign variants.
//!
//! Run with: cargo run --example richardson_plan

use delta_orbit::field::Rationals;
use delta_orbit::richardson::{certify, decompose, SymDimVector};

fn main() {
    for entries in [vec![1, 3, 5, 4, 5, 3, 1], vec![1, 3, 5, 3, 5, 3, 1]] {
        let d = SymDimVector::new(entries.clone()).unwrap();
        let plan = decompose(&d).unwrap();
        println!("d = {:?} (N = {})", entries, plan.total);
        for s in &plan.stages {
            println!(
                "  stage {}: {:12} e = {:?}  I = {{{}}}  J = {{{}}}",
                s.k,
                s.kind.as_str(),
                s.e,
                s.i_set,
                s.j_set
            );
        }
        println!(
            "  {} variants ({} flippable stages)",
            plan.variant_count(),
            plan.flippable_stages().len()
        );
        let cert = certify(&plan, Rationals).unwrap();
        println!(
            "  certificate: dim M = {}, ext1(M,M) = {}, support matches d: {}",
            cert.total_dim, cert.ext_self, cert.support_matches
        );
        println!();
    }
}
