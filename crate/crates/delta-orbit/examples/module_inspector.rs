//! Parses module descriptors and prints their invariants as JSON, like the
//! `show` subcommand of the binary.
//!
//! Run with: cargo run --example module_inspector

use delta_orbit::field::FieldChoice;
use delta_orbit::quiver::AlgebraKind;
use delta_orbit::show::describe;

fn main() {
    let cases = [
        (AlgebraKind::Signed, 8, "P(1+)"),
        (AlgebraKind::Signed, 8, "Delta(8+,7-,6+,5-,4+,1-)"),
        (AlgebraKind::Signed, 8, "Nabla(3-,2-)"),
        (AlgebraKind::Signed, 8, "E(8+,7-,6+,5-,4+,1-)"),
        (AlgebraKind::Signed, 7, "Delta(5+,3-)+Delta(5-,3+)"),
        (AlgebraKind::Plain, 5, "Delta(5,3,2)"),
    ];
    for (alg, n, module) in cases {
        let v = describe(alg, n, module, FieldChoice::Rationals, false).unwrap();
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
        println!();
    }
}
