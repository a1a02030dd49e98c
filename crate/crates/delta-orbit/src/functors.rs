//! Restriction and induction between representations of the plain and signed
//! bound quivers. Restriction merges the two signed rails over each weight;
//! induction doubles a plain representation onto both rails, twisting the up
//! arrows on the minus rail by -1 so that the result is the genuine induced
//! module (checked in the tests via the hom adjunction).

use crate::field::Field;
use crate::linalg::{self, Mat};
use crate::quiver::{AlgebraKind, BoundQuiver};
use crate::rep::Representation;
use crate::signed::Sign;

/// Restricts a signed representation to the plain quiver: the fibre over
/// weight w is the direct sum of the two rails, ordered plus then minus.
pub fn restrict_to_plain<F: Field>(m: &Representation<F>) -> Representation<F> {
    assert_eq!(m.quiver.algebra, AlgebraKind::Signed);
    let n = m.quiver.n;
    let f = m.field.clone();
    let signed = m.quiver.clone();
    let plain = BoundQuiver::plain(n);
    let dim_at = |w: usize, s: Sign| m.dims[signed.vertex_signed(w, s)];
    let dims: Vec<usize> = (1..=n)
        .map(|w| dim_at(w, Sign::Plus) + dim_at(w, Sign::Minus))
        .collect();
    let mats: Vec<Mat<F::Elem>> = plain
        .arrows
        .iter()
        .map(|a| {
            let sw = a.source + 1;
            if a.step == 1 {
                // up arrows cross rails: plus component of the target comes
                // from the minus rail of the source and vice versa
                let up_p = &m.mats[signed.up_from(signed.vertex_signed(sw, Sign::Plus))];
                let up_m = &m.mats[signed.up_from(signed.vertex_signed(sw, Sign::Minus))];
                let tp = dim_at(sw + 1, Sign::Plus);
                let tm = dim_at(sw + 1, Sign::Minus);
                Mat::from_fn(tp + tm, dims[sw - 1], |r, c| {
                    let from_plus = c < dim_at(sw, Sign::Plus);
                    if r < tp && !from_plus {
                        up_m.get(r, c - dim_at(sw, Sign::Plus)).clone()
                    } else if r >= tp && from_plus {
                        up_p.get(r - tp, c).clone()
                    } else {
                        f.zero()
                    }
                })
            } else {
                let dn_p = &m.mats[signed.down_from(signed.vertex_signed(sw, Sign::Plus))];
                let dn_m = &m.mats[signed.down_from(signed.vertex_signed(sw, Sign::Minus))];
                let tp = dim_at(sw - 1, Sign::Plus);
                let tm = dim_at(sw - 1, Sign::Minus);
                Mat::from_fn(tp + tm, dims[sw - 1], |r, c| {
                    let from_plus = c < dim_at(sw, Sign::Plus);
                    if r < tp && from_plus {
                        dn_p.get(r, c).clone()
                    } else if r >= tp && !from_plus {
                        dn_m.get(r - tp, c - dim_at(sw, Sign::Plus)).clone()
                    } else {
                        f.zero()
                    }
                })
            }
        })
        .collect();
    let out = Representation {
        quiver: plain,
        field: f,
        dims,
        mats,
    };
    debug_assert_eq!(out.validate(), Ok(()));
    out
}

pub(crate) fn induce_with_twist<F: Field>(
    x: &Representation<F>,
    minus_rail_up_sign: i64,
) -> Representation<F> {
    assert_eq!(x.quiver.algebra, AlgebraKind::Plain);
    let n = x.quiver.n;
    let f = x.field.clone();
    let plain = x.quiver.clone();
    let signed = BoundQuiver::signed(n);
    let mut dims = vec![0usize; signed.vertices.len()];
    for w in 1..=n {
        for s in [Sign::Plus, Sign::Minus] {
            dims[signed.vertex_signed(w, s)] = x.dims[plain.vertex_plain(w)];
        }
    }
    let twist = f.from_i64(minus_rail_up_sign);
    let mats: Vec<Mat<F::Elem>> = signed
        .arrows
        .iter()
        .map(|a| {
            let sv = signed.vertices[a.source];
            let pw = plain.vertex_plain(sv.weight);
            if a.step == 1 {
                let base = &x.mats[plain.up_from(pw)];
                match sv.sign.unwrap() {
                    Sign::Plus => base.clone(),
                    Sign::Minus => linalg::scale(&f, &twist, base),
                }
            } else {
                x.mats[plain.down_from(pw)].clone()
            }
        })
        .collect();
    let out = Representation {
        quiver: signed,
        field: f,
        dims,
        mats,
    };
    debug_assert_eq!(out.validate(), Ok(()));
    out
}

/// Induces a plain representation up to the signed quiver: both rails carry a
/// copy, with the up arrows on the minus rail negated.
pub fn induce_to_signed<F: Field>(x: &Representation<F>) -> Representation<F> {
    induce_with_twist(x, -1)
}
