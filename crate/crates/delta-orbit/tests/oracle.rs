//! Structural tests of the linear-algebra layer: projectives, standard and
//! costandard modules, restriction/induction, and the two independent Ext
//! routes, all cross-checked against the closed forms.

use delta_orbit::build::{
    build_delta_plain, build_delta_signed, build_nabla_signed, build_projective,
    ext1_dim_via_presentation,
};
use delta_orbit::field::{PrimeField, Rationals};
use delta_orbit::formulas::{
    delta_dims, ext1_dim_signed, ext1_dim_unsigned, hom_dim_signed, support_from_dims,
    support_from_dims_unsigned, Filtration,
};
use delta_orbit::functors::{induce_to_signed, restrict_to_plain};
use delta_orbit::quiver::BoundQuiver;
use delta_orbit::rep::{ext1_dim, hom_dim};
use delta_orbit::signed::{Sign, SignedSubset, UnsignedSubset};
use delta_orbit::sweeps::{enumerate_alternating, enumerate_unsigned};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn f101() -> PrimeField {
    PrimeField::new(101).unwrap()
}

#[test]
fn projectives_have_triangular_dimension() {
    // each indecomposable projective of the plain algebra has total dimension
    // equal to the number of lattice points under its staircase; summing the
    // generator column over all vertices gives n(n+1)/2 per weight-1 column
    for n in 1..=6 {
        let q = BoundQuiver::plain(n);
        let p1 = build_projective(q.clone(), q.vertex_plain(1), Rationals);
        assert_eq!(p1.rep.total_dim(), n * (n + 1) / 2);
        assert_eq!(p1.rep.validate(), Ok(()));
        let qs = BoundQuiver::signed(n);
        for s in [Sign::Plus, Sign::Minus] {
            let p = build_projective(qs.clone(), qs.vertex_signed(1, s), f101());
            // the signed weight-1 projective keeps every other depth on each
            // vertex, and the two signs partition the plain fibres
            assert_eq!(p.rep.validate(), Ok(()));
        }
        // the two signed weight-1 projectives split every fibre of the plain
        // one by parity, on each of the two rails
        let pp = build_projective(qs.clone(), qs.vertex_signed(1, Sign::Plus), Rationals);
        let pm = build_projective(qs.clone(), qs.vertex_signed(1, Sign::Minus), Rationals);
        assert_eq!(pp.rep.total_dim() + pm.rep.total_dim(), n * (n + 1));
        // restriction of either one recovers a module of triangular dimension
        let r = restrict_to_plain(&pp.rep);
        assert_eq!(r.total_dim(), n * (n + 1) / 2);
    }
}

#[test]
fn standard_modules_match_closed_dimensions() {
    for n in 1..=5 {
        for i in enumerate_alternating(n) {
            if i.elems().is_empty() {
                continue;
            }
            let d = build_delta_signed(&i, Rationals).unwrap();
            assert_eq!(d.rep.validate(), Ok(()));
            assert_eq!(d.rep.comp_dims(), delta_dims(&i), "support {}", i);
            // the standard filtration recovered from dimensions is the support
            let m = support_from_dims(&d.rep.comp_dims(), Filtration::Standard).unwrap();
            assert_eq!(m.to_signed_subset(n).unwrap(), i);
        }
    }
}

#[test]
fn nabla_support_is_the_named_set() {
    for n in 1..=5 {
        for i in enumerate_alternating(n) {
            if i.elems().is_empty() || !i.is_step_alternating() {
                continue;
            }
            let nab = build_nabla_signed(&i, Rationals).unwrap();
            let m = support_from_dims(&nab.comp_dims(), Filtration::Costandard).unwrap();
            assert_eq!(m.to_signed_subset(n).unwrap(), i, "support {}", i);
        }
    }
}

#[test]
fn restriction_forgets_signs() {
    for n in 1..=5 {
        for i in enumerate_alternating(n) {
            if i.elems().is_empty() {
                continue;
            }
            let d = build_delta_signed(&i, Rationals).unwrap();
            let r = restrict_to_plain(&d.rep);
            assert_eq!(r.validate(), Ok(()));
            let supp = support_from_dims_unsigned(&r.comp_dims_plain()).unwrap();
            let expected: Vec<usize> = i.unsigned().weights().to_vec();
            let got: Vec<usize> = {
                let mut v: Vec<usize> = supp.keys().copied().collect();
                v.sort_by(|a, b| b.cmp(a));
                v
            };
            assert_eq!(got, expected);
            assert!(supp.values().all(|&k| k == 1));
        }
    }
}

#[test]
fn induction_doubles_onto_both_rails() {
    for n in 1..=5 {
        for i0 in enumerate_unsigned(n) {
            if i0.weights().is_empty() {
                continue;
            }
            let d = build_delta_plain(&i0, Rationals).unwrap();
            let ind = induce_to_signed(&d.rep);
            assert_eq!(ind.validate(), Ok(()));
            assert_eq!(ind.total_dim(), 2 * d.rep.total_dim());
            // Delta-support of the induced module is I + (-I) for the
            // plus-anchored signing I of I0
            let i = i0.anchor_signs(Sign::Plus);
            let mut expected = delta_dims(&i);
            let neg = delta_dims(&i.negate());
            for w in 1..=n {
                for s in [Sign::Plus, Sign::Minus] {
                    let v = expected.get(w, s) + neg.get(w, s);
                    expected.set(w, s, v);
                }
            }
            assert_eq!(ind.comp_dims(), expected, "support {}", i0);
        }
    }
}

#[test]
fn induction_of_a_single_standard_splits() {
    // induce(Delta(i)) = Delta(i^+) + Delta(i^-): check by hom counts
    for n in 1..=4 {
        for w in 1..=n {
            let i0 = UnsignedSubset::new(n, vec![w]).unwrap();
            let d = build_delta_plain(&i0, Rationals).unwrap();
            let ind = induce_to_signed(&d.rep);
            let dp =
                build_delta_signed(&SignedSubset::new(n, vec![(w, Sign::Plus)]).unwrap(), Rationals)
                    .unwrap();
            let dm = build_delta_signed(
                &SignedSubset::new(n, vec![(w, Sign::Minus)]).unwrap(),
                Rationals,
            )
            .unwrap();
            assert_eq!(hom_dim(&dp.rep, &ind), 1);
            assert_eq!(hom_dim(&dm.rep, &ind), 1);
            assert_eq!(hom_dim(&ind, &ind), 2);
            assert_eq!(ext1_dim(&ind, &ind), 0);
        }
    }
}

#[test]
fn induction_is_left_adjoint_to_restriction() {
    // hom(induce X, Y) = hom(X, restrict Y) pins down the twist placement
    for n in 2..=4 {
        let ys = enumerate_alternating(n);
        for i0 in enumerate_unsigned(n) {
            if i0.weights().is_empty() {
                continue;
            }
            let x = build_delta_plain(&i0, Rationals).unwrap().rep;
            let ix = induce_to_signed(&x);
            for j in &ys {
                if j.elems().is_empty() {
                    continue;
                }
                let y = build_delta_signed(j, Rationals).unwrap().rep;
                let ry = restrict_to_plain(&y);
                assert_eq!(
                    hom_dim(&ix, &y),
                    hom_dim(&x, &ry),
                    "adjunction at I0={} J={}",
                    i0,
                    j
                );
            }
        }
    }
}

#[test]
fn ext_additivity_under_induction() {
    // ext_plain(I0, J0) = ext_signed(I, J) + ext_signed(-I, J)
    for n in 1..=5 {
        for j in enumerate_alternating(n) {
            if j.elems().is_empty() {
                continue;
            }
            let j0 = j.unsigned();
            for anchor in [Sign::Plus] {
                for i0 in enumerate_unsigned(n) {
                    if i0.weights().is_empty() {
                        continue;
                    }
                    let i = i0.anchor_signs(anchor);
                    let lhs = ext1_dim_unsigned(&i0, &j0);
                    let rhs = ext1_dim_signed(&i, &j).unwrap()
                        + ext1_dim_signed(&i.negate(), &j).unwrap();
                    assert_eq!(lhs, rhs, "I0={} J={}", i0, j);
                }
            }
        }
    }
}

#[test]
fn presentation_route_agrees_with_cocycles() {
    let sets4 = enumerate_alternating(4);
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..40 {
        let a = &sets4[rng.gen_range(0..sets4.len())];
        let b = &sets4[rng.gen_range(0..sets4.len())];
        if a.elems().is_empty() || b.elems().is_empty() {
            continue;
        }
        let m = build_delta_signed(a, Rationals).unwrap().rep;
        let n = build_delta_signed(b, Rationals).unwrap().rep;
        assert_eq!(
            ext1_dim(&m, &n),
            ext1_dim_via_presentation(&m, &n),
            "I={} J={}",
            a,
            b
        );
    }
}

#[test]
fn projectives_have_no_higher_extensions() {
    let n = 4;
    let q = BoundQuiver::signed(n);
    for w in 1..=n {
        for s in [Sign::Plus, Sign::Minus] {
            let p = build_projective(q.clone(), q.vertex_signed(w, s), f101());
            for j in enumerate_alternating(n) {
                if j.elems().is_empty() {
                    continue;
                }
                let d = build_delta_signed(&j, f101()).unwrap();
                assert_eq!(ext1_dim(&p.rep, &d.rep), 0);
            }
        }
    }
}

#[test]
fn random_pairs_at_rank_six_match_the_formulas() {
    let n = 6;
    let sets = enumerate_alternating(n);
    let nonempty: Vec<&SignedSubset> =
        sets.iter().filter(|s| !s.elems().is_empty()).collect();
    let field = f101();
    let built: Vec<_> = nonempty
        .iter()
        .map(|s| build_delta_signed(s, field.clone()).unwrap().rep)
        .collect();
    let mut rng = StdRng::seed_from_u64(42);
    for _ in 0..2000 {
        let a = rng.gen_range(0..nonempty.len());
        let b = rng.gen_range(0..nonempty.len());
        assert_eq!(
            hom_dim(&built[a], &built[b]),
            hom_dim_signed(nonempty[a], nonempty[b]),
            "hom I={} J={}",
            nonempty[a],
            nonempty[b]
        );
        assert_eq!(
            ext1_dim(&built[a], &built[b]),
            ext1_dim_signed(nonempty[a], nonempty[b]).unwrap(),
            "ext I={} J={}",
            nonempty[a],
            nonempty[b]
        );
    }
}

#[test]
fn dimensions_are_field_independent() {
    let n = 4;
    let big = PrimeField::new(32749).unwrap();
    for i in enumerate_alternating(n) {
        if i.elems().is_empty() {
            continue;
        }
        for j in enumerate_alternating(n) {
            if j.elems().is_empty() {
                continue;
            }
            let (ar, br) = (
                build_delta_signed(&i, Rationals).unwrap().rep,
                build_delta_signed(&j, Rationals).unwrap().rep,
            );
            let (ap, bp) = (
                build_delta_signed(&i, big.clone()).unwrap().rep,
                build_delta_signed(&j, big.clone()).unwrap().rep,
            );
            assert_eq!(hom_dim(&ar, &br), hom_dim(&ap, &bp));
            assert_eq!(ext1_dim(&ar, &br), ext1_dim(&ap, &bp));
        }
    }
}
