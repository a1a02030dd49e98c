//! Acceptance gate: one test per criterion, each printing a single PASS/FAIL
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines even on success.

use std::time::Instant;

use delta_orbit::build::{
    build_delta_signed, build_middle_term, build_projective, cyclicity_check, splitting_test,
};
use delta_orbit::field::{FieldChoice, PrimeField, Rationals};
use delta_orbit::formulas::{
    complement_signed, ext1_dim_signed, ext1_dim_unsigned, support_from_dims, Filtration,
    MiddleTermClass, MirrorPairContext,
};
use delta_orbit::functors::{induce_to_signed, restrict_to_plain};
use delta_orbit::quiver::BoundQuiver;
use delta_orbit::rep::{ext1_dim, hom_dim, is_closed};
use delta_orbit::richardson::{self, StageKind, SymDimVector};
use delta_orbit::signed::{Sign, SignedSubset};
use delta_orbit::sweeps::{enumerate_alternating, enumerate_mirror_contexts, enumerate_unsigned,
    run_checks, CheckKind};

fn sset(n: usize, s: &str) -> SignedSubset {
    SignedSubset::parse(n, s).unwrap()
}

fn report(criterion: usize, label: &str, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("criterion {}: PASS — {}", criterion, label),
        Err(e) => println!("criterion {}: FAIL — {}: {}", criterion, label, e),
    }
    if let Err(e) = result {
        panic!("criterion {} failed: {}", criterion, e);
    }
}

fn check(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

#[test]
fn criterion_1_worked_mirror_pair_end_to_end() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        let n = 8;
        let i = sset(n, "8+,7-,6+,5-,4+,1-");
        let ctx = MirrorPairContext::new(&i).map_err(|e| e.to_string())?;
        check(ctx.j == sset(n, "8-,5+,4-,3+,2-,1+"), "J is the mirror set")?;
        let ic = complement_signed(&i).map_err(|e| e.to_string())?;
        check(ic == sset(n, "3-,2-"), "I^c = {3-,2-}")?;
        let jc = complement_signed(&ctx.j).map_err(|e| e.to_string())?;
        check(jc == sset(n, "7+,6+"), "J^c = {7+,6+}")?;
        let (ti, tj) = ctx.tilde_sets().map_err(|e| e.to_string())?;
        check(ti == sset(n, "8+,7-,6+,5-,4+,2-,1+"), "tilde-I")?;
        check(tj == sset(n, "8-,5+,4-,3+,1-"), "tilde-J")?;
        check(
            matches!(
                ctx.classify().map_err(|e| e.to_string())?,
                MiddleTermClass::Indecomposable { .. }
            ),
            "classification is the indecomposable (even-r) type",
        )?;
        let mid = build_middle_term(&ctx, false, Rationals).map_err(|e| e.to_string())?;
        check(mid.e.total_dim() == 54, "dim E = 54")?;
        let top = build_delta_signed(&ti, Rationals).map_err(|e| e.to_string())?.rep;
        let split = splitting_test(&mid.e, &mid.bottom_ker, &top).map_err(|e| e.to_string())?;
        check(!split, "the tilde sequence is non-split")?;
        check(ext1_dim(&mid.e, &mid.e) == 0, "ext1(E,E) = 0")?;
        check(start.elapsed().as_secs() < 5, "completes in under 5 s")?;
        Ok(())
    };
    report(1, "worked mirrored pair at n=8 end-to-end", run());
}

#[test]
fn criterion_2_dimension_vector_1354531() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        let d = SymDimVector::new(vec![1, 3, 5, 4, 5, 3, 1]).map_err(|e| e.to_string())?;
        let plan = richardson::decompose(&d).map_err(|e| e.to_string())?;
        check(plan.stages.len() == 3, "three stages")?;
        let expect = [
            (
                1,
                vec![1, 1, 1, 1, 1, 1, 0],
                vec![0, 1, 1, 1, 1, 1, 1],
                vec![1, 2, 2, 2, 2, 2, 1],
                "7+,6-,5+,4-,3+,2-",
                "6-,5+,4-,3+,2-,1+",
            ),
            (
                2,
                vec![0, 1, 1, 1, 1, 0, 0],
                vec![0, 0, 1, 1, 1, 1, 0],
                vec![0, 1, 2, 2, 2, 1, 0],
                "6+,5-,4+,3-",
                "5-,4+,3-,2+",
            ),
            (
                3,
                vec![0, 0, 1, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 1, 0, 0],
                vec![0, 0, 1, 0, 1, 0, 0],
                "5+",
                "3-",
            ),
        ];
        for (s, (k, f, g, e, iset, jset)) in plan.stages.iter().zip(expect.iter()) {
            check(s.k == *k, "stage index")?;
            check(&s.f == f, &format!("f^{}", k))?;
            check(&s.g == g, &format!("g^{}", k))?;
            check(&s.e == e, &format!("e^{}", k))?;
            check(s.i_set == sset(7, iset), &format!("I^{}", k))?;
            check(s.j_set == sset(7, jset), &format!("J^{}", k))?;
            check(s.kind == StageKind::Extension, "all stages are extensions")?;
        }
        check(plan.variant_count() == 8, "variant count 8")?;
        let cert = richardson::certify(&plan, Rationals).map_err(|e| e.to_string())?;
        check(cert.ext_self == 0, "ext1(M,M) = 0")?;
        check(cert.support_matches, "restricted standard support equals d")?;
        check(start.elapsed().as_secs() < 30, "completes in under 30 s")?;
        Ok(())
    };
    report(2, "d = (1,3,5,4,5,3,1) verbatim plan + certificate", run());
}

#[test]
fn criterion_3_dimension_vector_1353531() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        let d = SymDimVector::new(vec![1, 3, 5, 3, 5, 3, 1]).map_err(|e| e.to_string())?;
        let plan = richardson::decompose(&d).map_err(|e| e.to_string())?;
        check(plan.stages.len() == 3, "three stages")?;
        let kinds: Vec<StageKind> = plan.stages.iter().map(|s| s.kind).collect();
        check(
            kinds == vec![StageKind::Projective, StageKind::Sum, StageKind::Sum],
            "stage kinds projective + two sums",
        )?;
        check(plan.stages[0].e == vec![1, 1, 1, 1, 1, 1, 1], "e^0")?;
        check(plan.stages[1].e == vec![0, 2, 2, 2, 2, 2, 0], "e^1")?;
        check(plan.stages[2].e == vec![0, 0, 2, 0, 2, 0, 0], "e^2")?;
        check(
            plan.stages[0].i_set == sset(7, "7+,6-,5+,4-,3+,2-,1+"),
            "I^0",
        )?;
        check(plan.stages[0].j_set == SignedSubset::empty(7), "J^0 empty")?;
        check(plan.stages[1].i_set == sset(7, "6+,5-,4+,3-,2+"), "I^1")?;
        check(plan.stages[1].j_set == sset(7, "6-,5+,4-,3+,2-"), "J^1")?;
        check(plan.stages[2].i_set == sset(7, "5+,3-"), "I^2")?;
        check(plan.stages[2].j_set == sset(7, "5-,3+"), "J^2")?;
        check(plan.variant_count() == 2, "variant count 2")?;
        let cert = richardson::certify(&plan, Rationals).map_err(|e| e.to_string())?;
        check(cert.ok(), "certificate passes")?;
        check(start.elapsed().as_secs() < 30, "completes in under 30 s")?;
        Ok(())
    };
    report(3, "d = (1,3,5,3,5,3,1) plan, kinds and certificate", run());
}

#[test]
fn criterion_4_formula_oracle_equivalence() {
    let run = || -> Result<(), String> {
        for n in 3..=5 {
            let outcomes = run_checks(
                n,
                &[CheckKind::Hom, CheckKind::Ext],
                FieldChoice::Prime(101),
                None,
            )
            .map_err(|e| e.to_string())?;
            for o in outcomes {
                if !o.clean() {
                    return Err(format!(
                        "n={} {}: {} mismatches, first: {}",
                        n,
                        o.check,
                        o.mismatches.len(),
                        o.mismatches[0]
                    ));
                }
            }
        }
        Ok(())
    };
    report(
        4,
        "hom/ext closed forms equal oracle on all pairs, n = 3,4,5",
        run(),
    );
}

#[test]
fn criterion_5_structural_suite() {
    let run = || -> Result<(), String> {
        let field = PrimeField::new(101).unwrap();
        for n in 1..=5 {
            let q = BoundQuiver::signed(n);
            // projective dimensions
            for s in [Sign::Plus, Sign::Minus] {
                let p = build_projective(q.clone(), q.vertex_signed(1, s), field.clone());
                check(
                    p.rep.total_dim() == n * (n + 1) / 2,
                    &format!("dim P(1^{}) = n(n+1)/2 at n={}", s, n),
                )?;
            }
            // exactly 2^n standard submodules per weight-1 projective: the
            // zero module plus one anchoring of each nonempty support
            for gamma in [Sign::Plus, Sign::Minus] {
                let mut count = 1usize; // the zero submodule
                for i in enumerate_alternating(n) {
                    if i.elems().is_empty() {
                        continue;
                    }
                    let d = build_delta_signed(&i, field.clone()).map_err(|e| e.to_string())?;
                    if d.container.vertex != q.vertex_signed(1, gamma) {
                        continue;
                    }
                    check(
                        is_closed(&d.container.rep, &d.embedding),
                        &format!("Delta({}) embeds as a submodule", i),
                    )?;
                    count += 1;
                }
                check(
                    count == 1 << n,
                    &format!("2^n submodules of P(1^{}) at n={}", gamma, n),
                )?;
            }
            // complements: step-alternating, and the quotient's costandard
            // support is the complement (oracle-confirmed)
            let outcomes = run_checks(
                n,
                &[CheckKind::Complement],
                FieldChoice::Prime(101),
                None,
            )
            .map_err(|e| e.to_string())?;
            for o in outcomes {
                if !o.clean() {
                    return Err(format!("complement sweep n={}: {}", n, o.mismatches[0]));
                }
            }
            // restriction / induction identities
            for i in enumerate_alternating(n) {
                if i.elems().is_empty() {
                    continue;
                }
                let d = build_delta_signed(&i, field.clone()).map_err(|e| e.to_string())?;
                let r = restrict_to_plain(&d.rep);
                let supp = delta_orbit::formulas::support_from_dims_unsigned(&r.comp_dims_plain())
                    .map_err(|e| e.to_string())?;
                let mut got: Vec<usize> = supp.keys().copied().collect();
                got.sort_by(|a, b| b.cmp(a));
                check(
                    got == i.unsigned().weights() && supp.values().all(|&k| k == 1),
                    &format!("restrict(Delta({})) has support I0", i),
                )?;
            }
            for i0 in enumerate_unsigned(n) {
                if i0.weights().is_empty() {
                    continue;
                }
                let x = delta_orbit::build::build_delta_plain(&i0, field.clone())
                    .map_err(|e| e.to_string())?
                    .rep;
                let ind = induce_to_signed(&x);
                let i = i0.anchor_signs(Sign::Plus);
                let expected = delta_orbit::formulas::delta_dims(&i)
                    .add(&delta_orbit::formulas::delta_dims(&i.negate()));
                check(
                    ind.comp_dims() == expected,
                    &format!("induce(Delta({})) = Delta(I) + Delta(-I)", i0),
                )?;
                // ext additivity against every alternating J
                for j in enumerate_alternating(n) {
                    if j.elems().is_empty() {
                        continue;
                    }
                    let lhs = ext1_dim_unsigned(&i0, &j.unsigned());
                    let rhs = ext1_dim_signed(&i, &j).map_err(|e| e.to_string())?
                        + ext1_dim_signed(&i.negate(), &j).map_err(|e| e.to_string())?;
                    check(
                        lhs == rhs,
                        &format!("ext additivity at I0={} J={}", i0, j),
                    )?;
                }
            }
        }
        Ok(())
    };
    report(5, "structural suite over n <= 5", run());
}

#[test]
fn criterion_6_mirror_pair_laws() {
    let run = || -> Result<(), String> {
        let start = Instant::now();
        let field = PrimeField::new(101).unwrap();
        for n in 2..=7 {
            for ctx in enumerate_mirror_contexts(n, 1) {
                let di = build_delta_signed(&ctx.i, field.clone()).map_err(|e| e.to_string())?.rep;
                let dj = build_delta_signed(&ctx.j, field.clone()).map_err(|e| e.to_string())?.rep;
                let djm = build_delta_signed(&ctx.j.negate(), field.clone())
                    .map_err(|e| e.to_string())?
                    .rep;
                let tag = format!("n={} I={}", n, ctx.i);
                check(ext1_dim(&di, &dj) == 0, &format!("{}: ext(I,J)=0", tag))?;
                check(ext1_dim(&di, &djm) == 0, &format!("{}: ext(I,-J)=0", tag))?;
                check(
                    ext1_dim(&dj, &di) == (ctx.r + 1) / 2,
                    &format!("{}: ext(J,I)=ceil(r/2)", tag),
                )?;
                check(
                    ext1_dim(&djm, &di) == ctx.r / 2,
                    &format!("{}: ext(-J,I)=floor(r/2)", tag),
                )?;
                let mid = build_middle_term(&ctx, false, field.clone())
                    .map_err(|e| e.to_string())?;
                check(cyclicity_check(&mid), &format!("{}: cyclic generator", tag))?;
                let (ti, _) = ctx.tilde_sets().map_err(|e| e.to_string())?;
                let top = build_delta_signed(&ti, field.clone())
                    .map_err(|e| e.to_string())?
                    .rep;
                let split = splitting_test(&mid.e, &mid.bottom_ker, &top)
                    .map_err(|e| e.to_string())?;
                let class = ctx.classify().map_err(|e| e.to_string())?;
                check(
                    split == matches!(class, MiddleTermClass::Decomposable { .. }),
                    &format!("{}: parity law matches oracle splitting", tag),
                )?;
            }
        }
        check(start.elapsed().as_secs() < 900, "completes in under 15 min")?;
        Ok(())
    };
    report(6, "mirrored-pair extension laws over n <= 7", run());
}

#[test]
fn criterion_7_field_independence() {
    let run = || -> Result<(), String> {
        let big = PrimeField::new(32749).unwrap();
        for n in 2..=4 {
            // criterion-4 slice: all pair dimensions agree across fields
            let sets: Vec<SignedSubset> = enumerate_alternating(n)
                .into_iter()
                .filter(|s| !s.elems().is_empty())
                .collect();
            let rat: Vec<_> = sets
                .iter()
                .map(|s| build_delta_signed(s, Rationals).unwrap().rep)
                .collect();
            let fp: Vec<_> = sets
                .iter()
                .map(|s| build_delta_signed(s, big.clone()).unwrap().rep)
                .collect();
            for a in 0..sets.len() {
                for b in 0..sets.len() {
                    check(
                        hom_dim(&rat[a], &rat[b]) == hom_dim(&fp[a], &fp[b]),
                        &format!("hom dims agree at I={} J={}", sets[a], sets[b]),
                    )?;
                    check(
                        ext1_dim(&rat[a], &rat[b]) == ext1_dim(&fp[a], &fp[b]),
                        &format!("ext dims agree at I={} J={}", sets[a], sets[b]),
                    )?;
                }
            }
            // criterion-5/6 slice: costandard supports and middle terms agree
            for ctx in enumerate_mirror_contexts(n, 1) {
                let mr = build_middle_term(&ctx, false, Rationals).map_err(|e| e.to_string())?;
                let mp = build_middle_term(&ctx, false, big.clone()).map_err(|e| e.to_string())?;
                check(
                    mr.e.dims == mp.e.dims && mr.hom_to_cokernel == mp.hom_to_cokernel,
                    &format!("middle term data agrees at I={}", ctx.i),
                )?;
                let sr = support_from_dims(&mr.nabla.comp_dims(), Filtration::Costandard)
                    .map_err(|e| e.to_string())?;
                let sp = support_from_dims(&mp.nabla.comp_dims(), Filtration::Costandard)
                    .map_err(|e| e.to_string())?;
                check(
                    sr == sp,
                    &format!("costandard supports agree at I={}", ctx.i),
                )?;
            }
        }
        Ok(())
    };
    report(
        7,
        "dimension outputs identical over rationals and F_32749, n <= 4",
        run(),
    );
}
