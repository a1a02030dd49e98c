//! Exhaustive agreement sweeps between the closed-form layer and the
//! linear-algebra oracle, over all (signed) supports at a given rank.

use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::build::{
    build_delta_plain, build_delta_signed, build_middle_term, cyclicity_check, splitting_test,
};
use crate::field::{Field, FieldChoice, FieldError, PrimeField, Rationals};
use crate::formulas::{
    complement_signed, ext1_dim_signed, ext1_dim_unsigned, hom_dim_signed, hom_dim_unsigned,
    support_from_dims, Filtration, MirrorPairContext,
};
use crate::rep::{ext1_dim, hom_dim, quotient_rep};
use crate::signed::{Sign, SignedSubset, UnsignedSubset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Hom,
    Ext,
    Complement,
    Tilde,
    Middle,
    Cyclic,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Hom,
        CheckKind::Ext,
        CheckKind::Complement,
        CheckKind::Tilde,
        CheckKind::Middle,
        CheckKind::Cyclic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Hom => "hom",
            CheckKind::Ext => "ext",
            CheckKind::Complement => "complement",
            CheckKind::Tilde => "tilde",
            CheckKind::Middle => "E",
            CheckKind::Cyclic => "cyclic",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SweepError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl FromStr for CheckKind {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, SweepError> {
        match s {
            "hom" => Ok(CheckKind::Hom),
            "ext" => Ok(CheckKind::Ext),
            "complement" => Ok(CheckKind::Complement),
            "tilde" => Ok(CheckKind::Tilde),
            "E" => Ok(CheckKind::Middle),
            "cyclic" => Ok(CheckKind::Cyclic),
            other => Err(SweepError::UnknownCheck(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub check: String,
    pub cases: usize,
    pub mismatches: Vec<String>,
}

impl SweepOutcome {
    pub fn clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// All subsets of {1, ..., n} in binary order (deterministic).
pub fn enumerate_unsigned(n: usize) -> Vec<UnsignedSubset> {
    (0usize..1 << n)
        .map(|bits| {
            UnsignedSubset::new(n, (1..=n).filter(|i| bits >> (i - 1) & 1 == 1).collect())
                .expect("bit pattern gives distinct weights")
        })
        .collect()
}

/// All alternating signed subsets: the empty set once, every nonempty
/// support with both anchor signs.
pub fn enumerate_alternating(n: usize) -> Vec<SignedSubset> {
    let mut out = vec![SignedSubset::empty(n)];
    for u in enumerate_unsigned(n) {
        if u.is_empty() {
            continue;
        }
        out.push(u.anchor_signs(Sign::Plus));
        out.push(u.anchor_signs(Sign::Minus));
    }
    out
}

/// All mirrored-pair contexts at rank n (plus-anchored supports passing the
/// gap condition), restricted to those with at least `min_r` shared gaps.
pub fn enumerate_mirror_contexts(n: usize, min_r: usize) -> Vec<MirrorPairContext> {
    enumerate_unsigned(n)
        .into_iter()
        .filter(|u| !u.is_empty())
        .filter_map(|u| MirrorPairContext::new(&u.anchor_signs(Sign::Plus)).ok())
        .filter(|ctx| ctx.r >= min_r)
        .collect()
}

fn collect_failures<T: Sync>(items: &[T], f: impl Fn(&T) -> Option<String> + Sync) -> Vec<String> {
    items.par_iter().filter_map(|x| f(x)).collect()
}

fn hom_ext_plain<F: Field>(n: usize, field: &F, want_ext: bool) -> SweepOutcome {
    let sets = enumerate_unsigned(n);
    let reps: Vec<_> = sets
        .iter()
        .map(|u| build_delta_plain(u, field.clone()).expect("plain standard module").rep)
        .collect();
    let pairs: Vec<(usize, usize)> = (0..sets.len())
        .flat_map(|a| (0..sets.len()).map(move |b| (a, b)))
        .collect();
    let mismatches = collect_failures(&pairs, |&(a, b)| {
        let (formula, oracle) = if want_ext {
            (
                ext1_dim_unsigned(&sets[a], &sets[b]),
                ext1_dim(&reps[a], &reps[b]),
            )
        } else {
            (hom_dim_unsigned(&sets[a], &sets[b]), hom_dim(&reps[a], &reps[b]))
        };
        (formula != oracle).then(|| {
            format!(
                "A n={} I={} J={} formula={} oracle={}",
                n, sets[a], sets[b], formula, oracle
            )
        })
    });
    SweepOutcome {
        check: if want_ext { "ext(A)" } else { "hom(A)" }.to_string(),
        cases: pairs.len(),
        mismatches,
    }
}

fn hom_ext_signed<F: Field>(n: usize, field: &F, want_ext: bool) -> SweepOutcome {
    let sets = enumerate_alternating(n);
    let reps: Vec<_> = sets
        .iter()
        .map(|s| build_delta_signed(s, field.clone()).expect("signed standard module").rep)
        .collect();
    let pairs: Vec<(usize, usize)> = (0..sets.len())
        .flat_map(|a| (0..sets.len()).map(move |b| (a, b)))
        .collect();
    let mismatches = collect_failures(&pairs, |&(a, b)| {
        let (formula, oracle) = if want_ext {
            (
                ext1_dim_signed(&sets[a], &sets[b]).expect("alternating"),
                ext1_dim(&reps[a], &reps[b]),
            )
        } else {
            (hom_dim_signed(&sets[a], &sets[b]), hom_dim(&reps[a], &reps[b]))
        };
        (formula != oracle).then(|| {
            format!(
                "D n={} I={} J={} formula={} oracle={}",
                n, sets[a], sets[b], formula, oracle
            )
        })
    });
    SweepOutcome {
        check: if want_ext { "ext(D)" } else { "hom(D)" }.to_string(),
        cases: pairs.len(),
        mismatches,
    }
}

fn complement_sweep<F: Field>(n: usize, field: &F) -> SweepOutcome {
    let sets = enumerate_alternating(n);
    let mismatches = collect_failures(&sets, |i| {
        let c = match complement_signed(i) {
            Ok(c) => c,
            Err(e) => return Some(format!("n={} I={} complement failed: {}", n, i, e)),
        };
        if !c.is_step_alternating() {
            return Some(format!("n={} I={} complement {} not step-alternating", n, i, c));
        }
        if c.unsigned() != i.unsigned().complement() {
            return Some(format!("n={} I={} complement {} wrong support", n, i, c));
        }
        // oracle: the cokernel of the embedding has costandard support c
        let delta = build_delta_signed(i, field.clone()).expect("standard module");
        let (coker, _, _) = quotient_rep(&delta.container.rep, &delta.embedding);
        let supp = support_from_dims(&coker.comp_dims(), Filtration::Costandard)
            .ok()
            .and_then(|m| m.to_signed_subset(n).ok());
        if supp.as_ref() != Some(&c) {
            return Some(format!(
                "n={} I={} oracle costandard support {:?} != {}",
                n, i, supp, c
            ));
        }
        None
    });
    SweepOutcome {
        check: "complement".to_string(),
        cases: sets.len(),
        mismatches,
    }
}

fn tilde_sweep(n: usize) -> SweepOutcome {
    let ctxs = enumerate_mirror_contexts(n, 1);
    let mismatches = collect_failures(&ctxs, |ctx| {
        let (ti, tj) = match ctx.tilde_sets() {
            Ok(x) => x,
            Err(e) => return Some(format!("n={} I={} tilde failed: {}", n, ctx.i, e)),
        };
        if !ti.is_alternating() || !tj.is_alternating() {
            return Some(format!("n={} I={} tilde sets not alternating", n, ctx.i));
        }
        if ti.weight_sum() + tj.weight_sum() != ctx.i.weight_sum() + ctx.j.weight_sum() {
            return Some(format!("n={} I={} tilde dimension mismatch", n, ctx.i));
        }
        if ctx.r % 2 == 1 {
            let union = ctx.i.unsigned().union(&ctx.j.unsigned());
            let inter = ctx.i.unsigned().intersect(&ctx.j.unsigned());
            if ti.unsigned() != union || tj.unsigned() != inter {
                return Some(format!("n={} I={} odd-r tilde supports wrong", n, ctx.i));
            }
        }
        // the pair extension dimensions follow the ceiling/floor law
        let up = ext1_dim_signed(&ctx.j, &ctx.i).expect("alternating");
        let dn = ext1_dim_signed(&ctx.j.negate(), &ctx.i).expect("alternating");
        if up != (ctx.r + 1) / 2 || dn != ctx.r / 2 {
            return Some(format!(
                "n={} I={} pair ext ({}, {}) != ({}, {})",
                n,
                ctx.i,
                up,
                dn,
                (ctx.r + 1) / 2,
                ctx.r / 2
            ));
        }
        None
    });
    SweepOutcome {
        check: "tilde".to_string(),
        cases: ctxs.len(),
        mismatches,
    }
}

fn middle_sweep<F: Field>(n: usize, field: &F, cyclic: bool) -> SweepOutcome {
    let ctxs = enumerate_mirror_contexts(n, 1);
    let mismatches = collect_failures(&ctxs, |ctx| {
        let mid = match build_middle_term(ctx, false, field.clone()) {
            Ok(m) => m,
            Err(e) => return Some(format!("n={} I={} middle term failed: {}", n, ctx.i, e)),
        };
        if cyclic {
            if !cyclicity_check(&mid) {
                return Some(format!("n={} I={} generator not cyclic", n, ctx.i));
            }
            return None;
        }
        // hom(Delta(J), cokernel) realizes ext1(Delta(J), Delta(I)) = ceil(r/2)
        let expected_hom = (ctx.r + 1) / 2;
        if mid.hom_to_cokernel != expected_hom {
            return Some(format!(
                "n={} I={} hom to cokernel {} != ceil(r/2) = {}",
                n, ctx.i, mid.hom_to_cokernel, expected_hom
            ));
        }
        if mid.e.total_dim() != ctx.i.weight_sum() + ctx.j.weight_sum() {
            return Some(format!("n={} I={} middle term has wrong dimension", n, ctx.i));
        }
        let (ti, tj) = ctx.tilde_sets().expect("r >= 1");
        let top = build_delta_signed(&ti, field.clone()).expect("tilde top").rep;
        let split = match splitting_test(&mid.e, &mid.bottom_ker, &top) {
            Ok(s) => s,
            Err(e) => return Some(format!("n={} I={} splitting test failed: {}", n, ctx.i, e)),
        };
        if split != (ctx.r % 2 == 1) {
            return Some(format!(
                "n={} I={} split={} disagrees with r={}",
                n, ctx.i, split, ctx.r
            ));
        }
        let bottom = crate::rep::sub_to_rep(&mid.e, &mid.bottom_ker);
        if bottom.comp_dims() != crate::formulas::delta_dims(&tj) {
            return Some(format!(
                "n={} I={} kernel piece does not match tilde-J {}",
                n, ctx.i, tj
            ));
        }
        if ext1_dim(&mid.e, &mid.e) != 0 {
            return Some(format!("n={} I={} middle term has self-extensions", n, ctx.i));
        }
        None
    });
    SweepOutcome {
        check: if cyclic { "cyclic" } else { "E" }.to_string(),
        cases: ctxs.len(),
        mismatches,
    }
}

fn run_generic<F: Field>(n: usize, checks: &[CheckKind], field: &F) -> Vec<SweepOutcome> {
    let mut out = Vec::new();
    for &c in checks {
        match c {
            CheckKind::Hom => {
                out.push(hom_ext_plain(n, field, false));
                out.push(hom_ext_signed(n, field, false));
            }
            CheckKind::Ext => {
                out.push(hom_ext_plain(n, field, true));
                out.push(hom_ext_signed(n, field, true));
            }
            CheckKind::Complement => out.push(complement_sweep(n, field)),
            CheckKind::Tilde => out.push(tilde_sweep(n)),
            CheckKind::Middle => out.push(middle_sweep(n, field, false)),
            CheckKind::Cyclic => out.push(middle_sweep(n, field, true)),
        }
    }
    out
}

/// Runs the requested agreement checks at rank n over the chosen field, with
/// `jobs` worker threads (default: all available).
pub fn run_checks(
    n: usize,
    checks: &[CheckKind],
    field: FieldChoice,
    jobs: Option<usize>,
) -> Result<Vec<SweepOutcome>, SweepError> {
    let body = || match field {
        FieldChoice::Rationals => Ok(run_generic(n, checks, &Rationals)),
        FieldChoice::Prime(p) => {
            let f = PrimeField::new(p)?;
            Ok(run_generic(n, checks, &f))
        }
    };
    match jobs {
        None => body(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(body),
    }
}
