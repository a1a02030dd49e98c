//! Parsing and rendering of module descriptors: named modules such as
//! `P(1+)`, `Q(1-)`, `Delta(8+,7-)`, `Nabla(3-,2-)`, `E(8+,7-,6+,5-,4+,1-)`
//! and sums of them, built as explicit representations and summarized.

use std::collections::BTreeMap;

use serde_json::json;
use thiserror::Error;

use crate::build::{
    build_delta_plain, build_delta_signed, build_middle_term, build_nabla_signed,
    build_projective, BuildError,
};
use crate::field::{Field, FieldChoice, FieldError, PrimeField, Rationals};
use crate::formulas::{
    support_from_dims, support_from_dims_unsigned, Filtration, FormulaError, MirrorPairContext,
};
use crate::quiver::{AlgebraKind, BoundQuiver};
use crate::rep::{quotient_rep, Representation};
use crate::signed::{Sign, SignedSubset, UnsignedSubset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShowError {
    #[error("cannot parse module descriptor {0:?}")]
    Parse(String),
    #[error("descriptor invalid: {0}")]
    Set(String),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    ProjectivePlain(usize),
    ProjectiveSigned(usize, Sign),
    /// The injective envelope of the weight-1 simple of the given sign.
    InjectiveSigned(Sign),
    DeltaPlain(UnsignedSubset),
    DeltaSigned(SignedSubset),
    NablaPlain(UnsignedSubset),
    NablaSigned(SignedSubset),
    /// Canonical middle term of the mirrored pair anchored at I.
    Middle(SignedSubset),
    Sum(Vec<Descriptor>),
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            '+' if depth == 0 => {
                parts.push(cur.clone());
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    parts.push(cur);
    parts
}

fn parse_atom(alg: AlgebraKind, n: usize, s: &str) -> Result<Descriptor, ShowError> {
    let s = s.trim();
    let open = s.find('(').ok_or_else(|| ShowError::Parse(s.to_string()))?;
    if !s.ends_with(')') {
        return Err(ShowError::Parse(s.to_string()));
    }
    let head = &s[..open];
    let body = &s[open + 1..s.len() - 1];
    let signed_set =
        |b: &str| SignedSubset::parse(n, b).map_err(|e| ShowError::Set(e.to_string()));
    let unsigned_set =
        |b: &str| UnsignedSubset::parse(n, b).map_err(|e| ShowError::Set(e.to_string()));
    match (head, alg) {
        ("P", AlgebraKind::Plain) => {
            let u = unsigned_set(body)?;
            match u.weights() {
                [w] => Ok(Descriptor::ProjectivePlain(*w)),
                _ => Err(ShowError::Parse(s.to_string())),
            }
        }
        ("P", AlgebraKind::Signed) => {
            let v = signed_set(body)?;
            match v.elems() {
                [(w, sg)] => Ok(Descriptor::ProjectiveSigned(*w, *sg)),
                _ => Err(ShowError::Parse(s.to_string())),
            }
        }
        ("Q", AlgebraKind::Signed) => {
            let v = signed_set(body)?;
            match v.elems() {
                [(1, sg)] => Ok(Descriptor::InjectiveSigned(*sg)),
                _ => Err(ShowError::Parse(s.to_string())),
            }
        }
        ("Delta", AlgebraKind::Plain) => Ok(Descriptor::DeltaPlain(unsigned_set(body)?)),
        ("Delta", AlgebraKind::Signed) => Ok(Descriptor::DeltaSigned(signed_set(body)?)),
        ("Nabla", AlgebraKind::Plain) => Ok(Descriptor::NablaPlain(unsigned_set(body)?)),
        ("Nabla", AlgebraKind::Signed) => Ok(Descriptor::NablaSigned(signed_set(body)?)),
        ("E", AlgebraKind::Signed) => Ok(Descriptor::Middle(signed_set(body)?)),
        _ => Err(ShowError::Parse(s.to_string())),
    }
}

/// Parses a descriptor such as `Delta(5+,3-)+P(1+)` for the given algebra.
pub fn parse_descriptor(alg: AlgebraKind, n: usize, s: &str) -> Result<Descriptor, ShowError> {
    let parts = split_top_level(s);
    let atoms: Result<Vec<Descriptor>, ShowError> =
        parts.iter().map(|p| parse_atom(alg, n, p)).collect();
    let mut atoms = atoms?;
    if atoms.len() == 1 {
        Ok(atoms.remove(0))
    } else {
        Ok(Descriptor::Sum(atoms))
    }
}

/// Builds the described module over the given field.
pub fn build_descriptor<F: Field>(
    desc: &Descriptor,
    n: usize,
    alg: AlgebraKind,
    field: F,
) -> Result<Representation<F>, ShowError> {
    match desc {
        Descriptor::ProjectivePlain(w) => {
            let q = BoundQuiver::plain(n);
            let v = q.vertex_plain(*w);
            Ok(build_projective(q, v, field).rep)
        }
        Descriptor::ProjectiveSigned(w, s) => {
            let q = BoundQuiver::signed(n);
            let v = q.vertex_signed(*w, *s);
            Ok(build_projective(q, v, field).rep)
        }
        Descriptor::InjectiveSigned(s) => {
            let gamma = crate::signed::container_vertex_sign(n, *s);
            let q = BoundQuiver::signed(n);
            let v = q.vertex_signed(1, gamma);
            Ok(build_projective(q, v, field).rep)
        }
        Descriptor::DeltaPlain(u) => Ok(build_delta_plain(u, field)?.rep),
        Descriptor::DeltaSigned(i) => Ok(build_delta_signed(i, field)?.rep),
        Descriptor::NablaPlain(u) => {
            let c = u.complement();
            let delta = build_delta_plain(&c, field)?;
            let (q, _, _) = quotient_rep(&delta.container.rep, &delta.embedding);
            Ok(q)
        }
        Descriptor::NablaSigned(i) => Ok(build_nabla_signed(i, field)?),
        Descriptor::Middle(i) => {
            let ctx = MirrorPairContext::new(i)?;
            Ok(build_middle_term(&ctx, false, field)?.e)
        }
        Descriptor::Sum(parts) => {
            let built: Result<Vec<Representation<F>>, ShowError> = parts
                .iter()
                .map(|p| build_descriptor(p, n, alg, field.clone()))
                .collect();
            let built = built?;
            let refs: Vec<&Representation<F>> = built.iter().collect();
            Ok(Representation::direct_sum(&refs))
        }
    }
}

fn multiset_string(entries: Vec<(String, usize)>) -> String {
    entries
        .into_iter()
        .map(|(label, k)| {
            if k == 1 {
                label
            } else {
                format!("{}^{}", label, k)
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn filtration_string<F: Field>(rep: &Representation<F>, kind: Filtration) -> Option<String> {
    match rep.quiver.algebra {
        AlgebraKind::Signed => {
            let m = support_from_dims(&rep.comp_dims(), kind).ok()?;
            let mut entries: Vec<((usize, char), usize)> = m
                .mult
                .iter()
                .map(|(&(w, s), &k)| ((w, s.as_char()), k))
                .collect();
            entries.sort_by(|a, b| b.0 .0.cmp(&a.0 .0).then(a.0 .1.cmp(&b.0 .1)));
            Some(multiset_string(
                entries
                    .into_iter()
                    .map(|((w, c), k)| (format!("{}{}", w, c), k))
                    .collect(),
            ))
        }
        AlgebraKind::Plain => {
            let m = support_from_dims_unsigned(&rep.comp_dims_plain()).ok()?;
            let mut entries: Vec<(usize, usize)> = m.iter().map(|(&w, &k)| (w, k)).collect();
            entries.sort_by(|a, b| b.0.cmp(&a.0));
            Some(multiset_string(
                entries
                    .into_iter()
                    .map(|(w, k)| (w.to_string(), k))
                    .collect(),
            ))
        }
    }
}

/// A printable summary of a built module.
pub fn describe(
    alg: AlgebraKind,
    n: usize,
    input: &str,
    field: FieldChoice,
    with_matrices: bool,
) -> Result<serde_json::Value, ShowError> {
    let desc = parse_descriptor(alg, n, input)?;
    match field {
        FieldChoice::Rationals => describe_built(&desc, alg, n, input, Rationals, with_matrices),
        FieldChoice::Prime(p) => {
            let f = PrimeField::new(p)?;
            describe_built(&desc, alg, n, input, f, with_matrices)
        }
    }
}

fn describe_built<F: Field>(
    desc: &Descriptor,
    alg: AlgebraKind,
    n: usize,
    input: &str,
    field: F,
    with_matrices: bool,
) -> Result<serde_json::Value, ShowError> {
    let rep = build_descriptor(desc, n, alg, field.clone())?;
    let mut dims = BTreeMap::new();
    for (vi, v) in rep.quiver.vertices.iter().enumerate() {
        dims.insert(v.label(), rep.dims[vi]);
    }
    let socle: BTreeMap<String, usize> = rep
        .quiver
        .vertices
        .iter()
        .zip(rep.socle_dims())
        .filter(|(_, d)| *d > 0)
        .map(|(v, d)| (v.label(), d))
        .collect();
    let top: BTreeMap<String, usize> = rep
        .quiver
        .vertices
        .iter()
        .zip(rep.top_dims())
        .filter(|(_, d)| *d > 0)
        .map(|(v, d)| (v.label(), d))
        .collect();
    let mut value = json!({
        "module": input,
        "algebra": alg.letter(),
        "n": n,
        "field": field.name(),
        "dims": dims,
        "total_dim": rep.total_dim(),
        "delta_support": filtration_string(&rep, Filtration::Standard),
        "nabla_support": filtration_string(&rep, Filtration::Costandard),
        "socle": socle,
        "top": top,
    });
    if let Descriptor::Middle(i) = desc {
        let ctx = MirrorPairContext::new(i)?;
        let (ti, tj) = ctx.tilde_sets()?;
        value["class"] = json!(if ctx.r % 2 == 1 {
            "decomposable"
        } else {
            "indecomposable"
        });
        value["r"] = json!(ctx.r);
        value["tilde_I"] = json!(ti.to_string());
        value["tilde_J"] = json!(tj.to_string());
    }
    if with_matrices {
        value["matrices"] = rep.to_json();
    }
    Ok(value)
}
