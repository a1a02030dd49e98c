//! Constructs distinguished modules as explicit representations: the
//! indecomposable projectives, the standard modules realized as submodules of
//! their injective container, costandard quotients, and the canonical middle
//! term of the extension attached to a mirrored pair.
//!
//! The projective at vertex v is modelled on the spaces Hom(M(u), M(v)) of
//! maps between the uniserial modules of the underlying Nakayama algebra; the
//! map sending the generator c_1 to c_t is the basis vector of depth t, the
//! up arrow shifts t by one and the down arrow keeps it. For the signed
//! algebra a depth-parity constraint selects which basis vectors exist.

use std::sync::Arc;

use thiserror::Error;

use crate::field::Field;
use crate::formulas::{
    complement_signed, support_from_dims, support_from_dims_unsigned,
    Filtration, MirrorPairContext,
};
use crate::linalg::{self, Mat};
use crate::quiver::{AlgebraKind, BoundQuiver};
use crate::rep::{
    self, close_under_arrows, hom_basis, hom_dim, quotient_rep, sub_to_rep, sub_zero,
    HomMap, Representation, SubRep,
};
use crate::signed::{container_vertex_sign, Sign, SignedSubset, UnsignedSubset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("no generator sequence realizes the support {0}")]
    SupportUnreachable(String),
    #[error("no small combination of hom basis vectors has the generic kernel")]
    GeneratorNotFound,
    #[error("constructed module failed validation: {0}")]
    Invalid(String),
}

/// An indecomposable projective with its basis bookkeeping: `depths[v][k]` is
/// the depth t of the k-th basis vector at vertex v (larger t = closer to the
/// socle), and basis vectors at each vertex are ordered by increasing depth.
#[derive(Debug, Clone)]
pub struct ProjectiveData<F: Field> {
    pub rep: Representation<F>,
    pub vertex: usize,
    pub depths: Vec<Vec<usize>>,
}

fn depth_range(n: usize, u_weight: usize, v_weight: usize) -> std::ops::RangeInclusive<usize> {
    let low = if u_weight > v_weight {
        u_weight - v_weight + 1
    } else {
        1
    };
    low..=(n - v_weight + 1)
}

/// Parity class (0 or 1) of the generator of the uniserial signed module at
/// (weight, sign); depth t in that module has parity class (gen + t - 1) % 2.
fn parity_class(sign: Sign) -> usize {
    match sign {
        Sign::Plus => 0,
        Sign::Minus => 1,
    }
}

/// Builds the indecomposable projective at the given vertex.
pub fn build_projective<F: Field>(
    quiver: Arc<BoundQuiver>,
    vertex: usize,
    field: F,
) -> ProjectiveData<F> {
    let n = quiver.n;
    let v = quiver.vertices[vertex];
    let mut depths: Vec<Vec<usize>> = Vec::with_capacity(quiver.vertices.len());
    for u in &quiver.vertices {
        let mut ds = Vec::new();
        for t in depth_range(n, u.weight, v.weight) {
            let ok = match (u.sign, v.sign) {
                (None, None) => true,
                (Some(us), Some(vs)) => {
                    // depth t in the target lives in parity class
                    // (class(vs) + t - 1) mod 2 and must match the generator
                    // class of the source
                    (parity_class(vs) + t - 1) % 2 == parity_class(us)
                }
                _ => unreachable!("vertex signs match the algebra kind"),
            };
            if ok {
                ds.push(t);
            }
        }
        depths.push(ds);
    }
    let dims: Vec<usize> = depths.iter().map(|d| d.len()).collect();
    let mats = quiver
        .arrows
        .iter()
        .map(|a| {
            let src = &depths[a.source];
            let tgt = &depths[a.target];
            Mat::from_fn(tgt.len(), src.len(), |r, c| {
                let hit = if a.step == 1 {
                    tgt[r] == src[c] + 1
                } else {
                    tgt[r] == src[c]
                };
                if hit {
                    field.one()
                } else {
                    field.zero()
                }
            })
        })
        .collect();
    let rep = Representation {
        quiver,
        field,
        dims,
        mats,
    };
    debug_assert_eq!(rep.validate(), Ok(()));
    ProjectiveData {
        rep,
        vertex,
        depths,
    }
}

/// A standard-filtered submodule of an indecomposable projective, kept both
/// as an abstract representation and as spans inside its container.
#[derive(Debug, Clone)]
pub struct DeltaModule<F: Field> {
    pub container: ProjectiveData<F>,
    pub embedding: SubRep<F::Elem>,
    pub rep: Representation<F>,
}

fn standard_support_of<F: Field>(rep: &Representation<F>) -> Option<Vec<(usize, Option<Sign>)>> {
    match rep.quiver.algebra {
        AlgebraKind::Signed => {
            let m = support_from_dims(&rep.comp_dims(), Filtration::Standard).ok()?;
            let mut out = Vec::new();
            for (&(w, s), &k) in &m.mult {
                if k != 1 {
                    return None;
                }
                out.push((w, Some(s)));
            }
            Some(out)
        }
        AlgebraKind::Plain => {
            let m = support_from_dims_unsigned(&rep.comp_dims_plain()).ok()?;
            let mut out = Vec::new();
            for (&w, &k) in &m {
                if k != 1 {
                    return None;
                }
                out.push((w, None));
            }
            Some(out)
        }
    }
}

fn grow_delta<F: Field>(
    container: ProjectiveData<F>,
    elements: &[(usize, Option<Sign>)],
    label: &str,
) -> Result<DeltaModule<F>, BuildError> {
    let parent = &container.rep;
    let f = parent.field.clone();
    let mut sub = sub_zero(parent);
    let mut wanted: Vec<(usize, Option<Sign>)> = Vec::new();
    for &(w, s) in elements {
        wanted.push((w, s));
        wanted.sort();
        let v = parent.quiver.vertex_index(w, s);
        // candidate generators at the vertex, deepest first
        let mut found = false;
        for k in (0..parent.dims[v]).rev() {
            let e = Mat::from_fn(parent.dims[v], 1, |i, _| {
                if i == k {
                    f.one()
                } else {
                    f.zero()
                }
            });
            if linalg::in_col_space(&f, &sub.spans[v], &e) {
                continue;
            }
            let mut trial = sub.clone();
            trial.spans[v] = trial.spans[v].hstack(&e);
            close_under_arrows(parent, &mut trial);
            let trial_rep = sub_to_rep(parent, &trial);
            if let Some(mut supp) = standard_support_of(&trial_rep) {
                supp.sort();
                if supp == wanted {
                    sub = trial;
                    found = true;
                    break;
                }
            }
        }
        if !found {
            return Err(BuildError::SupportUnreachable(label.to_string()));
        }
    }
    let rep = sub_to_rep(parent, &sub);
    Ok(DeltaModule {
        container,
        embedding: sub,
        rep,
    })
}

/// Builds the standard-filtered module with alternating signed support `I` as
/// the unique submodule of its injective container.
pub fn build_delta_signed<F: Field>(
    i: &SignedSubset,
    field: F,
) -> Result<DeltaModule<F>, BuildError> {
    let n = i.n();
    let quiver = BoundQuiver::signed(n);
    let top = i.top().map(|(_, s)| s).unwrap_or(Sign::Plus);
    let gamma = container_vertex_sign(n, top);
    let vertex = quiver.vertex_signed(1, gamma);
    let container = build_projective(quiver, vertex, field);
    let elements: Vec<(usize, Option<Sign>)> =
        i.elems().iter().map(|&(w, s)| (w, Some(s))).collect();
    let built = grow_delta(container, &elements, &i.to_string())?;
    debug_assert_eq!(built.rep.validate(), Ok(()));
    Ok(built)
}

/// Builds the standard-filtered module with support `I0` over the plain
/// algebra as a submodule of the weight-1 projective.
pub fn build_delta_plain<F: Field>(
    i0: &UnsignedSubset,
    field: F,
) -> Result<DeltaModule<F>, BuildError> {
    let quiver = BoundQuiver::plain(i0.n());
    let vertex = quiver.vertex_plain(1);
    let container = build_projective(quiver, vertex, field);
    let elements: Vec<(usize, Option<Sign>)> =
        i0.weights().iter().map(|&w| (w, None)).collect();
    grow_delta(container, &elements, &i0.to_string())
}

/// Builds the costandard module with step-alternating support `I` as a
/// quotient of the appropriate injective container. Empty support gives the
/// zero module over a plus container.
pub fn build_nabla_signed<F: Field>(
    i: &SignedSubset,
    field: F,
) -> Result<Representation<F>, BuildError> {
    let n = i.n();
    let i0c = i.unsigned().complement();
    for tau in [Sign::Plus, Sign::Minus] {
        let c = i0c.anchor_signs(tau);
        let comp = complement_signed(&c).map_err(|e| BuildError::Invalid(e.to_string()))?;
        if !c.is_empty() && comp == *i {
            let delta = build_delta_signed(&c, field)?;
            let (q, _, _) = quotient_rep(&delta.container.rep, &delta.embedding);
            return Ok(q);
        }
        if c.is_empty() {
            // complement of the empty set defaults to a plus container; for
            // the minus container compute directly
            let gamma = container_vertex_sign(n, tau);
            let quiver = BoundQuiver::signed(n);
            let vertex = quiver.vertex_signed(1, gamma);
            let proj = build_projective(quiver, vertex, field.clone());
            let supp = support_from_dims(&proj.rep.comp_dims(), Filtration::Costandard)
                .map_err(|e| BuildError::Invalid(e.to_string()))?
                .to_signed_subset(n)
                .map_err(|e| BuildError::Invalid(e.to_string()))?;
            if supp == *i {
                return Ok(proj.rep);
            }
        }
    }
    if i.is_empty() {
        return Ok(Representation::zero(BoundQuiver::signed(n), field));
    }
    Err(BuildError::SupportUnreachable(i.to_string()))
}

/// The canonical middle term of the extension attached to a mirrored pair,
/// with the data needed to test how it decomposes.
#[derive(Debug, Clone)]
pub struct MiddleTerm<F: Field> {
    pub e: Representation<F>,
    pub delta_i: DeltaModule<F>,
    pub delta_j: DeltaModule<F>,
    /// The costandard cokernel of delta_i inside its container.
    pub nabla: Representation<F>,
    /// The chosen map Delta(J) -> cokernel with generic kernel, per vertex.
    pub theta: HomMap<F::Elem>,
    /// dim Hom(Delta(J), cokernel); equals ceil(r/2) for a valid pair.
    pub hom_to_cokernel: usize,
    /// Spans of the copy of Delta(I) inside E, in E coordinates.
    pub bottom_i: SubRep<F::Elem>,
    /// Spans of ker(theta) (a copy of the tilde-J standard module) inside E.
    pub bottom_ker: SubRep<F::Elem>,
    pub theta_injective: bool,
}

/// Builds the pullback E = {(q, b) : pi(q) = theta(b)} inside the direct sum
/// of the injective container of Delta(I) and Delta(J). With `flip` both
/// supports are negated, giving the mirror-image variant.
pub fn build_middle_term<F: Field>(
    ctx: &MirrorPairContext,
    flip: bool,
    field: F,
) -> Result<MiddleTerm<F>, BuildError> {
    let f = field.clone();
    let (iset, jset) = if flip {
        (ctx.i.negate(), ctx.j.negate())
    } else {
        (ctx.i.clone(), ctx.j.clone())
    };
    let delta_i = build_delta_signed(&iset, field.clone())?;
    let delta_j = build_delta_signed(&jset, field.clone())?;
    let container = &delta_i.container.rep;
    let (nabla, proj, _) = quotient_rep(container, &delta_i.embedding);
    let basis = hom_basis(&delta_j.rep, &nabla);
    let h = basis.len();
    if h == 0 {
        return Err(BuildError::GeneratorNotFound);
    }
    let nv = container.quiver.vertices.len();
    // generic kernel dimension: intersection of all basis map kernels
    let common_kernel: usize = (0..nv)
        .map(|v| {
            if delta_j.rep.dims[v] == 0 {
                return 0;
            }
            let mut stacked = basis[0][v].clone();
            for b in &basis[1..] {
                stacked = stacked.vstack(&b[v]);
            }
            linalg::nullspace(&f, &stacked).cols()
        })
        .sum();
    // first small-coefficient combination whose kernel is no larger than the
    // intersection; coefficients run over 0..=4 lexicographically
    let mut chosen: Option<HomMap<F::Elem>> = None;
    let mut coeffs = vec![0u8; h];
    'outer: loop {
        // increment (skip the all-zero combination)
        let mut k = h;
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            if coeffs[k] < 4 {
                coeffs[k] += 1;
                for c in coeffs.iter_mut().skip(k + 1) {
                    *c = 0;
                }
                break;
            }
        }
        let theta: HomMap<F::Elem> = (0..nv)
            .map(|v| {
                let mut acc = linalg::zeros(&f, nabla.dims[v], delta_j.rep.dims[v]);
                for (bi, b) in basis.iter().enumerate() {
                    let c = f.from_i64(coeffs[bi] as i64);
                    acc = linalg::add(&f, &acc, &linalg::scale(&f, &c, &b[v]));
                }
                acc
            })
            .collect();
        let ker: usize = (0..nv)
            .map(|v| linalg::nullspace(&f, &theta[v]).cols())
            .sum();
        if ker == common_kernel {
            chosen = Some(theta);
            break;
        }
    }
    let theta = chosen.ok_or(BuildError::GeneratorNotFound)?;
    // E at each vertex is the kernel of [pi, -theta] on container + Delta(J)
    let mut e_basis: Vec<Mat<F::Elem>> = Vec::with_capacity(nv);
    for v in 0..nv {
        let glue = proj[v].hstack(&linalg::neg(&f, &theta[v]));
        e_basis.push(linalg::nullspace(&f, &glue));
    }
    let dims: Vec<usize> = e_basis.iter().map(|b| b.cols()).collect();
    let mats: Vec<Mat<F::Elem>> = container
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let (u, w) = (a.source, a.target);
            let du = container.dims[u];
            // block diagonal action on container + Delta(J)
            let big = Mat::from_fn(
                container.dims[w] + delta_j.rep.dims[w],
                du + delta_j.rep.dims[u],
                |r, c| {
                    if r < container.dims[w] && c < du {
                        container.mats[ai].get(r, c).clone()
                    } else if r >= container.dims[w] && c >= du {
                        delta_j.rep.mats[ai].get(r - container.dims[w], c - du).clone()
                    } else {
                        f.zero()
                    }
                },
            );
            let img = linalg::mul(&f, &big, &e_basis[u]);
            linalg::solve(&f, &e_basis[w], &img)
                .expect("pullback is closed under the diagonal action")
        })
        .collect();
    let e = Representation {
        quiver: container.quiver.clone(),
        field: field.clone(),
        dims,
        mats,
    };
    e.validate().map_err(BuildError::Invalid)?;
    // the copy of Delta(I) inside E: pairs (x, 0) with x in the submodule
    let bottom_i = SubRep {
        spans: (0..nv)
            .map(|v| {
                let emb = &delta_i.embedding.spans[v];
                let lifted = Mat::from_fn(
                    container.dims[v] + delta_j.rep.dims[v],
                    emb.cols(),
                    |r, c| {
                        if r < container.dims[v] {
                            emb.get(r, c).clone()
                        } else {
                            f.zero()
                        }
                    },
                );
                if e_basis[v].cols() == 0 {
                    assert_eq!(lifted.cols(), 0);
                    linalg::zeros(&f, 0, 0)
                } else {
                    linalg::solve(&f, &e_basis[v], &lifted)
                        .expect("Delta(I) embeds into the pullback")
                }
            })
            .collect(),
    };
    // ker(theta) inside E: pairs (0, b) with theta(b) = 0
    let mut theta_injective = true;
    let bottom_ker = SubRep {
        spans: (0..nv)
            .map(|v| {
                let ker = linalg::nullspace(&f, &theta[v]);
                if ker.cols() > 0 {
                    theta_injective = false;
                }
                let lifted = Mat::from_fn(
                    container.dims[v] + delta_j.rep.dims[v],
                    ker.cols(),
                    |r, c| {
                        if r >= container.dims[v] {
                            ker.get(r - container.dims[v], c).clone()
                        } else {
                            f.zero()
                        }
                    },
                );
                if e_basis[v].cols() == 0 {
                    assert_eq!(lifted.cols(), 0);
                    linalg::zeros(&f, 0, 0)
                } else {
                    linalg::solve(&f, &e_basis[v], &lifted)
                        .expect("ker(theta) embeds into the pullback")
                }
            })
            .collect(),
    };
    Ok(MiddleTerm {
        e,
        delta_i,
        delta_j,
        nabla,
        theta,
        hom_to_cokernel: h,
        bottom_i,
        bottom_ker,
        theta_injective,
    })
}

/// Decides whether the extension of `top` by the closed subrepresentation
/// `bottom` of `e` splits, by counting hom dimensions: the sequence splits
/// exactly when dim Hom(T, E) = dim Hom(T, bottom) + dim Hom(T, E/bottom).
pub fn splitting_test<F: Field>(
    e: &Representation<F>,
    bottom: &SubRep<F::Elem>,
    top: &Representation<F>,
) -> Result<bool, BuildError> {
    if !rep::is_closed(e, bottom) {
        return Err(BuildError::Invalid(
            "bottom is not closed under arrows".into(),
        ));
    }
    let bottom_rep = sub_to_rep(e, bottom);
    let (quot, _, _) = quotient_rep(e, bottom);
    if quot.dims != top.dims {
        return Err(BuildError::Invalid(
            "quotient dimensions do not match the expected top".into(),
        ));
    }
    let whole = hom_dim(top, e);
    let into_bottom = hom_dim(top, &bottom_rep);
    let into_quot = hom_dim(top, &quot);
    Ok(whole == into_bottom + into_quot)
}

/// Whether the chosen map generates Hom(Delta(J), cokernel) as a module over
/// the endomorphisms of the cokernel: the composites psi . theta must span
/// the full hom space.
pub fn cyclicity_check<F: Field>(mid: &MiddleTerm<F>) -> bool {
    let f = &mid.e.field;
    let endos = hom_basis(&mid.nabla, &mid.nabla);
    let h = mid.hom_to_cokernel;
    if h == 0 {
        return true;
    }
    let entries: usize = mid
        .theta
        .iter()
        .map(|m| m.rows() * m.cols())
        .sum();
    let mut flat = linalg::zeros(f, entries, endos.len());
    for (k, psi) in endos.iter().enumerate() {
        let mut row = 0;
        for (v, th) in mid.theta.iter().enumerate() {
            let comp = linalg::mul(f, &psi[v], th);
            for r in 0..comp.rows() {
                for c in 0..comp.cols() {
                    flat.set(row, k, comp.get(r, c).clone());
                    row += 1;
                }
            }
        }
        debug_assert_eq!(row, entries);
    }
    linalg::rank(f, &flat) == h
}

/// Independent route to Ext^1 through a projective presentation: take the
/// projective cover P -> M, its kernel K, and count
/// dim Hom(K, N) - dim Hom(P, N) + dim Hom(M, N).
pub fn ext1_dim_via_presentation<F: Field>(
    m: &Representation<F>,
    n: &Representation<F>,
) -> usize {
    let f = &m.field;
    let q = &m.quiver;
    let top = m.top_dims();
    // assemble the cover and the per-vertex matrices of the surjection
    let mut covers: Vec<Representation<F>> = Vec::new();
    let mut maps: Vec<Vec<Mat<F::Elem>>> = Vec::new();
    for v in 0..q.vertices.len() {
        if top[v] == 0 {
            continue;
        }
        // lift a basis of the top at v: standard vectors completing the radical
        let incoming: Vec<usize> = q
            .arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| a.target == v)
            .map(|(i, _)| i)
            .collect();
        let mut rad = linalg::zeros(f, m.dims[v], 0);
        for &a in &incoming {
            rad = rad.hstack(&m.mats[a]);
        }
        let rad_basis = linalg::col_space_basis(f, &rad);
        let mut full = rad_basis.clone();
        let mut lifts: Vec<Mat<F::Elem>> = Vec::new();
        for r in 0..m.dims[v] {
            if full.cols() == m.dims[v] {
                break;
            }
            let e = Mat::from_fn(m.dims[v], 1, |i, _| if i == r { f.one() } else { f.zero() });
            let cand = full.hstack(&e);
            if linalg::rank(f, &cand) == full.cols() + 1 {
                full = cand;
                lifts.push(e);
            }
        }
        assert_eq!(lifts.len(), top[v]);
        for x in lifts {
            let proj = build_projective(q.clone(), v, f.clone());
            // the map P(v) -> M sending the generator to x: solve for it in
            // the hom space
            let basis = hom_basis(&proj.rep, m);
            let gen_col = proj.depths[v]
                .iter()
                .position(|&t| t == 1)
                .expect("projective generator has depth one");
            let eval = Mat::from_fn(m.dims[v], basis.len(), |r, k| {
                basis[k][v].get(r, gen_col).clone()
            });
            let coeff = linalg::solve(f, &eval, &x)
                .expect("evaluation at the generator is bijective");
            let map: Vec<Mat<F::Elem>> = (0..q.vertices.len())
                .map(|u| {
                    let mut acc = linalg::zeros(f, m.dims[u], proj.rep.dims[u]);
                    for (k, b) in basis.iter().enumerate() {
                        acc = linalg::add(
                            f,
                            &acc,
                            &linalg::scale(f, coeff.get(k, 0), &b[u]),
                        );
                    }
                    acc
                })
                .collect();
            covers.push(proj.rep);
            maps.push(map);
        }
    }
    if covers.is_empty() {
        // M is zero
        return 0;
    }
    let cover_refs: Vec<&Representation<F>> = covers.iter().collect();
    let p0 = Representation::direct_sum(&cover_refs);
    // stack the per-summand maps horizontally into the full surjection
    let phi: Vec<Mat<F::Elem>> = (0..q.vertices.len())
        .map(|u| {
            let mut acc = linalg::zeros(f, m.dims[u], 0);
            for map in &maps {
                acc = acc.hstack(&map[u]);
            }
            acc
        })
        .collect();
    for u in 0..q.vertices.len() {
        assert_eq!(
            linalg::rank(f, &phi[u]),
            m.dims[u],
            "cover must surject at every vertex"
        );
    }
    let kernel = SubRep {
        spans: (0..q.vertices.len())
            .map(|u| linalg::nullspace(f, &phi[u]))
            .collect(),
    };
    assert!(rep::is_closed(&p0, &kernel));
    let k_rep = sub_to_rep(&p0, &kernel);
    let a = hom_dim(&k_rep, n);
    let b = hom_dim(&p0, n);
    let c = hom_dim(m, n);
    (a + c).checked_sub(b).expect("ext is nonnegative")
}
