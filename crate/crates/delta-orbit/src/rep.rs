//! Finite-dimensional representations of a bound quiver over an exact field,
//! with the linear-algebra primitives the oracle is built from: relation
//! checking, Hom spaces as intertwiner nullspaces, Ext^1 as cocycles modulo
//! coboundaries, subrepresentations and quotients.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::json;

use crate::field::Field;
use crate::formulas::CompDims;
use crate::linalg::{self, Mat};
use crate::quiver::{AlgebraKind, BoundQuiver};

#[derive(Debug, Clone)]
pub struct Representation<F: Field> {
    pub quiver: Arc<BoundQuiver>,
    pub field: F,
    pub dims: Vec<usize>,
    /// One matrix per arrow, of shape target_dim x source_dim.
    pub mats: Vec<Mat<F::Elem>>,
}

/// A linear map between representations of the same quiver: one matrix per
/// vertex, of shape target_dim x source_dim.
pub type HomMap<E> = Vec<Mat<E>>;

impl<F: Field> Representation<F> {
    pub fn zero(quiver: Arc<BoundQuiver>, field: F) -> Self {
        let dims = vec![0; quiver.vertices.len()];
        let mats = quiver
            .arrows
            .iter()
            .map(|_| linalg::zeros(&field, 0, 0))
            .collect();
        Representation {
            quiver,
            field,
            dims,
            mats,
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Matrix of a path given in travel order (first arrow first).
    pub fn path_matrix(&self, path: &[usize]) -> Mat<F::Elem> {
        assert!(!path.is_empty());
        let src = self.quiver.arrows[path[0]].source;
        let mut m = linalg::identity(&self.field, self.dims[src]);
        for &a in path {
            m = linalg::mul(&self.field, &self.mats[a], &m);
        }
        m
    }

    /// Checks matrix shapes and all defining relations.
    pub fn validate(&self) -> Result<(), String> {
        if self.dims.len() != self.quiver.vertices.len() {
            return Err("dimension vector length mismatch".into());
        }
        for (idx, a) in self.quiver.arrows.iter().enumerate() {
            let m = &self.mats[idx];
            if m.rows() != self.dims[a.target] || m.cols() != self.dims[a.source] {
                return Err(format!("arrow {} has shape mismatch", a.name));
            }
        }
        for (ridx, rel) in self.quiver.relations.iter().enumerate() {
            let src = self.quiver.arrows[rel.terms[0].1[0]].source;
            let last = *rel.terms[0].1.last().unwrap();
            let tgt = self.quiver.arrows[last].target;
            let mut acc = linalg::zeros(&self.field, self.dims[tgt], self.dims[src]);
            for (coef, path) in &rel.terms {
                let c = self.field.from_i64(*coef);
                acc = linalg::add(
                    &self.field,
                    &acc,
                    &linalg::scale(&self.field, &c, &self.path_matrix(path)),
                );
            }
            if !linalg::is_zero_mat(&self.field, &acc) {
                return Err(format!("relation {} fails", ridx));
            }
        }
        Ok(())
    }

    pub fn direct_sum(parts: &[&Representation<F>]) -> Representation<F> {
        assert!(!parts.is_empty());
        let quiver = parts[0].quiver.clone();
        let field = parts[0].field.clone();
        for p in parts {
            assert_eq!((p.quiver.algebra, p.quiver.n), (quiver.algebra, quiver.n));
        }
        let dims: Vec<usize> = (0..quiver.vertices.len())
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let mats = quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let rows = dims[a.target];
                let cols = dims[a.source];
                let mut m = linalg::zeros(&field, rows, cols);
                let mut roff = 0;
                let mut coff = 0;
                for p in parts {
                    let block = &p.mats[ai];
                    for r in 0..block.rows() {
                        for c in 0..block.cols() {
                            m.set(roff + r, coff + c, block.get(r, c).clone());
                        }
                    }
                    roff += p.dims[a.target];
                    coff += p.dims[a.source];
                }
                m
            })
            .collect();
        Representation {
            quiver,
            field,
            dims,
            mats,
        }
    }

    /// Composition multiplicities indexed by signed weight (signed algebra
    /// only).
    pub fn comp_dims(&self) -> CompDims {
        assert_eq!(self.quiver.algebra, AlgebraKind::Signed);
        let mut d = CompDims::zero(self.quiver.n);
        for (vi, v) in self.quiver.vertices.iter().enumerate() {
            d.set(v.weight, v.sign.unwrap(), self.dims[vi]);
        }
        d
    }

    /// Composition multiplicities indexed by weight (plain algebra only).
    pub fn comp_dims_plain(&self) -> Vec<usize> {
        assert_eq!(self.quiver.algebra, AlgebraKind::Plain);
        let mut d = vec![0usize; self.quiver.n];
        for (vi, v) in self.quiver.vertices.iter().enumerate() {
            d[v.weight - 1] = self.dims[vi];
        }
        d
    }

    /// Dimension of the socle at each vertex (vectors killed by every
    /// outgoing arrow).
    pub fn socle_dims(&self) -> Vec<usize> {
        (0..self.dims.len())
            .map(|v| {
                let outgoing: Vec<usize> = self
                    .quiver
                    .arrows
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.source == v)
                    .map(|(i, _)| i)
                    .collect();
                if outgoing.is_empty() {
                    return self.dims[v];
                }
                let mut stacked = self.mats[outgoing[0]].clone();
                for &a in &outgoing[1..] {
                    stacked = stacked.vstack(&self.mats[a]);
                }
                self.dims[v] - linalg::rank(&self.field, &stacked)
            })
            .collect()
    }

    /// Dimension of the top (cokernel of the radical) at each vertex.
    pub fn top_dims(&self) -> Vec<usize> {
        (0..self.dims.len())
            .map(|v| {
                let incoming: Vec<usize> = self
                    .quiver
                    .arrows
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.target == v)
                    .map(|(i, _)| i)
                    .collect();
                if incoming.is_empty() {
                    return self.dims[v];
                }
                let mut stacked = self.mats[incoming[0]].clone();
                for &a in &incoming[1..] {
                    stacked = stacked.hstack(&self.mats[a]);
                }
                self.dims[v] - linalg::rank(&self.field, &stacked)
            })
            .collect()
    }

    /// JSON dump of the representation with stringified exact entries.
    pub fn to_json(&self) -> serde_json::Value {
        let mut dims = BTreeMap::new();
        for (vi, v) in self.quiver.vertices.iter().enumerate() {
            dims.insert(v.label(), self.dims[vi]);
        }
        let mut mats = BTreeMap::new();
        for (ai, a) in self.quiver.arrows.iter().enumerate() {
            let m = &self.mats[ai];
            let rows: Vec<Vec<String>> = (0..m.rows())
                .map(|r| {
                    (0..m.cols())
                        .map(|c| self.field.to_string(m.get(r, c)))
                        .collect()
                })
                .collect();
            mats.insert(a.name.clone(), rows);
        }
        json!({
            "algebra": self.quiver.algebra.letter(),
            "n": self.quiver.n,
            "field": self.field.name(),
            "dims": dims,
            "mats": mats,
        })
    }
}

fn hom_system<F: Field>(m: &Representation<F>, n: &Representation<F>) -> (Mat<F::Elem>, usize) {
    let f = &m.field;
    let q = &m.quiver;
    assert_eq!((q.algebra, q.n), (n.quiver.algebra, n.quiver.n));
    let nv = q.vertices.len();
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + m.dims[v] * n.dims[v];
    }
    let unknowns = offsets[nv];
    // index of the (r, c) entry of the block at vertex v, column-major
    let idx = |v: usize, r: usize, c: usize| offsets[v] + c * n.dims[v] + r;
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (ai, a) in q.arrows.iter().enumerate() {
        let (u, w) = (a.source, a.target);
        for i in 0..n.dims[w] {
            for j in 0..m.dims[u] {
                let mut row = vec![f.zero(); unknowns];
                // (f_w * M_a)[i, j] = sum_c f_w[i, c] M_a[c, j]
                for c in 0..m.dims[w] {
                    let coef = m.mats[ai].get(c, j);
                    if !f.is_zero(coef) {
                        let e = idx(w, i, c);
                        row[e] = f.add(&row[e], coef);
                    }
                }
                // -(N_a * f_u)[i, j] = -sum_r N_a[i, r] f_u[r, j]
                for r in 0..n.dims[u] {
                    let coef = n.mats[ai].get(i, r);
                    if !f.is_zero(coef) {
                        let e = idx(u, r, j);
                        row[e] = f.sub(&row[e], coef);
                    }
                }
                if row.iter().any(|v| !f.is_zero(v)) {
                    rows.push(row);
                }
            }
        }
    }
    let nrows = rows.len();
    let mat = Mat::from_fn(nrows, unknowns, |r, c| rows[r][c].clone());
    (mat, unknowns)
}

/// dim Hom(M, N) computed as the nullity of the intertwiner system.
pub fn hom_dim<F: Field>(m: &Representation<F>, n: &Representation<F>) -> usize {
    let (sys, unknowns) = hom_system(m, n);
    unknowns - linalg::rank(&m.field, &sys)
}

/// A basis of Hom(M, N), each element given per vertex.
pub fn hom_basis<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Vec<HomMap<F::Elem>> {
    let f = &m.field;
    let (sys, unknowns) = hom_system(m, n);
    let ns = linalg::nullspace(f, &sys);
    let nv = m.quiver.vertices.len();
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + m.dims[v] * n.dims[v];
    }
    debug_assert_eq!(offsets[nv], unknowns);
    (0..ns.cols())
        .map(|k| {
            (0..nv)
                .map(|v| {
                    Mat::from_fn(n.dims[v], m.dims[v], |r, c| {
                        ns.get(offsets[v] + c * n.dims[v] + r, k).clone()
                    })
                })
                .collect()
        })
        .collect()
}

/// Applies a hom map to a per-vertex collection of column vectors.
pub fn apply_hom<F: Field>(
    f: &F,
    map: &HomMap<F::Elem>,
    vectors: &[Mat<F::Elem>],
) -> Vec<Mat<F::Elem>> {
    map.iter()
        .zip(vectors.iter())
        .map(|(m, v)| linalg::mul(f, m, v))
        .collect()
}

/// dim Ext^1(M, N) via cocycles: an assignment of a matrix to every arrow
/// satisfying the linearized relations, modulo the coboundaries. The count is
/// dim Z - sum_v dim M_v dim N_v + dim Hom(M, N).
pub fn ext1_dim<F: Field>(m: &Representation<F>, n: &Representation<F>) -> usize {
    let f = &m.field;
    let q = &m.quiver;
    assert_eq!((q.algebra, q.n), (n.quiver.algebra, n.quiver.n));
    let na = q.arrows.len();
    let mut offsets = vec![0usize; na + 1];
    for a in 0..na {
        let arr = &q.arrows[a];
        offsets[a + 1] = offsets[a] + n.dims[arr.target] * m.dims[arr.source];
    }
    let unknowns = offsets[na];
    let idx = |a: usize, r: usize, c: usize| {
        offsets[a] + c * n.dims[q.arrows[a].target] + r
    };
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for rel in &q.relations {
        let src = q.arrows[rel.terms[0].1[0]].source;
        let last = *rel.terms[0].1.last().unwrap();
        let tgt = q.arrows[last].target;
        if m.dims[src] == 0 || n.dims[tgt] == 0 {
            continue;
        }
        // coefficient accumulator per condition entry (i, l)
        let mut cond: Vec<Vec<F::Elem>> =
            vec![vec![f.zero(); unknowns]; n.dims[tgt] * m.dims[src]];
        for (coef, path) in &rel.terms {
            let cf = f.from_i64(*coef);
            for (j, &aj) in path.iter().enumerate() {
                // prefix through M, suffix through N; the eta of arrow aj
                // sits in between
                let pre = if j == 0 {
                    linalg::identity(f, m.dims[src])
                } else {
                    m.path_matrix(&path[..j])
                };
                let post = if j + 1 == path.len() {
                    linalg::identity(f, n.dims[tgt])
                } else {
                    n.path_matrix(&path[j + 1..])
                };
                let tj = q.arrows[aj].target;
                let sj = q.arrows[aj].source;
                for i in 0..n.dims[tgt] {
                    for l in 0..m.dims[src] {
                        let row = &mut cond[i * m.dims[src] + l];
                        for r in 0..n.dims[tj] {
                            let pv = post.get(i, r);
                            if f.is_zero(pv) {
                                continue;
                            }
                            for c in 0..m.dims[sj] {
                                let mv = pre.get(c, l);
                                if f.is_zero(mv) {
                                    continue;
                                }
                                let e = idx(aj, r, c);
                                let term = f.mul(&cf, &f.mul(pv, mv));
                                row[e] = f.add(&row[e], &term);
                            }
                        }
                    }
                }
            }
        }
        for row in cond {
            if row.iter().any(|v| !f.is_zero(v)) {
                rows.push(row);
            }
        }
    }
    let sys = Mat::from_fn(rows.len(), unknowns, |r, c| rows[r][c].clone());
    let dim_z = unknowns - linalg::rank(f, &sys);
    let coboundary_source: usize = (0..q.vertices.len())
        .map(|v| m.dims[v] * n.dims[v])
        .sum();
    let hom = hom_dim(m, n);
    (dim_z + hom)
        .checked_sub(coboundary_source)
        .expect("coboundary map lands in cocycles")
}

/// A subrepresentation given by a spanning basis at each vertex, with columns
/// in the coordinates of the parent.
#[derive(Debug, Clone)]
pub struct SubRep<E> {
    pub spans: Vec<Mat<E>>,
}

impl<E: Clone + PartialEq + std::fmt::Debug + Send + Sync> SubRep<E> {
    pub fn dims(&self) -> Vec<usize> {
        self.spans.iter().map(|m| m.cols()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.spans.iter().map(|m| m.cols()).sum()
    }
}

/// The zero subrepresentation of `parent`.
pub fn sub_zero<F: Field>(parent: &Representation<F>) -> SubRep<F::Elem> {
    SubRep {
        spans: parent
            .dims
            .iter()
            .map(|&d| linalg::zeros(&parent.field, d, 0))
            .collect(),
    }
}

/// Closes the spans under all arrows of the parent, replacing each span with
/// a reduced column-space basis.
pub fn close_under_arrows<F: Field>(parent: &Representation<F>, sub: &mut SubRep<F::Elem>) {
    let f = &parent.field;
    for v in 0..sub.spans.len() {
        sub.spans[v] = linalg::col_space_basis(f, &sub.spans[v]);
    }
    loop {
        let mut changed = false;
        for (ai, a) in parent.quiver.arrows.iter().enumerate() {
            if sub.spans[a.source].cols() == 0 {
                continue;
            }
            let img = linalg::mul(f, &parent.mats[ai], &sub.spans[a.source]);
            let before = sub.spans[a.target].cols();
            let joined = sub.spans[a.target].hstack(&img);
            let basis = linalg::col_space_basis(f, &joined);
            if basis.cols() != before {
                sub.spans[a.target] = basis;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

/// Whether the spans are stable under every arrow of the parent.
pub fn is_closed<F: Field>(parent: &Representation<F>, sub: &SubRep<F::Elem>) -> bool {
    let f = &parent.field;
    parent.quiver.arrows.iter().enumerate().all(|(ai, a)| {
        let img = linalg::mul(f, &parent.mats[ai], &sub.spans[a.source]);
        linalg::in_col_space(f, &sub.spans[a.target], &img)
    })
}

/// The subrepresentation as a standalone representation in the basis given by
/// the span columns.
pub fn sub_to_rep<F: Field>(parent: &Representation<F>, sub: &SubRep<F::Elem>) -> Representation<F> {
    let f = &parent.field;
    let dims = sub.dims();
    let mats = parent
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let img = linalg::mul(f, &parent.mats[ai], &sub.spans[a.source]);
            linalg::solve(f, &sub.spans[a.target], &img)
                .expect("subrepresentation must be closed under arrows")
        })
        .collect();
    Representation {
        quiver: parent.quiver.clone(),
        field: f.clone(),
        dims,
        mats,
    }
}

/// The quotient of the parent by a closed subrepresentation, together with
/// the projection maps (parent coordinates -> quotient coordinates) and a
/// section choosing representatives.
pub fn quotient_rep<F: Field>(
    parent: &Representation<F>,
    sub: &SubRep<F::Elem>,
) -> (Representation<F>, Vec<Mat<F::Elem>>, Vec<Mat<F::Elem>>) {
    let f = &parent.field;
    let nv = parent.dims.len();
    let mut projections = Vec::with_capacity(nv);
    let mut sections = Vec::with_capacity(nv);
    let mut dims = Vec::with_capacity(nv);
    for v in 0..nv {
        let d = parent.dims[v];
        let b = &sub.spans[v];
        let k = b.cols();
        // complete the span to a basis of the fibre with standard vectors
        let mut full = b.clone();
        let mut chosen = Vec::new();
        for r in 0..d {
            if full.cols() == d {
                break;
            }
            let e = Mat::from_fn(d, 1, |i, _| if i == r { f.one() } else { f.zero() });
            let cand = full.hstack(&e);
            if linalg::rank(f, &cand) == full.cols() + 1 {
                full = cand;
                chosen.push(r);
            }
        }
        assert_eq!(full.cols(), d, "span columns must be independent");
        let inv = linalg::solve(f, &full, &linalg::identity(f, d))
            .expect("basis completion is invertible");
        let proj = Mat::from_fn(d - k, d, |r, c| inv.get(k + r, c).clone());
        let sect = Mat::from_fn(d, d - k, |r, c| full.get(r, k + c).clone());
        dims.push(d - k);
        projections.push(proj);
        sections.push(sect);
    }
    let mats = parent
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let lifted = linalg::mul(f, &parent.mats[ai], &sections[a.source]);
            linalg::mul(f, &projections[a.target], &lifted)
        })
        .collect();
    let rep = Representation {
        quiver: parent.quiver.clone(),
        field: f.clone(),
        dims,
        mats,
    };
    (rep, projections, sections)
}

/// Expresses parent-coordinate columns in the span basis of a closed
/// subrepresentation containing them.
pub fn into_sub_coords<F: Field>(
    parent: &Representation<F>,
    sub: &SubRep<F::Elem>,
    vectors: &[Mat<F::Elem>],
) -> Vec<Mat<F::Elem>> {
    let f = &parent.field;
    sub.spans
        .iter()
        .zip(vectors.iter())
        .map(|(b, v)| {
            if b.cols() == 0 {
                assert!(linalg::is_zero_mat(f, v), "vector outside subrepresentation");
                linalg::zeros(f, 0, v.cols())
            } else {
                linalg::solve(f, b, v).expect("vector outside subrepresentation")
            }
        })
        .collect()
}
