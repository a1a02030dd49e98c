//! Closed-form Hom/Ext dimensions between standard modules, composition
//! dimension bookkeeping, costandard complements, and the combinatorics of
//! mirrored pairs of standard modules.
//!
//! Everything here is pure combinatorics on (signed) subsets; the exact
//! linear-algebra counterparts live in the oracle modules and must agree with
//! these formulas on every input.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::signed::{
    container_vertex_sign, projective_support, Sign, SignedSubset, UnsignedSubset,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("set {0} is not alternating")]
    NotAlternating(String),
    #[error("dimension vector is not filtered: multiplicity of {0}{1} would be negative")]
    NotFiltered(usize, Sign),
    #[error("support has multiplicity {1} > 1 at {0}, not a set")]
    NotMultiplicityFree(String, usize),
    #[error("set {0} must have top sign + to anchor a mirrored pair")]
    WrongAnchorSign(String),
    #[error("gap condition fails: {0} lies in I \\ phi(I) but 2*{0} < n+1")]
    GapConditionViolated(usize),
    #[error("mirrored pair has no shared gaps (r = 0)")]
    NoSharedGaps,
}

/// Composition multiplicities of a module over the signed algebra, indexed by
/// (weight, sign) with weights 1..=n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompDims {
    n: usize,
    plus: Vec<usize>,
    minus: Vec<usize>,
}

impl CompDims {
    pub fn zero(n: usize) -> Self {
        CompDims {
            n,
            plus: vec![0; n],
            minus: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, weight: usize, sign: Sign) -> usize {
        match sign {
            Sign::Plus => self.plus[weight - 1],
            Sign::Minus => self.minus[weight - 1],
        }
    }

    pub fn set(&mut self, weight: usize, sign: Sign, value: usize) {
        match sign {
            Sign::Plus => self.plus[weight - 1] = value,
            Sign::Minus => self.minus[weight - 1] = value,
        }
    }

    pub fn total(&self) -> usize {
        self.plus.iter().sum::<usize>() + self.minus.iter().sum::<usize>()
    }

    /// Pointwise difference; panics if any entry would go negative.
    pub fn sub(&self, other: &CompDims) -> CompDims {
        assert_eq!(self.n, other.n);
        let mut out = CompDims::zero(self.n);
        for w in 1..=self.n {
            for s in [Sign::Plus, Sign::Minus] {
                out.set(w, s, self.get(w, s) - other.get(w, s));
            }
        }
        out
    }

    pub fn add(&self, other: &CompDims) -> CompDims {
        assert_eq!(self.n, other.n);
        let mut out = CompDims::zero(self.n);
        for w in 1..=self.n {
            for s in [Sign::Plus, Sign::Minus] {
                out.set(w, s, self.get(w, s) + other.get(w, s));
            }
        }
        out
    }
}

/// Which filtration a dimension vector is resolved against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filtration {
    Standard,
    Costandard,
}

/// A multiset of signed weights, e.g. the standard-filtration support of a
/// module that may repeat factors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedMultiset {
    pub mult: BTreeMap<(usize, Sign), usize>,
}

impl SignedMultiset {
    pub fn to_signed_subset(&self, n: usize) -> Result<SignedSubset, FormulaError> {
        let mut elems = Vec::new();
        for (&(w, s), &m) in &self.mult {
            if m > 1 {
                return Err(FormulaError::NotMultiplicityFree(format!("{}{}", w, s), m));
            }
            if m == 1 {
                elems.push((w, s));
            }
        }
        Ok(SignedSubset::new(n, elems).expect("weights come from a map keyed by weight"))
    }

    pub fn total_weight(&self) -> usize {
        self.mult.iter().map(|(&(w, _), &m)| w * m).sum()
    }
}

/// Composition dimensions of the standard-filtered module with support `I`:
/// the multiplicity of the simple at (j, s) is the number of elements of `I`
/// of sign s and weight >= j.
pub fn delta_dims(i: &SignedSubset) -> CompDims {
    let mut d = CompDims::zero(i.n());
    for &(w, s) in i.elems() {
        for j in 1..=w {
            d.set(j, s, d.get(j, s) + 1);
        }
    }
    d
}

/// Unsigned analogue of [`delta_dims`] for the sign-free algebra.
pub fn delta_dims_unsigned(i0: &UnsignedSubset) -> Vec<usize> {
    let mut d = vec![0usize; i0.n()];
    for &w in i0.weights() {
        for j in 1..=w {
            d[j - 1] += 1;
        }
    }
    d
}

/// Inverts a composition dimension vector into filtration multiplicities.
///
/// Standard mode: m(j, s) = dim(j, s) - dim(j+1, s).
/// Costandard mode: m(j, s) = dim(j, s) - dim(j+1, -s).
/// Fails with `NotFiltered` if any multiplicity would be negative.
pub fn support_from_dims(
    d: &CompDims,
    kind: Filtration,
) -> Result<SignedMultiset, FormulaError> {
    let n = d.n();
    let mut out = SignedMultiset::default();
    for j in 1..=n {
        for s in [Sign::Plus, Sign::Minus] {
            let upper = if j == n {
                0
            } else {
                match kind {
                    Filtration::Standard => d.get(j + 1, s),
                    Filtration::Costandard => d.get(j + 1, s.bar()),
                }
            };
            let here = d.get(j, s);
            if here < upper {
                return Err(FormulaError::NotFiltered(j, s));
            }
            if here > upper {
                out.mult.insert((j, s), here - upper);
            }
        }
    }
    Ok(out)
}

/// Unsigned analogue of [`support_from_dims`]; for the sign-free algebra the
/// standard and costandard inversions coincide.
pub fn support_from_dims_unsigned(d: &[usize]) -> Result<BTreeMap<usize, usize>, FormulaError> {
    let n = d.len();
    let mut out = BTreeMap::new();
    for j in 1..=n {
        let upper = if j == n { 0 } else { d[j] };
        if d[j - 1] < upper {
            return Err(FormulaError::NotFiltered(j, Sign::Plus));
        }
        if d[j - 1] > upper {
            out.insert(j, d[j - 1] - upper);
        }
    }
    Ok(out)
}

/// Standard-filtration support of the injective container of the standard
/// module with support `I` (empty `I` defaults to a plus container): the full
/// alternating set anchored at I's top sign.
pub fn container_support(n: usize, i: &SignedSubset) -> SignedSubset {
    let s = i.top().map(|(_, s)| s).unwrap_or(Sign::Plus);
    let gamma = container_vertex_sign(n, s);
    projective_support(gamma, n)
}

/// Costandard support of the cokernel of the embedding of the standard module
/// with support `I` into its injective container.
pub fn complement_signed(i: &SignedSubset) -> Result<SignedSubset, FormulaError> {
    if !i.is_alternating() {
        return Err(FormulaError::NotAlternating(i.to_string()));
    }
    let n = i.n();
    let container = container_support(n, i);
    let diff = delta_dims(&container).sub(&delta_dims(i));
    support_from_dims(&diff, Filtration::Costandard)?.to_signed_subset(n)
}

/// dim Hom between standard-filtered modules over the sign-free algebra:
/// the number of nonempty initial segments of `i0` dominated by `j0`.
pub fn hom_dim_unsigned(i0: &UnsignedSubset, j0: &UnsignedSubset) -> usize {
    i0.initial_segments()
        .iter()
        .filter(|k| k.leq(j0))
        .count()
}

/// dim Ext^1 between standard-filtered modules over the sign-free algebra.
pub fn ext1_dim_unsigned(i0: &UnsignedSubset, j0: &UnsignedSubset) -> usize {
    let hom = hom_dim_unsigned(i0, j0);
    let meet = i0.intersect(&j0.complement()).len();
    (hom + meet)
        .checked_sub(i0.len())
        .expect("ext dimension must be nonnegative")
}

/// dim Hom between standard modules over the signed algebra: initial segments
/// of `i` that are dominated by `j` and whose largest weight carries the sign
/// of `j`'s largest weight.
pub fn hom_dim_signed(i: &SignedSubset, j: &SignedSubset) -> usize {
    let Some((_, sigma)) = j.top() else {
        return 0;
    };
    i.initial_segments()
        .iter()
        .filter(|k| {
            k.top().map(|(_, s)| s) == Some(sigma) && k.unsigned().leq(&j.unsigned())
        })
        .count()
}

/// dim Ext^1 between standard modules over the signed algebra.
pub fn ext1_dim_signed(i: &SignedSubset, j: &SignedSubset) -> Result<usize, FormulaError> {
    if !i.is_alternating() {
        return Err(FormulaError::NotAlternating(i.to_string()));
    }
    if !j.is_alternating() {
        return Err(FormulaError::NotAlternating(j.to_string()));
    }
    if i.is_empty() || j.is_empty() {
        return Ok(0);
    }
    let (_, sigma) = j.top().expect("nonempty");
    let hom = hom_dim_signed(i, j);
    // Hom(Delta(I), container of Delta(J)): every costandard factor of the
    // container carries sign sigma, so the count is the number of elements of
    // I with that sign.
    let hom_to_container = i.count_sign(sigma);
    let jc = complement_signed(j)?;
    let meet = i.intersect(&jc).len();
    Ok((hom + meet)
        .checked_sub(hom_to_container)
        .expect("ext dimension must be nonnegative"))
}

/// Which member of a mirrored pair sits on the right of Ext.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSide {
    /// Ext^1(Delta(J), Delta(I)).
    Mirror,
    /// Ext^1(Delta(-J), Delta(I)).
    MirrorNegated,
}

/// An alternating set `I` anchored at + together with its mirrored partner
/// `J` and the combinatorics of their shared gaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorPairContext {
    pub n: usize,
    pub i: SignedSubset,
    pub j: SignedSubset,
    /// Weights in I's unsigned complement that lie in J, decreasing. These are
    /// the gaps shared by the pair.
    pub shared_gaps: Vec<usize>,
    /// r = number of shared gaps.
    pub r: usize,
    /// e = 1 if r is odd, 2 if r is even (undefined for r = 0).
    pub e: Option<usize>,
    /// The pivot gap a_{k_e}, i.e. the e-th largest shared gap.
    pub pivot: Option<usize>,
}

impl MirrorPairContext {
    /// Builds the context from `I`, validating the anchor sign and the gap
    /// condition (every weight of I missing from phi(I) must be at least
    /// (n+1)/2).
    pub fn new(i: &SignedSubset) -> Result<Self, FormulaError> {
        if !i.is_alternating() {
            return Err(FormulaError::NotAlternating(i.to_string()));
        }
        match i.top() {
            Some((_, Sign::Plus)) => {}
            _ => return Err(FormulaError::WrongAnchorSign(i.to_string())),
        }
        let n = i.n();
        let j = i.mirror_signed();
        let i0 = i.unsigned();
        let j0 = j.unsigned();
        for &w in i0.weights() {
            if !j0.contains(w) && 2 * w < n + 1 {
                return Err(FormulaError::GapConditionViolated(w));
            }
        }
        let shared_gaps: Vec<usize> = i0
            .complement()
            .weights()
            .iter()
            .copied()
            .filter(|&w| j0.contains(w))
            .collect();
        let r = shared_gaps.len();
        let e = match r {
            0 => None,
            _ if r % 2 == 1 => Some(1),
            _ => Some(2),
        };
        let pivot = e.map(|e| shared_gaps[e - 1]);
        Ok(MirrorPairContext {
            n,
            i: i.clone(),
            j,
            shared_gaps,
            r,
            e,
            pivot,
        })
    }

    /// Closed form for Ext^1 against the mirrored partner:
    /// ceil(r/2) for Ext^1(Delta(J), Delta(I)), floor(r/2) for
    /// Ext^1(Delta(-J), Delta(I)).
    pub fn ext1_pair(&self, side: PairSide) -> usize {
        match side {
            PairSide::Mirror => (self.r + 1) / 2,
            PairSide::MirrorNegated => self.r / 2,
        }
    }

    /// The supports of the two standard-filtered pieces cut out of the middle
    /// term of the canonical non-split extension at the pivot gap `a`:
    /// tilde-I takes I above a and J at or below a; tilde-J takes J above a
    /// and I below a.
    pub fn tilde_sets(&self) -> Result<(SignedSubset, SignedSubset), FormulaError> {
        let a = self.pivot.ok_or(FormulaError::NoSharedGaps)?;
        let mut ti = self.i.above(a);
        ti.push((
            a,
            self.j.sign_of(a).expect("pivot is a shared gap, so in J"),
        ));
        ti.extend(self.j.below(a));
        let mut tj = self.j.above(a);
        tj.extend(self.i.below(a));
        let ti = SignedSubset::new(self.n, ti).expect("pieces are disjoint by construction");
        let tj = SignedSubset::new(self.n, tj).expect("pieces are disjoint by construction");
        debug_assert!(ti.is_alternating() && tj.is_alternating());
        debug_assert_eq!(
            ti.weight_sum() + tj.weight_sum(),
            self.i.weight_sum() + self.j.weight_sum()
        );
        Ok((ti, tj))
    }

    /// Decomposability class of the middle term of the canonical extension.
    pub fn classify(&self) -> Result<MiddleTermClass, FormulaError> {
        let (ti, tj) = self.tilde_sets()?;
        if self.r % 2 == 1 {
            Ok(MiddleTermClass::Decomposable { ti, tj })
        } else {
            Ok(MiddleTermClass::Indecomposable { ti, tj })
        }
    }
}

/// Structure of the middle term of the canonical extension of a mirrored
/// pair: a direct sum of two standard modules (r odd) or an indecomposable
/// module that is an extension of one standard module by another (r even).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MiddleTermClass {
    Decomposable { ti: SignedSubset, tj: SignedSubset },
    Indecomposable { ti: SignedSubset, tj: SignedSubset },
}
