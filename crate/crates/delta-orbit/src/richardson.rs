//! Decomposition of a symmetric dimension vector into a direct sum of
//! standard-filtered modules whose self-extensions vanish (a Richardson
//! module for the corresponding nilpotent orbit), plus certification of the
//! result through the linear-algebra oracle and enumeration of the sign
//! variants.

use std::collections::BTreeSet;

use serde_json::json;
use thiserror::Error;

use crate::build::{build_delta_signed, build_middle_term, build_projective, BuildError};
use crate::field::Field;
use crate::formulas::{support_from_dims_unsigned, FormulaError, MirrorPairContext};
use crate::functors::restrict_to_plain;
use crate::quiver::BoundQuiver;
use crate::rep::{ext1_dim, Representation};
use crate::signed::{container_vertex_sign, Sign, SignedSubset, UnsignedSubset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanError {
    #[error("dimension vector is not symmetric at position {0}")]
    NotSymmetric(usize),
    #[error("dimension vector is empty")]
    Empty,
    #[error("entry {index} would become negative at stage {stage}")]
    NegativeEntry { stage: usize, index: usize },
    #[error("stage {0} does not form a valid mirrored pair: {1}")]
    BadStage(usize, FormulaError),
    #[error("oracle construction failed: {0}")]
    Build(#[from] BuildError),
}

/// A dimension vector for a symmetric flag: d_i = d_{n+1-i}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymDimVector {
    d: Vec<usize>,
}

impl SymDimVector {
    pub fn new(d: Vec<usize>) -> Result<Self, PlanError> {
        if d.is_empty() {
            return Err(PlanError::Empty);
        }
        let n = d.len();
        for i in 0..n {
            if d[i] != d[n - 1 - i] {
                return Err(PlanError::NotSymmetric(i + 1));
            }
        }
        Ok(SymDimVector { d })
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.d
    }

    /// N = sum of the entries (the size of the ambient space).
    pub fn total(&self) -> usize {
        self.d.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StageKind {
    /// The full injective-projective at a weight-1 vertex (N odd only).
    Projective,
    /// A direct sum Delta(I) + Delta(-I) for a symmetric support.
    Sum,
    /// The canonical indecomposable-or-split middle term of a mirrored pair.
    Extension,
}

impl StageKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StageKind::Projective => "projective",
            StageKind::Sum => "sum",
            StageKind::Extension => "extension",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub k: usize,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
    pub e: Vec<usize>,
    pub i_set: SignedSubset,
    pub j_set: SignedSubset,
    pub kind: StageKind,
    /// Whether the variant with all signs mirrored was selected.
    pub flipped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RichardsonPlan {
    pub d: SymDimVector,
    pub total: usize,
    pub stages: Vec<Stage>,
    /// Set when N is odd while n is even; the construction still runs but
    /// the orbit interpretation is degenerate.
    pub parity_warning: bool,
}

/// Peels the symmetric dimension vector into stages. Weights are read
/// reversed: position i of the vector corresponds to weight n + 1 - i.
pub fn decompose(d: &SymDimVector) -> Result<RichardsonPlan, PlanError> {
    let n = d.n();
    let total = d.total();
    let mut cur = d.entries().to_vec();
    let mut stages = Vec::new();
    let parity_warning = total % 2 == 1 && n % 2 == 0;
    if total % 2 == 1 {
        for (i, &v) in cur.iter().enumerate() {
            if v == 0 {
                return Err(PlanError::NegativeEntry { stage: 0, index: i + 1 });
            }
        }
        for v in cur.iter_mut() {
            *v -= 1;
        }
        let ones = vec![1usize; n];
        stages.push(Stage {
            k: 0,
            f: ones.clone(),
            g: ones.clone(),
            e: ones,
            i_set: UnsignedSubset::full(n).anchor_signs(Sign::Plus),
            j_set: SignedSubset::empty(n),
            kind: StageKind::Projective,
            flipped: false,
        });
    }
    let mut k = 0usize;
    while cur.iter().any(|&v| v > 0) {
        k += 1;
        let mut f = vec![0usize; n];
        let mut g = vec![0usize; n];
        for i in 1..=n {
            let v = cur[i - 1];
            // the middle position (2i = n+1) contributes to neither side when
            // the entry is exactly one
            if v >= 2 || (v == 1 && 2 * i < n + 1) {
                f[i - 1] = 1;
            }
            if v >= 2 || (v == 1 && 2 * i > n + 1) {
                g[i - 1] = 1;
            }
        }
        let e: Vec<usize> = f.iter().zip(&g).map(|(a, b)| a + b).collect();
        for i in 0..n {
            if e[i] > cur[i] {
                return Err(PlanError::NegativeEntry { stage: k, index: i + 1 });
            }
            cur[i] -= e[i];
        }
        let i0 = UnsignedSubset::new(
            n,
            (1..=n).filter(|&i| f[i - 1] != 0).map(|i| n + 1 - i).collect(),
        )
        .expect("weights are distinct");
        let j0 = UnsignedSubset::new(
            n,
            (1..=n).filter(|&i| g[i - 1] != 0).map(|i| n + 1 - i).collect(),
        )
        .expect("weights are distinct");
        let i_set = i0.anchor_signs(Sign::Plus);
        let j_set = j0.anchor_signs(Sign::Minus);
        let kind = if i0 == j0 {
            StageKind::Sum
        } else {
            // the two sides of an extension stage are each other's mirrors
            let ctx =
                MirrorPairContext::new(&i_set).map_err(|e| PlanError::BadStage(k, e))?;
            debug_assert_eq!(ctx.j, j_set);
            StageKind::Extension
        };
        stages.push(Stage {
            k,
            f,
            g,
            e,
            i_set,
            j_set,
            kind,
            flipped: false,
        });
    }
    Ok(RichardsonPlan {
        d: d.clone(),
        total,
        stages,
        parity_warning,
    })
}

impl RichardsonPlan {
    /// Stages that admit a mirrored variant: the initial projective stage and
    /// every extension stage.
    pub fn flippable_stages(&self) -> Vec<usize> {
        self.stages
            .iter()
            .enumerate()
            .filter(|(_, s)| matches!(s.kind, StageKind::Projective | StageKind::Extension))
            .map(|(i, _)| i)
            .collect()
    }

    /// Number of sign variants of the construction.
    pub fn variant_count(&self) -> u128 {
        1u128 << self.flippable_stages().len()
    }

    /// All sign variants, the unflipped plan first, enumerated in binary
    /// order over the flippable stages.
    pub fn variants(&self) -> Vec<RichardsonPlan> {
        let flippable = self.flippable_stages();
        let count = 1usize << flippable.len();
        (0..count)
            .map(|mask| {
                let mut plan = self.clone();
                for (bit, &si) in flippable.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        let st = &mut plan.stages[si];
                        st.flipped = true;
                        st.i_set = st.i_set.negate();
                        st.j_set = st.j_set.negate();
                    }
                }
                plan
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let stages: Vec<serde_json::Value> = self
            .stages
            .iter()
            .map(|s| {
                json!({
                    "k": s.k,
                    "f": s.f,
                    "g": s.g,
                    "e": s.e,
                    "I": s.i_set.to_string(),
                    "J": s.j_set.to_string(),
                    "kind": s.kind.as_str(),
                    "flipped": s.flipped,
                })
            })
            .collect();
        json!({
            "d": self.d.entries(),
            "N": self.total,
            "stages": stages,
            "variants": self.variant_count() as u64,
            "parity_warning": self.parity_warning,
        })
    }
}

/// Closed form for the number of sign variants, from the distinct entry
/// values of d: 2^(number of distinct odd values) when N is even, twice
/// 2^(number of distinct nonzero even values) when N is odd.
pub fn variant_count_closed_form(d: &SymDimVector) -> u128 {
    let values: BTreeSet<usize> = d.entries().iter().copied().collect();
    if d.total() % 2 == 0 {
        let s_odd = values.iter().filter(|&&v| v % 2 == 1).count();
        1u128 << s_odd
    } else {
        let s_even = values.iter().filter(|&&v| v > 0 && v % 2 == 0).count();
        2u128 << s_even
    }
}

/// Builds the module of one stage as an explicit representation.
pub fn build_stage<F: Field>(
    n: usize,
    stage: &Stage,
    field: F,
) -> Result<Representation<F>, PlanError> {
    match stage.kind {
        StageKind::Projective => {
            let top = if stage.flipped { Sign::Minus } else { Sign::Plus };
            let gamma = container_vertex_sign(n, top);
            let quiver = BoundQuiver::signed(n);
            let vertex = quiver.vertex_signed(1, gamma);
            Ok(build_projective(quiver, vertex, field).rep)
        }
        StageKind::Sum => {
            let a = build_delta_signed(&stage.i_set, field.clone())?;
            let b = build_delta_signed(&stage.j_set, field)?;
            Ok(Representation::direct_sum(&[&a.rep, &b.rep]))
        }
        StageKind::Extension => {
            let base = if stage.flipped {
                stage.i_set.negate()
            } else {
                stage.i_set.clone()
            };
            let ctx = MirrorPairContext::new(&base)
                .map_err(|e| PlanError::BadStage(stage.k, e))?;
            let mid = build_middle_term(&ctx, stage.flipped, field)?;
            Ok(mid.e)
        }
    }
}

/// The full Richardson module of a plan, as a direct sum over the stages.
pub fn build_module<F: Field>(
    plan: &RichardsonPlan,
    field: F,
) -> Result<Representation<F>, PlanError> {
    let n = plan.d.n();
    if plan.stages.is_empty() {
        return Ok(Representation::zero(BoundQuiver::signed(n), field));
    }
    let parts: Result<Vec<Representation<F>>, PlanError> = plan
        .stages
        .iter()
        .map(|s| build_stage(n, s, field.clone()))
        .collect();
    let parts = parts?;
    let refs: Vec<&Representation<F>> = parts.iter().collect();
    Ok(Representation::direct_sum(&refs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifyReport {
    pub total_dim: usize,
    pub ext_self: usize,
    pub rigid: bool,
    /// Multiplicity of each weight in the standard filtration of the
    /// restriction to the plain algebra, indexed by weight 1..=n.
    pub restricted_support: Vec<usize>,
    pub support_matches: bool,
}

impl CertifyReport {
    pub fn ok(&self) -> bool {
        self.rigid && self.support_matches
    }
}

/// Certifies a plan with the oracle: the assembled module must have no
/// self-extensions, and the standard filtration of its restriction must
/// reproduce the dimension vector (weight w has multiplicity d_{n+1-w}).
pub fn certify<F: Field>(plan: &RichardsonPlan, field: F) -> Result<CertifyReport, PlanError> {
    let n = plan.d.n();
    let m = build_module(plan, field)?;
    let ext_self = ext1_dim(&m, &m);
    let restricted = restrict_to_plain(&m);
    let support = support_from_dims_unsigned(&restricted.comp_dims_plain());
    let mut restricted_support = vec![0usize; n];
    let mut filtered = true;
    match support {
        Ok(mult) => {
            for (&w, &k) in &mult {
                restricted_support[w - 1] = k;
            }
        }
        Err(_) => filtered = false,
    }
    let support_matches = filtered
        && (1..=n).all(|w| restricted_support[w - 1] == plan.d.entries()[n - w]);
    Ok(CertifyReport {
        total_dim: m.total_dim(),
        ext_self,
        rigid: ext_self == 0,
        restricted_support,
        support_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan_of(d: &[usize]) -> RichardsonPlan {
        decompose(&SymDimVector::new(d.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn symmetric_validation() {
        assert!(SymDimVector::new(vec![1, 2, 1]).is_ok());
        assert!(matches!(
            SymDimVector::new(vec![1, 2, 3]),
            Err(PlanError::NotSymmetric(1))
        ));
        assert!(matches!(SymDimVector::new(vec![]), Err(PlanError::Empty)));
    }

    #[test]
    fn worked_even_total() {
        let plan = plan_of(&[1, 3, 5, 4, 5, 3, 1]);
        assert_eq!(plan.total, 22);
        assert!(!plan.parity_warning);
        assert_eq!(plan.stages.len(), 3);
        let s1 = &plan.stages[0];
        assert_eq!(s1.f, vec![1, 1, 1, 1, 1, 1, 0]);
        assert_eq!(s1.g, vec![0, 1, 1, 1, 1, 1, 1]);
        assert_eq!(s1.e, vec![1, 2, 2, 2, 2, 2, 1]);
        assert_eq!(s1.i_set.to_string(), "7+,6-,5+,4-,3+,2-");
        assert_eq!(s1.j_set.to_string(), "6-,5+,4-,3+,2-,1+");
        assert_eq!(s1.kind, StageKind::Extension);
        let s2 = &plan.stages[1];
        assert_eq!(s2.f, vec![0, 1, 1, 1, 1, 0, 0]);
        assert_eq!(s2.g, vec![0, 0, 1, 1, 1, 1, 0]);
        assert_eq!(s2.e, vec![0, 1, 2, 2, 2, 1, 0]);
        assert_eq!(s2.i_set.to_string(), "6+,5-,4+,3-");
        assert_eq!(s2.j_set.to_string(), "5-,4+,3-,2+");
        assert_eq!(s2.kind, StageKind::Extension);
        let s3 = &plan.stages[2];
        assert_eq!(s3.e, vec![0, 0, 1, 0, 1, 0, 0]);
        assert_eq!(s3.i_set.to_string(), "5+");
        assert_eq!(s3.j_set.to_string(), "3-");
        assert_eq!(s3.kind, StageKind::Extension);
        assert_eq!(plan.variant_count(), 8);
        assert_eq!(variant_count_closed_form(&plan.d), 8);
        assert_eq!(plan.variants().len(), 8);
    }

    #[test]
    fn worked_odd_total() {
        let plan = plan_of(&[1, 3, 5, 3, 5, 3, 1]);
        assert_eq!(plan.total, 21);
        assert_eq!(plan.stages.len(), 3);
        assert_eq!(plan.stages[0].kind, StageKind::Projective);
        assert_eq!(plan.stages[0].e, vec![1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(plan.stages[1].kind, StageKind::Sum);
        assert_eq!(plan.stages[1].e, vec![0, 2, 2, 2, 2, 2, 0]);
        assert_eq!(plan.stages[1].i_set.to_string(), "6+,5-,4+,3-,2+");
        assert_eq!(plan.stages[1].j_set.to_string(), "6-,5+,4-,3+,2-");
        assert_eq!(plan.stages[2].kind, StageKind::Sum);
        assert_eq!(plan.stages[2].e, vec![0, 0, 2, 0, 2, 0, 0]);
        assert_eq!(plan.stages[2].i_set.to_string(), "5+,3-");
        assert_eq!(plan.variant_count(), 2);
        assert_eq!(variant_count_closed_form(&plan.d), 2);
    }

    #[test]
    fn closed_form_matches_structure() {
        for d in [
            vec![2, 2],
            vec![1, 1],
            vec![2, 1, 2],
            vec![3, 1, 3],
            vec![1, 2, 2, 1],
            vec![4, 2, 4],
            vec![1, 3, 5, 4, 5, 3, 1],
            vec![1, 3, 5, 3, 5, 3, 1],
            vec![2, 4, 6, 6, 4, 2],
        ] {
            let d = SymDimVector::new(d).unwrap();
            let plan = decompose(&d).unwrap();
            assert_eq!(
                plan.variant_count(),
                variant_count_closed_form(&d),
                "variant count mismatch for {:?}",
                d.entries()
            );
        }
    }

    #[test]
    fn odd_total_needs_positive_entries() {
        let d = SymDimVector::new(vec![0, 1, 0]).unwrap();
        assert!(matches!(
            decompose(&d),
            Err(PlanError::NegativeEntry { stage: 0, index: 1 })
        ));
    }

    #[test]
    fn parity_warning_never_fires_for_symmetric_even_n() {
        // on an even number of positions every entry is paired, so the total
        // is even and the degenerate odd-total warning cannot trigger
        for d in [vec![1, 1, 1, 1], vec![1, 3, 3, 1], vec![2, 1, 1, 2]] {
            let d = SymDimVector::new(d).unwrap();
            assert_eq!(d.total() % 2, 0);
            assert!(!decompose(&d).unwrap().parity_warning);
        }
        let d = SymDimVector::new(vec![1, 2, 3, 2, 1]).unwrap();
        assert!(!decompose(&d).unwrap().parity_warning);
    }

    #[test]
    fn zero_vector_gives_empty_plan() {
        let d = SymDimVector::new(vec![0, 0]).unwrap();
        let plan = decompose(&d).unwrap();
        assert!(plan.stages.is_empty());
        assert_eq!(plan.variant_count(), 1);
    }
}
