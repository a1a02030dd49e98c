//! Signed and unsigned subsets of {1, ..., n}.
//!
//! Elements are kept in strictly decreasing order of weight. A signed subset
//! attaches a sign to each weight; the text form is a comma-separated list
//! such as `8+,7-,6+,5-,4+,1-` (unsigned: `8,7,6,5,4,1`). The empty set is
//! the empty string.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The opposite sign.
    pub fn bar(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Flips the sign `k` times.
    pub fn alternated(self, k: usize) -> Sign {
        if k % 2 == 0 {
            self
        } else {
            self.bar()
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetError {
    #[error("weight {0} outside 1..={1}")]
    OutOfRange(usize, usize),
    #[error("duplicate weight {0}")]
    Duplicate(usize),
    #[error("cannot parse set element {0:?}")]
    Parse(String),
    #[error("set is not alternating")]
    NotAlternating,
}

/// A subset of {1, ..., n}, stored in strictly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnsignedSubset {
    n: usize,
    elems: Vec<usize>,
}

impl UnsignedSubset {
    pub fn new(n: usize, mut elems: Vec<usize>) -> Result<Self, SetError> {
        elems.sort_unstable_by(|a, b| b.cmp(a));
        for w in elems.windows(2) {
            if w[0] == w[1] {
                return Err(SetError::Duplicate(w[0]));
            }
        }
        for &w in &elems {
            if w == 0 || w > n {
                return Err(SetError::OutOfRange(w, n));
            }
        }
        Ok(UnsignedSubset { n, elems })
    }

    pub fn empty(n: usize) -> Self {
        UnsignedSubset { n, elems: vec![] }
    }

    /// The full set {n, ..., 1}.
    pub fn full(n: usize) -> Self {
        UnsignedSubset {
            n,
            elems: (1..=n).rev().collect(),
        }
    }

    pub fn parse(n: usize, s: &str) -> Result<Self, SetError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty(n));
        }
        let mut elems = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let w: usize = tok.parse().map_err(|_| SetError::Parse(tok.to_string()))?;
            elems.push(w);
        }
        Self::new(n, elems)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Weights in strictly decreasing order.
    pub fn weights(&self) -> &[usize] {
        &self.elems
    }

    pub fn contains(&self, w: usize) -> bool {
        self.elems.contains(&w)
    }

    /// Complement within {1, ..., n}.
    pub fn complement(&self) -> UnsignedSubset {
        let elems = (1..=self.n).rev().filter(|w| !self.contains(*w)).collect();
        UnsignedSubset { n: self.n, elems }
    }

    /// Intersection with another subset of the same ground set.
    pub fn intersect(&self, other: &UnsignedSubset) -> UnsignedSubset {
        assert_eq!(self.n, other.n);
        let elems = self
            .elems
            .iter()
            .copied()
            .filter(|w| other.contains(*w))
            .collect();
        UnsignedSubset { n: self.n, elems }
    }

    /// Union with another subset of the same ground set.
    pub fn union(&self, other: &UnsignedSubset) -> UnsignedSubset {
        assert_eq!(self.n, other.n);
        let elems = (1..=self.n)
            .rev()
            .filter(|w| self.contains(*w) || other.contains(*w))
            .collect();
        UnsignedSubset { n: self.n, elems }
    }

    /// The order-reversing involution w -> n + 1 - w applied elementwise.
    pub fn mirror(&self) -> UnsignedSubset {
        let mut elems: Vec<usize> = self.elems.iter().map(|&w| self.n + 1 - w).collect();
        elems.reverse();
        UnsignedSubset {
            n: self.n,
            elems,
        }
    }

    /// Nonempty initial segments (largest-weight-first suffixes of the
    /// decreasing list end at weight min), shortest first. An initial segment
    /// of {8,7,6,5,4,1} is one of {1}, {4,1}, {5,4,1}, ..., the full set.
    pub fn initial_segments(&self) -> Vec<UnsignedSubset> {
        (1..=self.elems.len())
            .map(|l| UnsignedSubset {
                n: self.n,
                elems: self.elems[self.elems.len() - l..].to_vec(),
            })
            .collect()
    }

    /// Elementwise dominance: |self| <= |other| and the i-th largest weight of
    /// self is at most the i-th largest weight of other, for every i.
    pub fn leq(&self, other: &UnsignedSubset) -> bool {
        if self.elems.len() > other.elems.len() {
            return false;
        }
        self.elems
            .iter()
            .zip(other.elems.iter())
            .all(|(a, b)| a <= b)
    }

    /// Attaches signs alternating downwards from the largest weight, which
    /// receives `top`.
    pub fn anchor_signs(&self, top: Sign) -> SignedSubset {
        let elems = self
            .elems
            .iter()
            .enumerate()
            .map(|(k, &w)| (w, top.alternated(k)))
            .collect();
        SignedSubset { n: self.n, elems }
    }
}

impl fmt::Display for UnsignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A subset of {1, ..., n} with a sign attached to each weight, stored in
/// strictly decreasing order of weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedSubset {
    n: usize,
    elems: Vec<(usize, Sign)>,
}

impl SignedSubset {
    pub fn new(n: usize, mut elems: Vec<(usize, Sign)>) -> Result<Self, SetError> {
        elems.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        for w in elems.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(SetError::Duplicate(w[0].0));
            }
        }
        for &(w, _) in &elems {
            if w == 0 || w > n {
                return Err(SetError::OutOfRange(w, n));
            }
        }
        Ok(SignedSubset { n, elems })
    }

    pub fn empty(n: usize) -> Self {
        SignedSubset { n, elems: vec![] }
    }

    pub fn parse(n: usize, s: &str) -> Result<Self, SetError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty(n));
        }
        let mut elems = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let sign = match tok.chars().last() {
                Some('+') => Sign::Plus,
                Some('-') => Sign::Minus,
                _ => return Err(SetError::Parse(tok.to_string())),
            };
            let w: usize = tok[..tok.len() - 1]
                .trim()
                .parse()
                .map_err(|_| SetError::Parse(tok.to_string()))?;
            elems.push((w, sign));
        }
        Self::new(n, elems)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// (weight, sign) pairs in strictly decreasing order of weight.
    pub fn elems(&self) -> &[(usize, Sign)] {
        &self.elems
    }

    /// The largest element, if any.
    pub fn top(&self) -> Option<(usize, Sign)> {
        self.elems.first().copied()
    }

    pub fn sign_of(&self, w: usize) -> Option<Sign> {
        self.elems.iter().find(|&&(v, _)| v == w).map(|&(_, s)| s)
    }

    pub fn contains(&self, w: usize, s: Sign) -> bool {
        self.sign_of(w) == Some(s)
    }

    /// Forgets the signs.
    pub fn unsigned(&self) -> UnsignedSubset {
        UnsignedSubset {
            n: self.n,
            elems: self.elems.iter().map(|&(w, _)| w).collect(),
        }
    }

    /// Flips every sign.
    pub fn negate(&self) -> SignedSubset {
        SignedSubset {
            n: self.n,
            elems: self.elems.iter().map(|&(w, s)| (w, s.bar())).collect(),
        }
    }

    /// Consecutive weights (in decreasing order) carry opposite signs.
    pub fn is_alternating(&self) -> bool {
        self.elems.windows(2).all(|p| p[0].1 != p[1].1)
    }

    /// Consecutive weights carry different signs exactly when the gap between
    /// them is even.
    pub fn is_step_alternating(&self) -> bool {
        self.elems.windows(2).all(|p| {
            let gap = p[0].0 - p[1].0;
            (p[0].1 != p[1].1) == (gap % 2 == 0)
        })
    }

    /// The mirrored set with signs re-anchored: weights map through
    /// w -> n + 1 - w and the new largest weight gets the opposite of the old
    /// top sign, alternating downwards.
    pub fn mirror_signed(&self) -> SignedSubset {
        match self.top() {
            None => SignedSubset::empty(self.n),
            Some((_, s)) => self.unsigned().mirror().anchor_signs(s.bar()),
        }
    }

    /// Nonempty initial segments (suffixes of the decreasing list), shortest
    /// first, keeping signs.
    pub fn initial_segments(&self) -> Vec<SignedSubset> {
        (1..=self.elems.len())
            .map(|l| SignedSubset {
                n: self.n,
                elems: self.elems[self.elems.len() - l..].to_vec(),
            })
            .collect()
    }

    /// Number of elements carrying the given sign.
    pub fn count_sign(&self, s: Sign) -> usize {
        self.elems.iter().filter(|&&(_, t)| t == s).count()
    }

    /// Elements with weight strictly above `w`.
    pub fn above(&self, w: usize) -> Vec<(usize, Sign)> {
        self.elems.iter().copied().filter(|&(v, _)| v > w).collect()
    }

    /// Elements with weight strictly below `w`.
    pub fn below(&self, w: usize) -> Vec<(usize, Sign)> {
        self.elems.iter().copied().filter(|&(v, _)| v < w).collect()
    }

    /// Signed intersection: elements present in both sets with equal sign.
    pub fn intersect(&self, other: &SignedSubset) -> SignedSubset {
        assert_eq!(self.n, other.n);
        SignedSubset {
            n: self.n,
            elems: self
                .elems
                .iter()
                .copied()
                .filter(|&(w, s)| other.contains(w, s))
                .collect(),
        }
    }

    /// Sum of the weights; this is the total dimension of the module whose
    /// standard filtration is indexed by the set.
    pub fn weight_sum(&self) -> usize {
        self.elems.iter().map(|&(w, _)| w).sum()
    }
}

impl fmt::Display for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .elems
            .iter()
            .map(|(w, s)| format!("{}{}", w, s))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Composition-factor support of the indecomposable projective attached to
/// the weight-1 vertex of sign `gamma`: weight i carries sign
/// gamma * (-1)^(i-1), for i = n down to 1.
pub fn projective_support(gamma: Sign, n: usize) -> SignedSubset {
    let elems = (1..=n).rev().map(|i| (i, gamma.alternated(i - 1))).collect();
    SignedSubset { n, elems }
}

/// Top sign of the injective envelope container for an alternating set with
/// top sign `s`: the container is the projective at the weight-1 vertex of
/// this sign (equal to `s` for odd n, flipped for even n).
pub fn container_vertex_sign(n: usize, s: Sign) -> Sign {
    if n % 2 == 1 {
        s
    } else {
        s.bar()
    }
}
