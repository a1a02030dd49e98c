//! Dense exact matrices with Gaussian elimination over an abstract field.
//!
//! Matrices here stay small (a few hundred rows) but very sparse, so the
//! elimination routines skip zero entries explicitly; over the rationals this
//! keeps intermediate values tiny.

use crate::field::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn col(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Mat<E>) -> Mat<E> {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Mat<E>) -> Mat<E> {
        assert_eq!(self.cols, other.cols);
        Mat::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c).clone()
            } else {
                other.get(r - self.rows, c).clone()
            }
        })
    }

    /// Keeps the listed columns, in order.
    pub fn select_cols(&self, cols: &[usize]) -> Mat<E> {
        Mat::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }
}

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Mat<F::Elem> {
    Mat::from_fn(rows, cols, |_, _| f.zero())
}

pub fn identity<F: Field>(f: &F, n: usize) -> Mat<F::Elem> {
    Mat::from_fn(n, n, |r, c| if r == c { f.one() } else { f.zero() })
}

pub fn mul<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!(a.cols, b.rows, "shape mismatch in matrix product");
    let mut out = zeros(f, a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            let av = a.get(r, k);
            if f.is_zero(av) {
                continue;
            }
            for c in 0..b.cols {
                let bv = b.get(k, c);
                if f.is_zero(bv) {
                    continue;
                }
                let cur = out.get(r, c);
                out.set(r, c, f.add(cur, &f.mul(av, bv)));
            }
        }
    }
    out
}

pub fn sub<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Mat::from_fn(a.rows, a.cols, |r, c| f.sub(a.get(r, c), b.get(r, c)))
}

pub fn neg<F: Field>(f: &F, a: &Mat<F::Elem>) -> Mat<F::Elem> {
    Mat::from_fn(a.rows, a.cols, |r, c| f.neg(a.get(r, c)))
}

pub fn scale<F: Field>(f: &F, s: &F::Elem, a: &Mat<F::Elem>) -> Mat<F::Elem> {
    Mat::from_fn(a.rows, a.cols, |r, c| f.mul(s, a.get(r, c)))
}

pub fn add<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Mat::from_fn(a.rows, a.cols, |r, c| f.add(a.get(r, c), b.get(r, c)))
}

pub fn is_zero_mat<F: Field>(f: &F, a: &Mat<F::Elem>) -> bool {
    a.data.iter().all(|v| f.is_zero(v))
}

/// In-place reduced row echelon form; returns the pivot columns in order.
pub fn rref<F: Field>(f: &F, m: &mut Mat<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row >= m.rows {
            break;
        }
        let Some(pr) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
            continue;
        };
        if pr != row {
            for c in 0..m.cols {
                let a = m.get(row, c).clone();
                let b = m.get(pr, c).clone();
                m.set(row, c, b);
                m.set(pr, c, a);
            }
        }
        let inv = f.inv(m.get(row, col));
        for c in col..m.cols {
            let v = f.mul(&inv, m.get(row, c));
            m.set(row, c, v);
        }
        for r in 0..m.rows {
            if r == row || f.is_zero(m.get(r, col)) {
                continue;
            }
            let factor = m.get(r, col).clone();
            for c in col..m.cols {
                let v = f.sub(m.get(r, c), &f.mul(&factor, m.get(row, c)));
                m.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Mat<F::Elem>) -> usize {
    let mut copy = m.clone();
    rref(f, &mut copy).len()
}

/// Basis of the right nullspace, one column per basis vector.
pub fn nullspace<F: Field>(f: &F, m: &Mat<F::Elem>) -> Mat<F::Elem> {
    let mut copy = m.clone();
    let pivots = rref(f, &mut copy);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = zeros(f, m.cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        out.set(fc, k, f.one());
        for (prow, &pc) in pivots.iter().enumerate() {
            out.set(pc, k, f.neg(copy.get(prow, fc)));
        }
    }
    out
}

/// A basis for the column space, as a matrix whose columns are the pivot
/// columns of `m` (in their original coordinates).
pub fn col_space_basis<F: Field>(f: &F, m: &Mat<F::Elem>) -> Mat<F::Elem> {
    let mut t = Mat::from_fn(m.cols, m.rows, |r, c| m.get(c, r).clone());
    let _ = rref(f, &mut t);
    // rows of the reduced transpose form a reduced basis; transpose back
    let nonzero: Vec<usize> = (0..t.rows)
        .filter(|&r| (0..t.cols).any(|c| !f.is_zero(t.get(r, c))))
        .collect();
    Mat::from_fn(m.rows, nonzero.len(), |r, c| t.get(nonzero[c], r).clone())
}

/// Solves A X = B for X, assuming A has full column rank and the system is
/// consistent; returns None otherwise.
pub fn solve<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Option<Mat<F::Elem>> {
    assert_eq!(a.rows, b.rows);
    let mut aug = a.hstack(b);
    let pivots = rref(f, &mut aug);
    if pivots.len() != a.cols || pivots.iter().any(|&p| p >= a.cols) {
        return None;
    }
    // consistency: no nonzero row entirely inside the B block below the pivots
    for r in pivots.len()..aug.rows {
        for c in a.cols..aug.cols {
            if !f.is_zero(aug.get(r, c)) {
                return None;
            }
        }
    }
    Some(Mat::from_fn(a.cols, b.cols, |r, c| {
        aug.get(r, a.cols + c).clone()
    }))
}

/// Whether every column of `v` lies in the column space of `basis`.
pub fn in_col_space<F: Field>(f: &F, basis: &Mat<F::Elem>, v: &Mat<F::Elem>) -> bool {
    rank(f, &basis.hstack(v)) == rank(f, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn m(f: &Rationals, rows: usize, cols: usize, vals: &[i64]) -> Mat<num_rational::BigRational> {
        Mat::from_fn(rows, cols, |r, c| f.from_i64(vals[r * cols + c]))
    }

    #[test]
    fn rref_rank_nullspace() {
        let f = Rationals;
        let a = m(&f, 3, 3, &[1, 2, 3, 2, 4, 6, 1, 1, 1]);
        assert_eq!(rank(&f, &a), 2);
        let ns = nullspace(&f, &a);
        assert_eq!(ns.cols(), 1);
        assert!(is_zero_mat(&f, &mul(&f, &a, &ns)));
    }

    #[test]
    fn solve_full_column_rank() {
        let f = Rationals;
        let a = m(&f, 3, 2, &[1, 0, 1, 1, 0, 2]);
        let x = m(&f, 2, 1, &[3, -1]);
        let b = mul(&f, &a, &x);
        assert_eq!(solve(&f, &a, &b).unwrap(), x);
        let bad = m(&f, 3, 1, &[1, 0, 0]);
        assert!(solve(&f, &a, &bad).is_none());
    }

    #[test]
    fn col_space_operations() {
        let f = Rationals;
        let a = m(&f, 3, 3, &[1, 1, 0, 0, 1, 1, 0, 0, 0]);
        let basis = col_space_basis(&f, &a);
        assert_eq!(basis.cols(), 2);
        assert!(in_col_space(&f, &basis, &a));
        let outside = m(&f, 3, 1, &[0, 0, 1]);
        assert!(!in_col_space(&f, &basis, &outside));
    }

    #[test]
    fn prime_field_elimination_matches_rank() {
        let f = PrimeField::new(101).unwrap();
        let a = Mat::from_fn(4, 5, |r, c| f.from_i64(((r * 7 + c * 3) % 5) as i64));
        let ns = nullspace(&f, &a);
        assert!(is_zero_mat(&f, &mul(&f, &a, &ns)));
        assert_eq!(rank(&f, &a) + ns.cols(), 5);
    }
}
