//! Exact linear algebra: rational row reduction, nullspaces, and
//! fraction-free (Bareiss) determinants.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::int::normalize_rational_vector;
use super::MultiPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    /// Builds a matrix from rows; `None` if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        let n = rows.len();
        Some(RationalMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Like [`from_rows`](Self::from_rows), with an explicit column count so
    /// that matrices with no rows keep their width.
    pub fn from_rows_with_cols(rows: Vec<Vec<BigRational>>, cols: usize) -> Option<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        let n = rows.len();
        Some(RationalMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Option<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    fn get_mut(&mut self, r: usize, c: usize) -> &mut BigRational {
        &mut self.data[r * self.cols + c]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                *m.get_mut(row, c) = v;
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &f * m.get(row, c);
                    *m.get_mut(r, c) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).fold(BigRational::zero(), |acc, c| acc + self.get(r, c) * &v[c]))
            .collect()
    }
}

/// Basis of the right nullspace, each vector scaled to coprime integers with
/// its first nonzero entry positive. Empty when the nullspace is trivial.
pub fn rational_nullspace(m: &RationalMatrix) -> Vec<Vec<BigInt>> {
    let (r, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); m.cols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, f).clone();
            }
            normalize_rational_vector(&v)
        })
        .collect()
}

/// Solves `A·x = b`, returning one solution (free variables set to zero) or
/// `None` when the system is inconsistent.
pub fn solve_consistent(a: &RationalMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.rows, b.len());
    let mut aug = RationalMatrix::zeros(a.rows, a.cols + 1);
    for (r, rhs) in b.iter().enumerate() {
        for c in 0..a.cols {
            *aug.get_mut(r, c) = a.get(r, c).clone();
        }
        *aug.get_mut(r, a.cols) = rhs.clone();
    }
    let (red, pivots) = aug.rref();
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); a.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = red.get(row, a.cols).clone();
    }
    Some(x)
}

/// Integral domain operations needed by fraction-free elimination.
pub trait BareissRing: Clone {
    fn is_zero(&self) -> bool;
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division; the divisor is known to divide.
    fn div_exact(&self, other: &Self) -> Self;
}

impl BareissRing for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

impl BareissRing for MultiPoly {
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn one_like(&self) -> Self {
        MultiPoly::constant(self.vars(), 1)
    }
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.vars())
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        MultiPoly::div_exact(self, other).expect("Bareiss step must divide exactly")
    }
}

/// Determinant of a square matrix by fraction-free Gaussian elimination.
///
/// Panics on an empty or non-square matrix.
pub fn bareiss_determinant<T: BareissRing>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix required");
    let mut prev = m[0][0].one_like();
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return m[0][0].zero_like();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}
