//! Dense matrices over the rationals with exact Gaussian elimination.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|&x| q(x)).collect() }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Matrix {
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Q) {
        self.data[r * self.cols + c] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let i = r * out.cols + c;
                        out.data[i] = &out.data[i] + a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    /// Rows `r0..r1` of the matrix.
    pub fn row_block(&self, r0: usize, r1: usize) -> Matrix {
        Matrix::from_fn(r1 - r0, self.cols, |r, c| self.get(r0 + r, c).clone())
    }

    /// Columns `c0..c1` of the matrix.
    pub fn col_block(&self, c0: usize, c1: usize) -> Matrix {
        Matrix::from_fn(self.rows, c1 - c0, |r, c| self.get(r, c0 + c).clone())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduces to reduced row echelon form in place and returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).recip();
            for c in col..self.cols {
                let i = row * self.cols + c;
                self.data[i] = &self.data[i] * &inv;
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let x = self.get(row, c);
                    if x.is_zero() {
                        continue;
                    }
                    let i = r * self.cols + c;
                    self.data[i] = &self.data[i] - &factor * x;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Q::zero(); self.cols];
                x[f] = Q::one();
                for (r, &p) in pivots.iter().enumerate() {
                    x[p] = -m.get(r, f).clone();
                }
                x
            })
            .collect()
    }

    /// A basis of the column space, as a matrix with independent columns.
    pub fn column_space(&self) -> Matrix {
        let pivots = self.clone().rref();
        let cols: Vec<Vec<Q>> = pivots.iter().map(|&c| self.column(c)).collect();
        Matrix::from_columns(self.rows, &cols)
    }

    /// Kernel basis as the columns of a matrix.
    pub fn kernel(&self) -> Matrix {
        Matrix::from_columns(self.cols, &self.nullspace())
    }

    /// Solves `self * x = b` for `x` when `self` has independent columns and
    /// the system is consistent.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows);
        let mut aug = self.hstack(b);
        let pivots = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) || pivots.len() != self.cols {
            return None;
        }
        Some(Matrix::from_fn(self.cols, b.cols, |r, c| aug.get(r, self.cols + c).clone()))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        self.solve(&Matrix::identity(self.rows))
    }

    /// Extends independent columns to a basis of the whole space with
    /// standard basis vectors; returns the added columns.
    pub fn complement(&self) -> Matrix {
        let mut basis = self.clone();
        let mut added = Vec::new();
        for i in 0..self.rows {
            let mut e = vec![Q::zero(); self.rows];
            e[i] = Q::one();
            let trial = basis.hstack(&Matrix::from_columns(self.rows, &[e.clone()]));
            if trial.rank() > basis.cols {
                basis = trial;
                added.push(e);
            }
        }
        Matrix::from_columns(self.rows, &added)
    }

    /// Whether every entry is an integer; returns them if so.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.data.iter().map(|x| if x.is_integer() { i64::try_from(x.to_integer()).ok() } else { None }).collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_i64(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for x in ns {
            let v = Matrix::from_columns(3, &[x]);
            assert!(m.mul(&v).is_zero());
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(3, 3, &[2, 1, 0, 0, 1, 1, 1, 0, 3]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert!(Matrix::from_i64(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = Matrix::from_i64(2, 1, &[1, 1]);
        assert!(a.solve(&Matrix::from_i64(2, 1, &[1, 2])).is_none());
        assert_eq!(a.solve(&Matrix::from_i64(2, 1, &[3, 3])).unwrap(), Matrix::from_i64(1, 1, &[3]));
    }

    #[test]
    fn complement_completes_a_basis() {
        let a = Matrix::from_i64(3, 1, &[1, 1, 0]);
        let c = a.complement();
        assert_eq!(c.cols(), 2);
        assert_eq!(a.hstack(&c).rank(), 3);
    }

    #[test]
    fn empty_shapes() {
        let m = Matrix::zeros(0, 2);
        assert_eq!(m.nullspace().len(), 2);
        assert_eq!(Matrix::zeros(2, 0).rank(), 0);
        assert_eq!(Matrix::identity(0).inverse().unwrap().rows(), 0);
    }
}
