//! Dense exact-rational matrices: just enough Gaussian elimination for Gram
//! systems, projectors, and operator powers. No pivot-size heuristics are
//! needed since everything is exact.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::scalar::Rational;
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::from_integer(1.into());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_assign_at(&mut self, i: usize, j: usize, v: &Rational) {
        let slot = &mut self.data[i * self.cols + j];
        *slot = &*slot + v;
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// Product, skipping zero left entries; operator matrices here are
    /// sparse enough that this matters.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.data[i * rhs.cols + j];
                    *slot = &*slot + &(a * b);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn trace(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Solves self * X = rhs for square nonsingular self.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, rhs.rows);
        let n = self.rows;
        let w = rhs.cols;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    let t = a.get(pivot, j).clone();
                    a.set(pivot, j, a.get(col, j).clone());
                    a.set(col, j, t);
                }
                for j in 0..w {
                    let t = b.get(pivot, j).clone();
                    b.set(pivot, j, b.get(col, j).clone());
                    b.set(col, j, t);
                }
            }
            let inv = Rational::from_integer(1.into()) / a.get(col, col).clone();
            for j in col..n {
                let v = a.get(col, j) * &inv;
                a.set(col, j, v);
            }
            for j in 0..w {
                let v = b.get(col, j) * &inv;
                b.set(col, j, v);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in col..n {
                    let v = a.get(r, j) - &(&f * a.get(col, j));
                    a.set(r, j, v);
                }
                for j in 0..w {
                    let v = b.get(r, j) - &(&f * b.get(col, j));
                    b.set(r, j, v);
                }
            }
        }
        Ok(b)
    }

    pub fn inverse(&self) -> Result<Matrix, Error> {
        self.solve(&Matrix::identity(self.rows))
    }
}

/// Least structure that expresses "write v in the span of the columns of a":
/// exact elimination on the augmented system, distinguishing rank deficiency
/// from inconsistency.
pub fn solve_in_span(a: &Matrix, v: &[Rational]) -> Result<Vec<Rational>, Error> {
    assert_eq!(a.rows, v.len());
    let n = a.rows;
    let w = a.cols;
    let mut m = Matrix::from_fn(n, w + 1, |i, j| if j < w { a.get(i, j).clone() } else { v[i].clone() });
    let mut pivot_rows: Vec<Option<usize>> = vec![None; w];
    let mut row = 0;
    for col in 0..w {
        let Some(p) = (row..n).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if p != row {
            for j in 0..=w {
                let t = m.get(p, j).clone();
                m.set(p, j, m.get(row, j).clone());
                m.set(row, j, t);
            }
        }
        let inv = Rational::from_integer(1.into()) / m.get(row, col).clone();
        for j in col..=w {
            let v = m.get(row, j) * &inv;
            m.set(row, j, v);
        }
        for r in 0..n {
            if r == row || m.get(r, col).is_zero() {
                continue;
            }
            let f = m.get(r, col).clone();
            for j in col..=w {
                let v = m.get(r, j) - &(&f * m.get(row, j));
                m.set(r, j, v);
            }
        }
        pivot_rows[col] = Some(row);
        row += 1;
    }
    // Any nonzero residual right-hand side below the pivots means v is
    // outside the span.
    for r in row..n {
        if !m.get(r, w).is_zero() {
            return Err(Error::NotInSpan);
        }
    }
    let mut coeffs = vec![Rational::zero(); w];
    for col in 0..w {
        if let Some(r) = pivot_rows[col] {
            coeffs[col] = m.get(r, w).clone();
        }
    }
    Ok(coeffs)
}
