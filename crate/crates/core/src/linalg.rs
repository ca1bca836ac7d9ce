//! Dense exact matrices and fraction-free elimination.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Rational, Ring};

/// Row-major rectangular rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let data = (0..rows * cols).map(|x| f(x / cols, x % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.data.chunks(self.cols.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn row(&self, i: usize) -> Matrix {
        Matrix::from_fn(1, self.cols, |_, j| self.get(i, j).clone())
    }

    pub fn col(&self, j: usize) -> Matrix {
        Matrix::from_fn(self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - other.get(i, j)
        }))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        }))
    }

    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        det_bareiss(&self.to_rows())
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }
}

/// Square symmetric matrix over an exact ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix<T = Rational> {
    order: usize,
    data: Vec<T>,
}

impl<T: Ring> SymMatrix<T> {
    /// Build from full rows, rejecting non-square or non-symmetric input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("symmetric matrix must be square".into()));
        }
        if (0..n).any(|i| (0..i).any(|j| rows[i][j] != rows[j][i])) {
            return Err(Error::NotSymmetric);
        }
        Ok(SymMatrix {
            order: n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Build from the upper triangle `f(i, j)` with `i <= j`.
    pub fn from_upper(order: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = vec![T::zero(); order * order];
        for i in 0..order {
            for j in i..order {
                let v = f(i, j);
                data[j * order + i] = v.clone();
                data[i * order + j] = v;
            }
        }
        SymMatrix { order, data }
    }

    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            data: vec![T::zero(); order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.order + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.order.max(1)).take(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> SymMatrix<U> {
        SymMatrix {
            order: self.order,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "order mismatch");
        SymMatrix {
            order: self.order,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// Leading `m x m` principal submatrix.
    pub fn leading(&self, m: usize) -> Self {
        SymMatrix::from_upper(m, |i, j| self.get(i, j).clone())
    }

    /// `diag(blocks...)`
    pub fn block_diag(blocks: &[&SymMatrix<T>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.order).sum();
        let mut out = SymMatrix::zeros(n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.order {
                for j in 0..b.order {
                    out.data[(off + i) * n + off + j] = b.get(i, j).clone();
                }
            }
            off += b.order;
        }
        out
    }

    pub fn det(&self) -> Result<T> {
        det_bareiss(&self.to_rows())
    }
}

impl SymMatrix<Rational> {
    /// Sylvester's criterion with fraction-free elimination and no pivoting:
    /// the k-th Bareiss pivot is the k-th leading principal minor, so every
    /// pivot must be strictly positive.
    pub fn is_positive_definite(&self) -> bool {
        let n = self.order;
        let mut a = self.to_rows();
        let mut prev = Rational::one();
        for k in 0..n {
            if !a[k][k].is_positive() {
                return false;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        true
    }

    pub fn is_negative_definite(&self) -> bool {
        self.neg().is_positive_definite()
    }
}

impl<T: Ring + fmt::Display> fmt::Display for SymMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Determinant by Bareiss fraction-free elimination with row pivoting on
/// nonzero entries. Every intermediate division is exact over an integral
/// domain; a failed division signals a ring implementation bug.
pub fn det_bareiss<T: Ring>(rows: &[Vec<T>]) -> Result<T> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = rows.to_vec();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(T::zero());
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Internal("Bareiss division was not exact".into()))?;
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}
