//! Dense matrices and exact Gauss-Jordan elimination over a field scalar.
//!
//! Pivots are chosen as the first nonzero entry in a column; with exact
//! arithmetic no magnitude heuristics are needed. Subspaces are kept in
//! reduced row echelon form so equality is plain value comparison.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalars::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_diag(diag: &[S]) -> Self {
        let n = diag.len();
        let mut m = Matrix::zeros(n, n);
        for (i, v) in diag.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    /// Column vector view of a flat vector (n x 1).
    pub fn column_vector(v: &[S]) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    /// Flattened entries, row-major.
    pub fn as_vec(&self) -> &[S] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() * s.clone()
        })
    }

    pub fn map<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    /// Matrix-vector product. Panics on shape mismatch.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self.at(i, j).is_zero() {
                        acc = acc + self.at(i, j).clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> S {
        let mut acc = S::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc + self.at(i, i).clone();
        }
        acc
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
    pub fn rref(&self) -> (Matrix<S>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.at(row, col).inv();
            for c in col..m.cols {
                if !m.at(row, c).is_zero() {
                    let v = m.at(row, c).clone() * inv.clone();
                    m.set(row, c, v);
                }
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone();
                    for c in col..m.cols {
                        if !m.at(row, c).is_zero() {
                            let v = m.at(r, c).clone() - f.clone() * m.at(row, c).clone();
                            m.set(r, c, v);
                        }
                    }
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

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix<S>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, S::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| red.at(i, n + j).clone()))
    }

    /// Basis of the right null space, canonicalized by echelon reduction.
    pub fn null_space(&self) -> Vec<Vec<S>> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![S::zero(); self.cols];
            v[f] = S::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -red.at(row, f).clone();
            }
            basis.push(v);
        }
        Subspace::from_spanning(self.cols, &basis).into_rows()
    }

    /// One exact solution of `self * x = rhs`, free variables set to zero.
    pub fn solve(&self, rhs: &[S]) -> Option<Vec<S>> {
        assert_eq!(self.rows, rhs.len(), "solve shape mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![S::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = red.at(row, self.cols).clone();
        }
        Some(x)
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() + rhs.at(i, j).clone()
        })
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch"
        );
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() - rhs.at(i, j).clone()
        })
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self.at(i, j).clone())
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out: Matrix<S> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    if !rhs.at(k, j).is_zero() {
                        let v = out.at(i, j).clone() + a.clone() * rhs.at(k, j).clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }
}

/// A linear subspace held as a reduced-row-echelon basis, the canonical
/// representative: equal subspaces compare equal componentwise.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Matrix<S>,
}

impl<S: Scalar> Subspace<S> {
    pub fn from_spanning(ambient: usize, vectors: &[Vec<S>]) -> Self {
        if vectors.is_empty() {
            return Subspace {
                ambient,
                basis: Matrix::zeros(0, ambient),
            };
        }
        let m = Matrix::from_rows(vectors.to_vec()).expect("spanning vectors of equal length");
        assert_eq!(m.cols(), ambient, "spanning vectors of wrong length");
        let (red, pivots) = m.rref();
        let basis = Matrix::from_fn(pivots.len(), ambient, |i, j| red.at(i, j).clone());
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis_vectors(&self) -> Vec<Vec<S>> {
        (0..self.dim())
            .map(|i| self.basis.row(i).to_vec())
            .collect()
    }

    pub fn into_rows(self) -> Vec<Vec<S>> {
        self.basis_vectors()
    }

    /// Residual of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for i in 0..self.dim() {
            let pivot = (0..self.ambient)
                .find(|&c| !self.basis.at(i, c).is_zero())
                .expect("echelon basis rows are nonzero");
            if !r[pivot].is_zero() {
                let f = r[pivot].clone();
                for c in 0..self.ambient {
                    if !self.basis.at(i, c).is_zero() {
                        r[c] = r[c].clone() - f.clone() * self.basis.at(i, c).clone();
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn sum(&self, other: &Subspace<S>) -> Subspace<S> {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::from_spanning(self.ambient, &rows)
    }
}

/// Intersection of the null spaces of a family of constraint matrices,
/// computed incrementally: each step solves inside the current solution
/// space, which keeps the eliminations small for large stacked systems.
pub fn common_null_space<S: Scalar>(
    unknowns: usize,
    blocks: impl IntoIterator<Item = Matrix<S>>,
) -> Vec<Vec<S>> {
    let mut basis: Matrix<S> = Matrix::identity(unknowns); // columns = current basis
    let mut dim = unknowns;
    for block in blocks {
        if dim == 0 {
            break;
        }
        assert_eq!(block.cols(), unknowns);
        let restricted = &block * &basis;
        let kernel = restricted.null_space();
        dim = kernel.len();
        let coeff = Matrix::from_rows(kernel).unwrap_or_else(|_| Matrix::zeros(0, 0));
        if dim == 0 {
            basis = Matrix::zeros(unknowns, 0);
        } else {
            basis = &basis * &coeff.transpose();
        }
    }
    let vectors: Vec<Vec<S>> = (0..dim).map(|c| basis.col(c)).collect();
    Subspace::from_spanning(unknowns, &vectors).into_rows()
}
