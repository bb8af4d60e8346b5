//! Sparse exact matrices and a few dense helpers.

use std::collections::BTreeMap;
use std::fmt;

use crate::ring::{Coefficient, Rational, Ring};

/// Column-major sparse matrix over a ring. Zero entries are never stored, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: Vec<BTreeMap<usize, R>>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols: vec![BTreeMap::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.add_at(i, i, R::one());
        }
        m
    }

    pub fn diagonal(entries: Vec<R>) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m.add_at(i, i, e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> R {
        self.cols[col].get(&row).cloned().unwrap_or_else(R::zero)
    }

    /// Adds `value` to entry `(row, col)`.
    pub fn add_at(&mut self, row: usize, col: usize, value: R) {
        assert!(row < self.rows, "row {row} out of range {}", self.rows);
        if value.is_zero() {
            return;
        }
        let column = &mut self.cols[col];
        match column.remove(&row) {
            Some(old) => {
                let sum = old.add_ref(&value);
                if !sum.is_zero() {
                    column.insert(row, sum);
                }
            }
            None => {
                column.insert(row, value);
            }
        }
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = (usize, &R)> {
        self.cols[col].iter().map(|(&r, v)| (r, v))
    }

    /// All nonzero entries as `(row, col, value)`, column by column.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, v)| (r, c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn mul(&self, rhs: &Matrix<R>) -> Matrix<R> {
        assert_eq!(
            self.cols(),
            rhs.rows,
            "dimension mismatch in matrix product"
        );
        let mut out = Matrix::zeros(self.rows, rhs.cols());
        for (j, rcol) in rhs.cols.iter().enumerate() {
            for (&k, b) in rcol {
                for (&i, a) in &self.cols[k] {
                    out.add_at(i, j, a.mul_ref(b));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix<R>) -> Matrix<R> {
        assert_eq!(
            (self.rows, self.cols()),
            (rhs.rows, rhs.cols()),
            "dimension mismatch in sum"
        );
        let mut out = self.clone();
        for (r, c, v) in rhs.entries() {
            out.add_at(r, c, v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix<R>) -> Matrix<R> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Matrix<R> {
        self.map(|v| v.neg_ref())
    }

    pub fn scale(&self, by: &Rational) -> Matrix<R> {
        self.map(|v| v.scale(by))
    }

    pub fn scale_ring(&self, by: &R) -> Matrix<R> {
        self.map(|v| by.mul_ref(v))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        let mut out = Matrix::zeros(self.rows, self.cols());
        for (r, c, v) in self.entries() {
            out.add_at(r, c, f(v));
        }
        out
    }

    pub fn transpose(&self) -> Matrix<R> {
        let mut out = Matrix::zeros(self.cols(), self.rows);
        for (r, c, v) in self.entries() {
            out.add_at(c, r, v.clone());
        }
        out
    }

    /// First entry (column-major) where the two matrices differ.
    pub fn first_difference(&self, other: &Matrix<R>) -> Option<(usize, usize, R, R)> {
        if (self.rows, self.cols()) != (other.rows, other.cols()) {
            return None;
        }
        for c in 0..self.cols() {
            if self.cols[c] == other.cols[c] {
                continue;
            }
            for r in 0..self.rows {
                let (a, b) = (self.get(r, c), other.get(r, c));
                if a != b {
                    return Some((r, c, a, b));
                }
            }
        }
        None
    }

    /// Matrix–vector product with a dense vector.
    pub fn apply(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.cols());
        let mut out = vec![R::zero(); self.rows];
        for (r, c, a) in self.entries() {
            if !v[c].is_zero() {
                out[r] = out[r].add_ref(&a.mul_ref(&v[c]));
            }
        }
        out
    }
}

impl<R: Ring> Coefficient for Matrix<R> {
    fn is_zero(&self) -> bool {
        Matrix::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn scale(&self, by: &Rational) -> Self {
        Matrix::scale(self, by)
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols())?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols())
                .map(|c| self.get(r, c).to_string())
                .collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Determinant of a dense square matrix by exact Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &(&factor * y);
            }
        }
    }
    det
}

/// Value at `0` of the unique polynomial of degree `< points.len()` through
/// the given points (Lagrange form).
pub fn interpolate_at_zero(points: &[(Rational, Rational)]) -> Rational {
    let mut acc = Rational::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut w = yi.clone();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                w = w * xj / (xj - xi);
            }
        }
        acc += &w;
    }
    acc
}
