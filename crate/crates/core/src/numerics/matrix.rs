use std::fmt;

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Scalar`] field.
///
/// Multiplication skips zero entries, so the very sparse operators produced by
/// leg embeddings stay cheap even at `n³ × n³`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: T) {
        let slot = &mut self.data[i * self.cols + j];
        *slot = slot.clone() + v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_negligible)
    }

    /// Non-negligible entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let cols = self.cols;
        self.data.iter().enumerate().filter(|(_, v)| !v.is_negligible()).map(move |(k, v)| (k / cols, k % cols, v))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v.clone() * c.clone()).collect() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip(other, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip(other, |a, b| a.clone() - b.clone()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let row_support: Vec<Vec<usize>> =
            (0..other.rows).map(|k| (0..other.cols).filter(|&j| !other.get(k, j).is_negligible()).collect()).collect();
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, support) in row_support.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_negligible() {
                    continue;
                }
                for &j in support {
                    out.add_at(i, j, a.clone() * other.get(k, j).clone());
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_negligible() && !b.is_negligible())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    fn zip(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Eliminates using only the first `limit` columns as pivot candidates.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows).filter(|&i| !self.get(i, c).is_negligible()).max_by(|&a, &b| {
                self.get(a, c)
                    .pivot_score()
                    .partial_cmp(&self.get(b, c).pivot_score())
                    .unwrap_or(std::cmp::Ordering::Equal)
                    .then(b.cmp(&a))
            });
            let Some(p) = best else { continue };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inv();
            for j in c..self.cols {
                let v = self.get(r, j).clone();
                if !v.is_negligible() {
                    self.set(r, j, v * inv.clone());
                }
            }
            self.set(r, c, T::one());
            let pivot_row: Vec<(usize, T)> = (c..self.cols)
                .filter(|&j| !self.get(r, j).is_negligible())
                .map(|j| (j, self.get(r, j).clone()))
                .collect();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_negligible() {
                    continue;
                }
                for (j, pv) in &pivot_row {
                    let v = self.get(i, *j).clone() - f.clone() * pv.clone();
                    self.set(i, *j, v);
                }
                self.set(i, c, T::zero());
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical nullspace basis read off the reduced echelon form.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        nullspace_from_rref(&r, &pivots, self.cols)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return Err(Error::ZeroDivision("singular matrix".into()));
        }
        Ok(Self::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
    }
}

fn nullspace_from_rref<T: Scalar>(r: &Matrix<T>, pivots: &[usize], ncols: usize) -> Vec<Vec<T>> {
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); ncols];
            v[f] = T::one();
            for (row, &pc) in pivots.iter().enumerate() {
                let e = r.get(row, f);
                if !e.is_negligible() {
                    v[pc] = -e.clone();
                }
            }
            v
        })
        .collect()
}

/// Affine solution set of `A v = b`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSolution<T> {
    /// Free variables set to zero; `None` when the system is inconsistent.
    pub particular: Option<Vec<T>>,
    pub nullspace: Vec<Vec<T>>,
}

impl<T: Scalar> LinearSolution<T> {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }
}

/// Solves `A v = b` exactly by Gauss-Jordan elimination.
pub fn solve_linear<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Result<LinearSolution<T>> {
    if b.len() != a.rows() {
        return Err(Error::Shape(format!("rhs length {} for {} rows", b.len(), a.rows())));
    }
    let n = a.cols();
    let mut aug = Matrix::from_fn(a.rows(), n + 1, |i, j| if j < n { a.get(i, j).clone() } else { b[i].clone() });
    let pivots = aug.rref_in_place(n);
    let consistent = (pivots.len()..aug.rows()).all(|i| aug.get(i, n).is_negligible());
    let particular = consistent.then(|| {
        let mut v = vec![T::zero(); n];
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = aug.get(row, n).clone();
        }
        v
    });
    Ok(LinearSolution { particular, nullspace: nullspace_from_rref(&aug, &pivots, n) })
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}
