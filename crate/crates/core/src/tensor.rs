//! Two- and three-fold tensor powers of `Mat_n` as Kronecker-indexed matrices.
//!
//! `e_ij ⊗ e_kl` sits at row `i·n + k`, column `j·n + l` (0-based), so tensor
//! multiplication is ordinary matrix multiplication.

use crate::error::{Error, Result};
use crate::numerics::{Matrix, Scalar};

/// Which two of the three factors a two-tensor occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Legs {
    L12,
    L13,
    L23,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor2<T> {
    n: usize,
    mat: Matrix<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3<T> {
    n: usize,
    mat: Matrix<T>,
}

/// Matrix unit `e_ij` (1-based indices).
pub fn unit<T: Scalar>(n: usize, i: usize, j: usize) -> Matrix<T> {
    let mut m = Matrix::zeros(n, n);
    m.set(i - 1, j - 1, T::one());
    m
}

fn check_index(n: usize, idx: &[usize]) -> Result<()> {
    match idx.iter().find(|&&i| i == 0 || i > n) {
        Some(bad) => Err(Error::Index(format!("index {bad} outside 1..={n}"))),
        None => Ok(()),
    }
}

impl<T: Scalar> Tensor2<T> {
    pub fn zeros(n: usize) -> Self {
        Tensor2 { n, mat: Matrix::zeros(n * n, n * n) }
    }

    /// Sum of `c · e_ij ⊗ e_kl` over `(c, i, j, k, l)` with 1-based indices.
    pub fn from_terms(n: usize, terms: &[(T, usize, usize, usize, usize)]) -> Result<Self> {
        let mut t = Self::zeros(n);
        for (c, i, j, k, l) in terms {
            t.add_term(c.clone(), *i, *j, *k, *l)?;
        }
        Ok(t)
    }

    pub fn add_term(&mut self, c: T, i: usize, j: usize, k: usize, l: usize) -> Result<()> {
        check_index(self.n, &[i, j, k, l])?;
        let n = self.n;
        self.mat.add_at((i - 1) * n + (k - 1), (j - 1) * n + (l - 1), c);
        Ok(())
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize, l: usize) -> Result<T> {
        check_index(self.n, &[i, j, k, l])?;
        let n = self.n;
        Ok(self.mat.get((i - 1) * n + (k - 1), (j - 1) * n + (l - 1)).clone())
    }

    /// `a ⊗ b`.
    pub fn outer(a: &Matrix<T>, b: &Matrix<T>) -> Self {
        let n = a.rows();
        let mut t = Self::zeros(n);
        for (i, j, va) in a.nonzeros() {
            for (k, l, vb) in b.nonzeros() {
                t.mat.add_at(i * n + k, j * n + l, va.clone() * vb.clone());
            }
        }
        t
    }

    pub fn from_matrix(n: usize, mat: Matrix<T>) -> Result<Self> {
        if mat.rows() != n * n || mat.cols() != n * n {
            return Err(Error::Shape(format!("expected {0}x{0}", n * n)));
        }
        Ok(Tensor2 { n, mat })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.mat
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// Nonzero terms as `(c, i, j, k, l)`, 1-based.
    pub fn terms(&self) -> Vec<(T, usize, usize, usize, usize)> {
        let n = self.n;
        self.mat.nonzeros().map(|(r, c, v)| (v.clone(), r / n + 1, c / n + 1, r % n + 1, c % n + 1)).collect()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        Ok(Tensor2 { n: self.n, mat: self.mat.try_add(&o.mat)? })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        Ok(Tensor2 { n: self.n, mat: self.mat.try_sub(&o.mat)? })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        Ok(Tensor2 { n: self.n, mat: self.mat.try_mul(&o.mat)? })
    }

    pub fn scale(&self, c: &T) -> Self {
        Tensor2 { n: self.n, mat: self.mat.scale(c) }
    }

    /// `a ⊗ b ↦ b ⊗ a`.
    pub fn swap_factors(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for (r, c, v) in self.mat.nonzeros() {
            let (i, k, j, l) = (r / n, r % n, c / n, c % n);
            out.mat.set(k * n + i, l * n + j, v.clone());
        }
        out
    }

    pub fn leg_embed(&self, legs: Legs) -> Tensor3<T> {
        let n = self.n;
        let mut out = Tensor3::zeros(n);
        for (r, c, v) in self.mat.nonzeros() {
            let (i, k, j, l) = (r / n, r % n, c / n, c % n);
            for q in 0..n {
                let (row, col) = match legs {
                    Legs::L12 => ((i * n + k) * n + q, (j * n + l) * n + q),
                    Legs::L13 => ((i * n + q) * n + k, (j * n + q) * n + l),
                    Legs::L23 => ((q * n + i) * n + k, (q * n + j) * n + l),
                };
                out.mat.set(row, col, v.clone());
            }
        }
        out
    }

    /// `((v, ·) ⊗ id)(self)` for the trace pairing `(v, w) = tr(v w)`.
    pub fn contract_first(&self, v: &Matrix<T>) -> Matrix<T> {
        let n = self.n;
        let mut out = Matrix::zeros(n, n);
        for (r, c, val) in self.mat.nonzeros() {
            let (i, k, j, l) = (r / n, r % n, c / n, c % n);
            let w = v.get(j, i);
            if !w.is_negligible() {
                out.add_at(k, l, val.clone() * w.clone());
            }
        }
        out
    }

    /// Applies `f ⊗ id` for a linear map `f` on `Mat_n`.
    pub fn map_first(&self, f: impl Fn(&Matrix<T>) -> Matrix<T>) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for (r, c, v) in self.mat.nonzeros() {
            let (i, k, j, l) = (r / n, r % n, c / n, c % n);
            let img = f(&unit(n, i + 1, j + 1));
            for (a, b, w) in img.nonzeros() {
                out.mat.add_at(a * n + k, b * n + l, v.clone() * w.clone());
            }
        }
        out
    }

    /// Applies `id ⊗ f` for a linear map `f` on `Mat_n`.
    pub fn map_second(&self, f: impl Fn(&Matrix<T>) -> Matrix<T>) -> Self {
        self.swap_factors().map_first(f).swap_factors()
    }
}

impl<T: Scalar> Tensor3<T> {
    pub fn zeros(n: usize) -> Self {
        let d = n * n * n;
        Tensor3 { n, mat: Matrix::zeros(d, d) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.mat
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// Coefficient of `e_ij ⊗ e_kl ⊗ e_pq` (1-based).
    pub fn coeff(&self, ij: (usize, usize), kl: (usize, usize), pq: (usize, usize)) -> Result<T> {
        check_index(self.n, &[ij.0, ij.1, kl.0, kl.1, pq.0, pq.1])?;
        let n = self.n;
        let row = ((ij.0 - 1) * n + kl.0 - 1) * n + pq.0 - 1;
        let col = ((ij.1 - 1) * n + kl.1 - 1) * n + pq.1 - 1;
        Ok(self.mat.get(row, col).clone())
    }

    /// Nonzero terms as `(c, [i, j, k, l, p, q])`, 1-based.
    pub fn terms(&self) -> Vec<(T, [usize; 6])> {
        let n = self.n;
        self.mat
            .nonzeros()
            .map(|(r, c, v)| {
                let idx = [r / (n * n) + 1, c / (n * n) + 1, (r / n) % n + 1, (c / n) % n + 1, r % n + 1, c % n + 1];
                (v.clone(), idx)
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        Ok(Tensor3 { n: self.n, mat: self.mat.try_add(&o.mat)? })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        Ok(Tensor3 { n: self.n, mat: self.mat.try_sub(&o.mat)? })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        Ok(Tensor3 { n: self.n, mat: self.mat.try_mul(&o.mat)? })
    }

    /// `[a, b] = ab - ba`.
    pub fn bracket(&self, o: &Self) -> Result<Self> {
        self.mul(o)?.sub(&o.mul(self)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn term_roundtrip_and_layout() {
        let t = Tensor2::from_terms(3, &[(q(2), 1, 2, 3, 1)]).unwrap();
        assert_eq!(t.coeff(1, 2, 3, 1).unwrap(), q(2));
        assert_eq!(*t.matrix().get(2, 3), q(2));
    }

    #[test]
    fn leg_13_places_identity_in_the_middle() {
        let t = Tensor2::from_terms(2, &[(q(1), 1, 2, 2, 1)]).unwrap();
        let e = t.leg_embed(Legs::L13);
        assert_eq!(e.coeff((1, 2), (1, 1), (2, 1)).unwrap(), q(1));
        assert_eq!(e.coeff((1, 2), (2, 2), (2, 1)).unwrap(), q(1));
        assert_eq!(e.terms().len(), 2);
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        assert!(matches!(Tensor2::from_terms(2, &[(q(1), 3, 1, 1, 1)]), Err(Error::Index(_))));
    }

    #[test]
    fn contraction_picks_dual_coefficient() {
        // (e_21, ·) reads the e_12 coefficient of the first leg
        let t = Tensor2::from_terms(2, &[(q(5), 1, 2, 2, 2), (q(3), 2, 1, 1, 1)]).unwrap();
        let c = t.contract_first(&unit(2, 2, 1));
        assert_eq!(*c.get(1, 1), q(5));
        assert_eq!(*c.get(0, 0), q(0));
    }
}
