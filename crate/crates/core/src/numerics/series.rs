use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Truncated Laurent series `Σ_{k=low}^{prec-1} c_k t^k + O(t^prec)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<T> {
    low: i64,
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncSeries<T> {
    /// Series with the given coefficients starting at `t^low`; the precision is `low + len`.
    pub fn from_coeffs(low: i64, coeffs: Vec<T>) -> Self {
        let mut s = TruncSeries { low, coeffs };
        s.normalize();
        s
    }

    /// `O(t^prec)`.
    pub fn zero(prec: i64) -> Self {
        TruncSeries { low: prec, coeffs: Vec::new() }
    }

    pub fn from_poly(p: &Poly<T>, prec: i64) -> Self {
        let len = prec.max(0) as usize;
        Self::from_coeffs(0, (0..len).map(|k| p.coeff(k)).collect())
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_negligible()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    /// Lowest exponent with a possibly nonzero coefficient.
    pub fn order_low(&self) -> i64 {
        self.low
    }

    /// Exponent of the error term.
    pub fn precision(&self) -> i64 {
        self.low + self.coeffs.len() as i64
    }

    /// Valuation, or `None` when the series vanishes to its precision.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn coeff(&self, k: i64) -> T {
        if k < self.low || k >= self.precision() {
            return T::zero();
        }
        self.coeffs[(k - self.low) as usize].clone()
    }

    pub fn truncate(&self, prec: i64) -> Self {
        let keep = (prec - self.low).clamp(0, self.coeffs.len() as i64) as usize;
        if prec <= self.low {
            return Self::zero(prec);
        }
        Self::from_coeffs(self.low, self.coeffs[..keep].to_vec())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|v| v.clone() * c.clone()).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = self.precision().min(o.precision());
        let low = self.low.min(o.low).min(prec);
        Self::from_coeffs(low, (low..prec).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-T::one()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let prec = (self.low + o.precision()).min(o.low + self.precision());
        let low = (self.low + o.low).min(prec);
        let len = (prec - low) as usize;
        let mut out = vec![T::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_negligible() || i >= len {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(len - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(low, out)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.coeffs.is_empty() {
            return Err(Error::ZeroDivision("series vanishes to its precision".into()));
        }
        let rel = self.coeffs.len();
        let a0_inv = self.coeffs[0].inv();
        let mut out: Vec<T> = Vec::with_capacity(rel);
        out.push(a0_inv.clone());
        for k in 1..rel {
            let s = (1..=k).fold(T::zero(), |acc, i| acc + self.coeffs[i].clone() * out[k - i].clone());
            out.push(-(s * a0_inv.clone()));
        }
        Ok(Self::from_coeffs(-self.low, out))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    /// Evaluates a polynomial at this series by Horner's rule.
    pub fn eval_poly(&self, p: &Poly<T>, prec: i64) -> Self {
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(prec), |acc, c| acc.mul(self).add(&Self::from_coeffs(0, vec![c.clone()]).pad(prec)))
    }

    /// Extends a series that is exact (finitely many terms) to precision `prec`.
    fn pad(mut self, prec: i64) -> Self {
        if self.coeffs.is_empty() {
            return Self::zero(prec);
        }
        while self.precision() < prec {
            self.coeffs.push(T::zero());
        }
        self
    }
}

/// `exp(c·t)` through `t^n`.
pub fn exp_series<T: Scalar>(c: &T, n: usize) -> TruncSeries<T> {
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut term = T::one();
    coeffs.push(term.clone());
    for k in 1..=n {
        term = term * c.clone() / T::from_i64(k as i64);
        coeffs.push(term.clone());
    }
    TruncSeries::from_coeffs(0, coeffs)
}

/// Expands `f(s(t))` through `t^n`.
///
/// `s` must carry enough precision for the requested order once any pole of
/// `f ∘ s` at `t = 0` is divided out; the result precision is reported honestly.
pub fn compose_ratfunc_series<T: Scalar>(f: &RatFunc<T>, s: &TruncSeries<T>, n: i64) -> Result<TruncSeries<T>> {
    let prec = s.precision();
    let num = s.eval_poly(f.numer(), prec);
    let den = s.eval_poly(f.denom(), prec);
    if den.valuation().is_none() {
        return Err(Error::ZeroDivision("denominator vanishes to the truncation order".into()));
    }
    Ok(num.div(&den)?.truncate(n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn exp_coefficients() {
        let e = exp_series(&q(1, 1), 4);
        assert_eq!(e.coeff(3), q(1, 6));
        assert_eq!(e.coeff(4), q(1, 24));
        assert_eq!(e.precision(), 5);
    }

    #[test]
    fn inverse_of_laurent_series() {
        // t - t^2 has inverse t^{-1} + 1 + t + ...
        let s = TruncSeries::from_coeffs(1, vec![q(1, 1), q(-1, 1), q(0, 1), q(0, 1)]);
        let inv = s.inv().unwrap();
        assert_eq!(inv.order_low(), -1);
        assert_eq!(inv.coeff(-1), q(1, 1));
        assert_eq!(inv.coeff(0), q(1, 1));
        assert_eq!(inv.coeff(1), q(1, 1));
    }

    #[test]
    fn zero_series_cannot_be_inverted() {
        assert!(TruncSeries::<Rational>::zero(4).inv().is_err());
    }
}
