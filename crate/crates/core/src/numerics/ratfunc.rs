use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::scalar::Scalar;
use super::series::TruncSeries;
use crate::error::{Error, Result};

/// Point of the projective line.
#[derive(Clone, Debug, PartialEq)]
pub enum Point<T> {
    Finite(T),
    Infinity,
}

/// Reduced rational function `num / den` with `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<T> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: Scalar> RatFunc<T> {
    pub fn new(num: Poly<T>, den: Poly<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivision("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero_fn());
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g)?.0;
        let den = den.div_rem(&g)?.0;
        let lead = den.leading().expect("nonzero").inv();
        Ok(RatFunc { num: num.scale(&lead), den: den.scale(&lead) })
    }

    fn zero_fn() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::constant(T::one()) }
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        RatFunc { num: p, den: Poly::constant(T::one()) }
    }

    pub fn constant(c: T) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The coordinate function `x`.
    pub fn var() -> Self {
        Self::from_poly(Poly::monomial(T::one(), 1))
    }

    pub fn numer(&self) -> &Poly<T> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<T> {
        &self.den
    }

    pub fn is_zero_fn(&self) -> bool {
        self.num.is_zero()
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        if e < 0 {
            if self.is_zero_fn() {
                return Err(Error::ZeroDivision("negative power of zero".into()));
            }
            let inv = RatFunc { num: self.den.clone(), den: self.num.clone() };
            let inv = Self::new(inv.num, inv.den)?;
            return Ok(inv.powi_nonneg(e.unsigned_abs() as usize));
        }
        Ok(self.powi_nonneg(e as usize))
    }

    fn powi_nonneg(&self, e: usize) -> Self {
        RatFunc { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn eval(&self, p: &Point<T>) -> Result<T> {
        match p {
            Point::Finite(a) => {
                let d = self.den.eval(a);
                if d.is_negligible() {
                    return Err(Error::Pole(format!("pole at {a:?}")));
                }
                Ok(self.num.eval(a) / d)
            }
            Point::Infinity => {
                let dn = self.num.degree();
                let dd = self.den.degree().expect("nonzero denominator");
                match dn {
                    None => Ok(T::zero()),
                    Some(k) if k > dd => Err(Error::Pole("pole at infinity".into())),
                    Some(k) if k == dd => Ok(self.num.coeffs()[k].clone() / self.den.coeffs()[dd].clone()),
                    Some(_) => Ok(T::zero()),
                }
            }
        }
    }

    /// Pole order at `p`; negative values are zero orders.
    pub fn pole_order(&self, p: &Point<T>) -> Result<i64> {
        if self.is_zero_fn() {
            return Err(Error::ZeroFunction);
        }
        Ok(match p {
            Point::Finite(a) => self.den.root_multiplicity(a) as i64 - self.num.root_multiplicity(a) as i64,
            Point::Infinity => self.num.degree().expect("nonzero") as i64 - self.den.degree().expect("nonzero") as i64,
        })
    }

    /// Laurent expansion in `s = x - a`, known through `s^(prec-1)`.
    pub fn expand_at(&self, a: &T, prec: i64) -> Result<TruncSeries<T>> {
        let num = self.num.shift(a);
        let den = self.den.shift(a);
        // dividing by u^v costs v terms of relative precision
        let span = prec + 2 * den.root_multiplicity(&T::zero()) as i64 + 1;
        let n = TruncSeries::from_poly(&num, span);
        let d = TruncSeries::from_poly(&den, span);
        Ok(n.div(&d)?.truncate(prec))
    }

    /// Residue of `f(x) dx` at a finite point.
    pub fn residue(&self, a: &T) -> Result<T> {
        Ok(self.expand_at(a, 0)?.coeff(-1))
    }

    /// `f(x^k)`, used to pass between a variable and its `k`-th power.
    pub fn subs_power(&self, k: usize) -> Self {
        let mono = Poly::monomial(T::one(), k);
        Self::new(self.num.compose(&mono), self.den.compose(&mono)).expect("nonzero denominator")
    }

    /// Reverse of [`subs_power`](Self::subs_power): writes `g(y) = y^e · f(y^k)` with `0 <= e < k`.
    pub fn split_power(&self, k: usize) -> Option<(i64, Self)> {
        if self.is_zero_fn() {
            return Some((0, Self::zero_fn()));
        }
        let residue_class = |p: &Poly<T>| -> Option<usize> {
            let exps: Vec<usize> =
                p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_negligible()).map(|(e, _)| e).collect();
            let low = exps[0];
            exps.iter().all(|e| (e - low).is_multiple_of(k)).then_some(low)
        };
        let ln = residue_class(&self.num)?;
        let ld = residue_class(&self.den)?;
        let shrink = |p: &Poly<T>, low: usize| -> Poly<T> {
            Poly::new(p.coeffs().iter().skip(low).step_by(k).cloned().collect())
        };
        let shift = ln as i64 - ld as i64;
        let e = shift.rem_euclid(k as i64);
        let f = Self::new(shrink(&self.num, ln), shrink(&self.den, ld)).expect("nonzero denominator");
        let f = f * Self::var().powi((shift - e) / k as i64).expect("x is invertible");
        Some((e, f))
    }
}

impl<T: Scalar> Zero for RatFunc<T> {
    fn zero() -> Self {
        Self::zero_fn()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<T: Scalar> One for RatFunc<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Scalar> Add for RatFunc<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den).expect("nonzero");
        }
        Self::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).expect("nonzero")
    }
}

impl<T: Scalar> Sub for RatFunc<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Scalar> Mul for RatFunc<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero_fn() || o.is_zero_fn() {
            return Self::zero_fn();
        }
        Self::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero")
    }
}

impl<T: Scalar> Div for RatFunc<T> {
    type Output = Self;
    /// Panics on division by the zero function; use [`RatFunc::powi`] for a checked inverse.
    fn div(self, o: Self) -> Self {
        assert!(!o.is_zero_fn(), "division by the zero rational function");
        Self::new(&self.num * &o.den, &self.den * &o.num).expect("nonzero")
    }
}

impl<T: Scalar> Neg for RatFunc<T> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc { num: -&self.num, den: self.den }
    }
}

impl<T: Scalar> Scalar for RatFunc<T> {
    fn is_negligible(&self) -> bool {
        self.num.is_zero()
    }
    fn pivot_score(&self) -> f64 {
        -((self.num.coeffs().len() + self.den.coeffs().len()) as f64)
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(T::from_i64(v))
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for RatFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return write!(f, "{}", self.num);
        }
        // recognise (x - a)^k
        let k = self.den.degree().unwrap_or(0);
        let a = -(self.den.coeff(k - 1) / T::from_i64(k as i64));
        let shift = Poly::linear_root(a.clone());
        let den = if shift.pow(k) == self.den && k > 0 {
            let base = format!("({})", shift);
            if k == 1 {
                base
            } else {
                format!("{base}^{k}")
            }
        } else {
            format!("({})", self.den)
        };
        write!(f, "({})/{den}", self.num)
    }
}
