use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Field element usable by the linear algebra, polynomial and series kernels.
///
/// Exact fields decide zero-ness exactly; floating types use a small absolute
/// tolerance, which is enough for exploratory runs but never for verification.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    /// Larger means a preferable elimination pivot. Only called on non-negligible values.
    fn pivot_score(&self) -> f64;

    fn from_i64(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    fn pow_i(&self, e: i64) -> Self {
        let mut base = if e < 0 { Self::one() / self.clone() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            k >>= 1;
        }
        acc
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Scalar for BigRational {
    fn pivot_score(&self) -> f64 {
        // prefer short numerators and denominators to limit coefficient growth
        -((self.numer().bits() + self.denom().bits()) as f64)
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            fn is_negligible(&self) -> bool {
                self.abs() < $tol
            }
            fn pivot_score(&self) -> f64 {
                self.abs().to_f64().unwrap_or(0.0)
            }
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        }
    };
}

float_scalar!(f64, 1e-10);
float_scalar!(f32, 1e-5);

/// Renders a rational as `p/q` (or `p` for integers).
pub fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `p/q` or a signed variant of either.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}
