//! Trigonometric solutions `r(λ; x, y)` of the associative Yang-Baxter equation
//! attached to associative BD data, and exact residual checks.

use num_traits::{One, Zero};

use crate::assoc_bd::{AssocBdData, Pair, Perm};
use crate::error::{Error, Result};
use crate::numerics::{Sampler, Scalar};
use crate::tensor::{Legs, Tensor2};
use crate::{Rational, Tensor2Q, Tensor3Q};

/// A family `r(λ; x, y)` of two-tensors.
pub trait AybeFamily: Sync {
    fn n(&self) -> usize;
    fn eval(&self, lambda: &Rational, x: &Rational, y: &Rational) -> Result<Tensor2Q>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelVariant {
    /// Only the part depending on `σ` and `x / y`.
    Constant,
    /// Including the `τ` tails.
    Full,
}

#[derive(Clone, Debug)]
pub struct AybeKernel {
    pub data: AssocBdData,
    pub variant: KernelVariant,
}

impl AybeKernel {
    pub fn full(data: AssocBdData) -> Self {
        AybeKernel { data, variant: KernelVariant::Full }
    }

    pub fn constant(data: AssocBdData) -> Self {
        AybeKernel { data, variant: KernelVariant::Constant }
    }
}

impl AybeFamily for AybeKernel {
    fn n(&self) -> usize {
        self.data.n()
    }

    fn eval(&self, lambda: &Rational, x: &Rational, y: &Rational) -> Result<Tensor2Q> {
        match self.variant {
            KernelVariant::Full => r_bd_eval(&self.data, lambda, x, y),
            KernelVariant::Constant => {
                check_points(x, y)?;
                r_const_eval(self.data.sigma(), lambda, &(x.clone() / y.clone()))
            }
        }
    }
}

/// Adds a fixed tensor to another family; used to probe the verifiers.
pub struct Shifted<'a, F> {
    pub inner: &'a F,
    pub delta: Tensor2Q,
}

impl<F: AybeFamily> AybeFamily for Shifted<'_, F> {
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn eval(&self, lambda: &Rational, x: &Rational, y: &Rational) -> Result<Tensor2Q> {
        self.inner.eval(lambda, x, y)?.add(&self.delta)
    }
}

fn check_lambda(n: usize, lambda: &Rational) -> Result<()> {
    if lambda.is_zero() || lambda.pow_i(n as i64).is_one() {
        return Err(Error::SingularParameter(format!("lambda^{n} = 1 or lambda = 0 at lambda = {lambda}")));
    }
    Ok(())
}

fn check_points(x: &Rational, y: &Rational) -> Result<()> {
    if x.is_zero() || y.is_zero() || x == y {
        return Err(Error::SingularParameter(format!("points must be distinct and nonzero: {x}, {y}")));
    }
    Ok(())
}

/// The `τ`-free part `r_const(σ, λ, z)`.
pub fn r_const_eval(sigma: &Perm, lambda: &Rational, z: &Rational) -> Result<Tensor2Q> {
    let n = sigma.n();
    check_lambda(n, lambda)?;
    if z.is_one() {
        return Err(Error::SingularParameter("z = 1".into()));
    }
    let one = Rational::one();
    let a = (one.clone() - z.clone()).inv();
    let b = z.clone() * a.clone();
    let cyc = (one - lambda.pow_i(n as i64)).inv();
    let mut r = Tensor2::zeros(n);
    for i in 1..=n {
        for j in (i + 1)..=n {
            r.add_term(a.clone(), j, i, i, j)?;
            r.add_term(b.clone(), i, j, j, i)?;
        }
        r.add_term(a.clone(), i, i, i, i)?;
        let mut target = i;
        let mut lk = Rational::one();
        for _ in 0..n {
            r.add_term(-(cyc.clone() * lk.clone()), i, i, target, target)?;
            target = sigma.apply(target);
            lk *= lambda.clone();
        }
    }
    Ok(r)
}

/// `r(λ; x, y)` for the data: the constant part at `z = x/y` plus the `τ` tails.
pub fn r_bd_eval(data: &AssocBdData, lambda: &Rational, x: &Rational, y: &Rational) -> Result<Tensor2Q> {
    check_points(x, y)?;
    let mut r = r_const_eval(data.sigma(), lambda, &(x.clone() / y.clone()))?;
    let n = data.n();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let alpha: Pair = (i, j);
            let (left, right) = if i < j { (Rational::one(), Rational::one()) } else { (x.clone(), y.clone()) };
            for (k, (p, q)) in data.tau_orbit(alpha).into_iter().enumerate() {
                let lk = lambda.pow_i(k as i64 + 1);
                // e_{-τ^k α} = e_qp
                r.add_term(left.clone() * lk.inv(), q, p, i, j)?;
                r.add_term(-(right.clone() * lk), i, j, q, p)?;
            }
        }
    }
    Ok(r)
}

/// How the multiplicative parameter of `r^{x_a x_b}` is formed from `λ_a`, `λ_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaConvention {
    /// `λ_a⁻¹ λ_b`
    InverseFirst,
    /// `λ_a λ_b⁻¹`
    InverseSecond,
}

/// Default convention. The identity holds for all `λ_a`, so inverting every
/// `λ_a` turns one convention into the other and both verify.
pub const KERNEL_CONVENTION: LambdaConvention = LambdaConvention::InverseFirst;

impl LambdaConvention {
    pub fn ratio(self, la: &Rational, lb: &Rational) -> Rational {
        match self {
            LambdaConvention::InverseFirst => lb.clone() / la.clone(),
            LambdaConvention::InverseSecond => la.clone() / lb.clone(),
        }
    }
}

/// Sample point for the three-point identity.
#[derive(Clone, Debug, PartialEq)]
pub struct AybePoint {
    pub lambdas: [Rational; 3],
    pub ys: [Rational; 3],
}

impl AybePoint {
    pub fn is_admissible(&self, n: usize) -> bool {
        let l = &self.lambdas;
        let y = &self.ys;
        let ratios_ok =
            (0..3).all(|a| (0..3).all(|b| a == b || !(l[a].clone() / l[b].clone()).pow_i(n as i64).is_one()));
        l.iter().all(|v| !v.is_zero())
            && ratios_ok
            && y.iter().all(|v| !v.is_zero())
            && y[0] != y[1]
            && y[1] != y[2]
            && y[0] != y[2]
    }

    pub fn sample(sampler: &mut Sampler, n: usize) -> Result<Self> {
        for _ in 0..1000 {
            let p = AybePoint {
                lambdas: [sampler.rational(|_| false)?, sampler.rational(|_| false)?, sampler.rational(|_| false)?],
                ys: [sampler.rational(|_| false)?, sampler.rational(|_| false)?, sampler.rational(|_| false)?],
            };
            if p.is_admissible(n) {
                return Ok(p);
            }
        }
        Err(Error::Exhaustion(1000))
    }
}

/// Residual of the three-point identity
/// `r^{12}_{13}·r^{23}_{23} + r^{32}_{12}·r^{13}_{13} - r^{13}_{23}·r^{12}_{12}` in legs `13·12`, `23·13`, `12·23`.
pub fn verify_general_aybe<F: AybeFamily>(
    kernel: &F,
    point: &AybePoint,
    convention: LambdaConvention,
) -> Result<Tensor3Q> {
    let n = kernel.n();
    if !point.is_admissible(n) {
        return Err(Error::SingularParameter("inadmissible sample point".into()));
    }
    let l = &point.lambdas;
    let y = &point.ys;
    // r^{x_a x_b}_{y_c y_d}, 1-based labels
    let r = |a: usize, b: usize, c: usize, d: usize| -> Result<Tensor2Q> {
        kernel.eval(&convention.ratio(&l[a - 1], &l[b - 1]), &y[c - 1], &y[d - 1])
    };
    let t1 = r(1, 2, 1, 3)?.leg_embed(Legs::L13).mul(&r(2, 3, 2, 3)?.leg_embed(Legs::L12))?;
    let t2 = r(3, 2, 1, 2)?.leg_embed(Legs::L23).mul(&r(1, 3, 1, 3)?.leg_embed(Legs::L13))?;
    let t3 = r(1, 3, 2, 3)?.leg_embed(Legs::L12).mul(&r(1, 2, 1, 2)?.leg_embed(Legs::L23))?;
    t1.add(&t2)?.sub(&t3)
}

/// `r(λ; y₁, y₂)^{21} + r(λ⁻¹; y₂, y₁)`.
pub fn verify_skew<F: AybeFamily>(kernel: &F, lambda: &Rational, y1: &Rational, y2: &Rational) -> Result<Tensor2Q> {
    let a = kernel.eval(lambda, y1, y2)?.swap_factors();
    let b = kernel.eval(&lambda.inv(), y2, y1)?;
    a.add(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc_bd::{Normalization, RawBdData};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn example() -> AssocBdData {
        let raw = RawBdData::parse(6, "(136245)", "{(6,1),(1,2)}", "{(2,3),(3,4)}").unwrap();
        AssocBdData::validate(&raw, Normalization::AsGiven).unwrap()
    }

    #[test]
    fn lambda_root_of_unity_rejected() {
        let s = Perm::parse_cycles("(12)", 2).unwrap();
        assert!(matches!(r_const_eval(&s, &q(-1, 1), &q(2, 1)), Err(Error::SingularParameter(_))));
    }

    #[test]
    fn example_tail_terms() {
        let d = example();
        let (l, x, y) = (q(2, 1), q(3, 1), q(5, 1));
        let tails = r_bd_eval(&d, &l, &x, &y)
            .unwrap()
            .sub(&r_const_eval(d.sigma(), &l, &(x.clone() / y.clone())).unwrap())
            .unwrap();
        let expected = Tensor2::from_terms(
            6,
            &[
                (q(1, 2), 4, 3, 1, 2),
                (q(-2, 1), 1, 2, 4, 3),
                (q(3, 2), 3, 2, 6, 1),
                (q(3, 2), 4, 2, 6, 2),
                (q(-10, 1), 6, 1, 3, 2),
                (q(-10, 1), 6, 2, 4, 2),
            ],
        )
        .unwrap();
        assert_eq!(tails, expected);
    }
}
