//! Trigonometric solutions of the classical Yang-Baxter equation for `sl_n`
//! with the Coxeter grading, built from Belavin-Drinfeld triples on the
//! affine Dynkin cycle.
//!
//! Simple weights are indexed `1..=n`; weight `a` has root vector `e_{a, a+1}`
//! (with `e_{n,1}` for `a = n`). A chain of consecutive simple weights starting
//! at `a` of length `L` has root vector `e_{a, a+L}` (indices mod `n`).

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::assoc_bd::{parse_pairs, Pair};
use crate::error::{Error, Result};
use crate::numerics::{compose_ratfunc_series, exp_series, solve_linear, Matrix, RatFunc, Sampler, Scalar};
use crate::tensor::{unit, Legs, Tensor2};
use crate::{MatQ, RatFuncQ, Rational, Tensor2Q, Tensor3Q};

/// `sl_n` with grading `deg e_ik = (k - i) mod n`; the Coxeter number is `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coxeter {
    n: usize,
}

fn wrap(n: usize, i: usize) -> usize {
    (i - 1) % n + 1
}

impl Coxeter {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Index(format!("sl_n needs n >= 2, got {n}")));
        }
        Ok(Coxeter { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> usize {
        self.n
    }

    pub fn grade(&self, (i, k): Pair) -> usize {
        (k + self.n - i) % self.n
    }

    /// Matrix units spanning `g_j` for `j ≢ 0`.
    pub fn root_units(&self, j: usize) -> Vec<Pair> {
        let n = self.n;
        let j = j % n;
        if j == 0 {
            return Vec::new();
        }
        (1..=n).map(|i| (i, wrap(n, i + j))).collect()
    }

    /// Root vector of the simple weight `a`.
    pub fn simple_unit(&self, a: usize) -> Pair {
        (a, wrap(self.n, a + 1))
    }

    /// Basis `h_a - h_{a+1}`, `1 <= a < n`, of the Cartan subalgebra.
    pub fn cartan_basis(&self) -> Vec<MatQ> {
        (1..self.n)
            .map(|a| unit::<Rational>(self.n, a, a).try_sub(&unit(self.n, a + 1, a + 1)).expect("square"))
            .collect()
    }

    /// Value of the simple weight `a` on a diagonal matrix.
    pub fn weight(&self, a: usize, h: &MatQ) -> Rational {
        let b = wrap(self.n, a + 1);
        h.get(a - 1, a - 1).clone() - h.get(b - 1, b - 1).clone()
    }

    fn cartan_gram(&self) -> MatQ {
        let basis = self.cartan_basis();
        Matrix::from_fn(basis.len(), basis.len(), |a, b| trace_pair(&basis[a], &basis[b]))
    }

    /// Element `H_μ` of the Cartan subalgebra with `tr(H_μ H) = μ(H)`, for `μ` the simple weight `a`.
    pub fn coroot(&self, a: usize) -> MatQ {
        let basis = self.cartan_basis();
        let values: Vec<Rational> = basis.iter().map(|x| self.weight(a, x)).collect();
        let coords = solve_linear(&self.cartan_gram(), &values)
            .expect("square system")
            .particular
            .expect("trace form is nondegenerate on the Cartan subalgebra");
        combine(&basis, &coords)
    }

    /// Gram matrix of the simple weights under the form induced by the trace.
    pub fn gram(&self) -> MatQ {
        let co: Vec<MatQ> = (1..=self.n).map(|a| self.coroot(a)).collect();
        Matrix::from_fn(self.n, self.n, |a, b| trace_pair(&co[a], &co[b]))
    }

    /// `Ω_j = Σ e_ik ⊗ e_ki` over `deg e_ik = j`; `Ω₀` from dual bases of the Cartan subalgebra.
    pub fn omega(&self, j: usize) -> Tensor2Q {
        let n = self.n;
        let j = j % n;
        if j == 0 {
            let basis = self.cartan_basis();
            let gram_inv = self.cartan_gram().inverse().expect("nondegenerate");
            let mut t = Tensor2::zeros(n);
            for (a, xa) in basis.iter().enumerate() {
                let coords: Vec<Rational> = (0..basis.len()).map(|b| gram_inv.get(a, b).clone()).collect();
                let dual = combine(&basis, &coords);
                t = t.add(&Tensor2::outer(xa, &dual)).expect("same n");
            }
            return t;
        }
        let terms: Vec<_> = self.root_units(j).into_iter().map(|(i, k)| (Rational::one(), i, k, k, i)).collect();
        Tensor2::from_terms(n, &terms).expect("indices in range")
    }

    /// The Casimir element `Σ_j Ω_j`.
    pub fn casimir(&self) -> Tensor2Q {
        (0..self.n).fold(Tensor2::zeros(self.n), |acc, j| acc.add(&self.omega(j)).expect("same n"))
    }
}

fn trace_pair(a: &MatQ, b: &MatQ) -> Rational {
    a.nonzeros().fold(Rational::zero(), |acc, (i, j, v)| acc + v.clone() * b.get(j, i).clone())
}

fn combine(basis: &[MatQ], coords: &[Rational]) -> MatQ {
    let n = basis[0].rows();
    basis.iter().zip(coords).fold(MatQ::zeros(n, n), |acc, (x, c)| acc.try_add(&x.scale(c)).expect("same shape"))
}

/// Unvalidated triple input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawLieTriple {
    pub n: usize,
    pub gamma1: Vec<usize>,
    pub gamma2: Vec<usize>,
    pub tau: Vec<(usize, usize)>,
}

impl RawLieTriple {
    /// Parses comma separated weight lists and a pair list such as `(1,2),(2,3)`.
    pub fn parse(n: usize, gamma1: &str, gamma2: &str, tau: &str) -> Result<Self> {
        let list = |s: &str| -> Result<Vec<usize>> {
            s.split(|c: char| !c.is_ascii_digit())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad weight {t:?}"))))
                .collect()
        };
        Ok(RawLieTriple { n, gamma1: list(gamma1)?, gamma2: list(gamma2)?, tau: parse_pairs(tau)? })
    }
}

/// Validated BD triple `(Γ₁, Γ₂, τ)` on the affine cycle of `sl_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieBdTriple {
    cox: Coxeter,
    gamma1: BTreeSet<usize>,
    gamma2: BTreeSet<usize>,
    tau: BTreeMap<usize, usize>,
    /// Extension of `τ` to chains: root vector ↦ (root vector, sign).
    tau_ext: BTreeMap<Pair, (Pair, i8)>,
}

/// Sign convention for `τ` on root vectors of chains whose orientation it reverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainSigns {
    /// Images are matrix units with coefficient one.
    MatrixUnits,
    /// Images follow the Lie isomorphism generated by the simple root vectors.
    Bracket,
}

impl LieBdTriple {
    pub fn validate(raw: &RawLieTriple) -> Result<Self> {
        Self::validate_with(raw, ChainSigns::Bracket)
    }

    pub fn validate_with(raw: &RawLieTriple, signs: ChainSigns) -> Result<Self> {
        let cox = Coxeter::new(raw.n)?;
        let n = raw.n;
        let in_range = |v: &usize| (1..=n).contains(v);
        if let Some(bad) = raw.gamma1.iter().chain(&raw.gamma2).find(|v| !in_range(v)) {
            return Err(Error::Index(format!("weight {bad} outside 1..={n}")));
        }
        let gamma1: BTreeSet<usize> = raw.gamma1.iter().copied().collect();
        let gamma2: BTreeSet<usize> = raw.gamma2.iter().copied().collect();
        let tau: BTreeMap<usize, usize> = raw.tau.iter().copied().collect();
        let domain: BTreeSet<usize> = tau.keys().copied().collect();
        let image: BTreeSet<usize> = tau.values().copied().collect();
        if domain != gamma1 || image != gamma2 || tau.len() != raw.tau.len() || image.len() != tau.len() {
            return Err(Error::Index(format!("tau {:?} is not a bijection gamma1 -> gamma2", raw.tau)));
        }
        let gram = cox.gram();
        for (&a, &ta) in &tau {
            for (&b, &tb) in &tau {
                if gram.get(a - 1, b - 1) != gram.get(ta - 1, tb - 1) {
                    return Err(Error::GramViolation(format!("({a},{b}) -> ({ta},{tb})")));
                }
            }
        }
        for &a in &gamma1 {
            let mut cur = a;
            let mut steps = 0;
            while let Some(&next) = tau.get(&cur) {
                cur = next;
                steps += 1;
                if steps > n {
                    return Err(Error::NotNilpotentTau(format!("orbit of {a} does not leave gamma1")));
                }
            }
        }
        let mut triple = LieBdTriple { cox, gamma1, gamma2, tau, tau_ext: BTreeMap::new() };
        triple.tau_ext = triple.extend_tau(signs)?;
        Ok(triple)
    }

    /// Consecutive runs of weights in `gamma` as `(start, length)`.
    fn chains(n: usize, gamma: &BTreeSet<usize>) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &a in gamma {
            let mut len = 0;
            while len < n - 1 && gamma.contains(&wrap(n, a + len)) {
                len += 1;
                out.push((a, len));
            }
        }
        out
    }

    fn extend_tau(&self, signs: ChainSigns) -> Result<BTreeMap<Pair, (Pair, i8)>> {
        let n = self.cox.n;
        let mut ext = BTreeMap::new();
        for (a, len) in Self::chains(n, &self.gamma1) {
            let imgs: Vec<usize> = (0..len).map(|k| self.tau[&wrap(n, a + k)]).collect();
            let forward = (1..len).all(|k| imgs[k] == wrap(n, imgs[k - 1] + 1));
            let backward = (1..len).all(|k| imgs[k - 1] == wrap(n, imgs[k] + 1));
            let (start, sign) = if forward {
                (imgs[0], 1)
            } else if backward {
                let s = match signs {
                    ChainSigns::MatrixUnits => 1,
                    ChainSigns::Bracket if (len - 1) % 2 == 1 => -1,
                    ChainSigns::Bracket => 1,
                };
                (imgs[len - 1], s)
            } else {
                return Err(Error::GramViolation(format!("tau breaks the chain starting at {a}")));
            };
            ext.insert((a, wrap(n, a + len)), ((start, wrap(n, start + len)), sign));
        }
        Ok(ext)
    }

    pub fn coxeter(&self) -> Coxeter {
        self.cox
    }

    pub fn n(&self) -> usize {
        self.cox.n
    }

    pub fn gamma1(&self) -> &BTreeSet<usize> {
        &self.gamma1
    }

    /// Root vectors of chains in `Γ₁`.
    pub fn pi1_units(&self) -> Vec<Pair> {
        self.tau_ext.keys().copied().collect()
    }

    /// `τ` on a root vector, if its weight lies in `Π₁`.
    pub fn tau_unit(&self, p: Pair) -> Option<(Pair, i8)> {
        self.tau_ext.get(&p).copied()
    }

    /// `[(τ^k p, sign)]` for `k = 1, 2, …` while defined.
    pub fn tau_orbit(&self, p: Pair) -> Vec<(Pair, i8)> {
        let mut out = Vec::new();
        let mut cur = p;
        let mut sign = 1i8;
        while let Some((next, s)) = self.tau_unit(cur) {
            sign *= s;
            out.push((next, sign));
            cur = next;
        }
        out
    }

    /// `[(τ^{-k} p, sign)]` for `k = 1, 2, …` while defined, with `sign` such that
    /// `τ^k(e_{τ^{-k} p}) = sign · e_p`.
    pub fn tau_inverse_orbit(&self, p: Pair) -> Vec<(Pair, i8)> {
        let inv: BTreeMap<Pair, (Pair, i8)> = self.tau_ext.iter().map(|(&k, &(v, s))| (v, (k, s))).collect();
        let mut out = Vec::new();
        let mut cur = p;
        let mut sign = 1i8;
        while let Some(&(prev, s)) = inv.get(&cur) {
            sign *= s;
            out.push((prev, sign));
            cur = prev;
        }
        out
    }

    /// `ψ(e_p) = Σ_{k>=1} e_{τ^k p}`.
    pub fn psi(&self, p: Pair) -> MatQ {
        let n = self.n();
        let mut out = MatQ::zeros(n, n);
        for ((i, k), s) in self.tau_orbit(p) {
            out.add_at(i - 1, k - 1, Rational::from_i64(s as i64));
        }
        out
    }

    /// Linear extension of [`psi`](Self::psi) to `Mat_n`.
    pub fn psi_linear(&self, a: &MatQ) -> MatQ {
        let n = self.n();
        let mut out = MatQ::zeros(n, n);
        for (i, k, v) in a.nonzeros() {
            out = out.try_add(&self.psi((i + 1, k + 1)).scale(v)).expect("same shape");
        }
        out
    }

    /// The contraction `(μ ⊗ 1)(t) + (1 ⊗ ν)(t)` for weights `μ = τα`, `ν = α`, as a diagonal.
    fn r0_constraint(&self, alpha: usize, t: &Tensor2Q) -> Vec<Rational> {
        let n = self.n();
        let ta = self.tau[&alpha];
        let mut out = vec![Rational::zero(); n];
        for (c, i, j, k, l) in t.terms() {
            if i != j || k != l {
                continue;
            }
            let left = self.cox.weight(ta, &unit(n, i, i));
            let right = self.cox.weight(alpha, &unit(n, k, k));
            // (μ⊗1)(h_i⊗h_k) = μ(h_i) h_k and (1⊗ν)(h_i⊗h_k) = ν(h_k) h_i
            out[k - 1] = out[k - 1].clone() + c.clone() * left;
            out[i - 1] = out[i - 1].clone() + c * right;
        }
        out
    }

    /// Solutions `r₀ ∈ h ⊗ h` of `r₀ + r₀²¹ = Ω₀` and the `τ` constraints,
    /// written as `Ω₀/2 + A` with `A` antisymmetric.
    pub fn solve_r0(&self) -> Result<R0Solutions> {
        let n = self.n();
        let basis = self.cox.cartan_basis();
        let half = self.cox.omega(0).scale(&Rational::from_ratio(1, 2));
        let wedges: Vec<Tensor2Q> = (0..basis.len())
            .flat_map(|a| ((a + 1)..basis.len()).map(move |b| (a, b)))
            .map(|(a, b)| {
                Tensor2::outer(&basis[a], &basis[b]).sub(&Tensor2::outer(&basis[b], &basis[a])).expect("same n")
            })
            .collect();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs = Vec::new();
        for &alpha in &self.gamma1 {
            let base = self.r0_constraint(alpha, &half);
            let cols: Vec<Vec<Rational>> = wedges.iter().map(|w| self.r0_constraint(alpha, w)).collect();
            for d in 0..n {
                rows.push(cols.iter().map(|c| c[d].clone()).collect());
                rhs.push(-base[d].clone());
            }
        }
        let combine_wedges = |coef: &[Rational]| -> Tensor2Q {
            wedges.iter().zip(coef).fold(Tensor2::zeros(n), |acc, (w, c)| acc.add(&w.scale(c)).expect("same n"))
        };
        if rows.is_empty() {
            return Ok(R0Solutions { particular: half, freedom: wedges.clone() });
        }
        let a = Matrix::from_rows(rows)?;
        let sol = solve_linear(&a, &rhs)?;
        let particular = sol.particular.ok_or_else(|| Error::NoSolution("r0 constraints are inconsistent".into()))?;
        Ok(R0Solutions {
            particular: half.add(&combine_wedges(&particular))?,
            freedom: sol.nullspace.iter().map(|v| combine_wedges(v)).collect(),
        })
    }

    /// Checks an explicit `r₀` against its defining constraints.
    pub fn check_r0(&self, r0: &Tensor2Q) -> Result<()> {
        let n = self.n();
        if r0.terms().iter().any(|&(_, i, j, k, l)| i != j || k != l) {
            return Err(Error::R0ConstraintViolation("r0 is not in h ⊗ h".into()));
        }
        let sym = r0.add(&r0.swap_factors())?;
        if sym != self.cox.omega(0) {
            return Err(Error::R0ConstraintViolation("r0 + r0^21 != Omega_0".into()));
        }
        for &alpha in &self.gamma1 {
            if self.r0_constraint(alpha, r0).iter().any(|v| !v.is_zero()) {
                return Err(Error::R0ConstraintViolation(format!("tau constraint fails for weight {alpha}")));
            }
        }
        // r0 in h ⊗ h also needs traceless legs
        let ones = MatQ::identity(n);
        if !r0.contract_first(&ones).is_zero() || !r0.swap_factors().contract_first(&ones).is_zero() {
            return Err(Error::R0ConstraintViolation("r0 has a component along the identity".into()));
        }
        Ok(())
    }
}

/// Affine family of admissible `r₀`.
#[derive(Clone, Debug, PartialEq)]
pub struct R0Solutions {
    pub particular: Tensor2Q,
    pub freedom: Vec<Tensor2Q>,
}

/// `r(w) = r₀ + (w^h - 1)⁻¹ Σ_j w^j Ω_j - Σ_{j>=1} w^j (ψ⊗1)Ω_j + Σ_{j>=1} w^{-j} (1⊗ψ)Ω_{-j}`,
/// with `w = exp(z/h)`.
#[derive(Clone, Debug)]
pub struct TrigRMatrix {
    n: usize,
    r0: Tensor2Q,
    omega: Vec<Tensor2Q>,
    psi_left: Vec<Tensor2Q>,
    psi_right: Vec<Tensor2Q>,
}

impl TrigRMatrix {
    pub fn new(triple: &LieBdTriple, r0: Tensor2Q) -> Self {
        let cox = triple.coxeter();
        let h = cox.h();
        let omega: Vec<Tensor2Q> = (0..h).map(|j| cox.omega(j)).collect();
        let psi_left = (0..h).map(|j| omega[j].map_first(|a| triple.psi_linear(a))).collect();
        let psi_right = (0..h).map(|j| omega[(h - j) % h].map_second(|a| triple.psi_linear(a))).collect();
        TrigRMatrix { n: cox.n(), r0, omega, psi_left, psi_right }
    }

    /// With `r₀` the canonical particular solution.
    pub fn canonical(triple: &LieBdTriple) -> Result<Self> {
        Ok(Self::new(triple, triple.solve_r0()?.particular))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> usize {
        self.n
    }

    pub fn r0(&self) -> &Tensor2Q {
        &self.r0
    }

    pub fn omega(&self, j: usize) -> &Tensor2Q {
        &self.omega[j % self.n]
    }

    /// `(ψ ⊗ 1) Ω_j`.
    pub fn psi_left(&self, j: usize) -> &Tensor2Q {
        &self.psi_left[j % self.n]
    }

    /// `(1 ⊗ ψ) Ω_{-j}`.
    pub fn psi_right(&self, j: usize) -> &Tensor2Q {
        &self.psi_right[j % self.n]
    }

    /// Evaluates over any field containing the rationals.
    pub fn eval_in<T: Scalar>(&self, w: &T, lift: impl Fn(&Rational) -> T) -> Result<Tensor2<T>> {
        let h = self.h();
        let wh_minus_one = w.pow_i(h as i64) - T::one();
        if w.is_negligible() || wh_minus_one.is_negligible() {
            return Err(Error::SingularParameter("w = 0 or w^h = 1".into()));
        }
        let n = self.n;
        let mut m = Matrix::<T>::zeros(n * n, n * n);
        let mut accumulate = |t: &Tensor2Q, c: &T| {
            for (r, col, v) in t.matrix().nonzeros() {
                m.add_at(r, col, c.clone() * lift(v));
            }
        };
        accumulate(&self.r0, &T::one());
        let pole = wh_minus_one.inv();
        for j in 0..h {
            accumulate(&self.omega[j], &(pole.clone() * w.pow_i(j as i64)));
        }
        for j in 1..h {
            accumulate(&self.psi_left[j], &-w.pow_i(j as i64));
            accumulate(&self.psi_right[j], &w.pow_i(-(j as i64)));
        }
        Tensor2::from_matrix(n, m)
    }

    pub fn eval(&self, w: &Rational) -> Result<Tensor2Q> {
        self.eval_in(w, Rational::clone)
    }

    /// `r(w)` with `w` a formal variable.
    pub fn symbolic(&self) -> Tensor2<RatFuncQ> {
        self.eval_in(&RatFunc::var(), |q| RatFunc::constant(q.clone())).expect("w is not a root of unity")
    }
}

fn admissible_ws(h: usize, ws: &[Rational; 3]) -> bool {
    ws.iter().all(|w| !w.is_zero())
        && (0..3).all(|a| (0..3).all(|b| a == b || !(ws[a].clone() / ws[b].clone()).pow_i(h as i64).is_one()))
}

pub fn sample_ws(sampler: &mut Sampler, h: usize) -> Result<[Rational; 3]> {
    for _ in 0..1000 {
        let ws = [sampler.rational(|_| false)?, sampler.rational(|_| false)?, sampler.rational(|_| false)?];
        if admissible_ws(h, &ws) {
            return Ok(ws);
        }
    }
    Err(Error::Exhaustion(1000))
}

/// `[r¹², r¹³] + [r¹², r²³] + [r¹³, r²³]` with `r^{ab} = r(w_a / w_b)`.
pub fn cybe_residual(r: &TrigRMatrix, ws: &[Rational; 3]) -> Result<Tensor3Q> {
    if !admissible_ws(r.h(), ws) {
        return Err(Error::SingularParameter("sample point has coinciding ratios".into()));
    }
    let at = |a: usize, b: usize| r.eval(&(ws[a].clone() / ws[b].clone()));
    let r12 = at(0, 1)?.leg_embed(Legs::L12);
    let r13 = at(0, 2)?.leg_embed(Legs::L13);
    let r23 = at(1, 2)?.leg_embed(Legs::L23);
    r12.bracket(&r13)?.add(&r12.bracket(&r23)?)?.add(&r13.bracket(&r23)?)
}

/// `r(w)²¹ + r(1/w)`.
pub fn unitarity_residual(r: &TrigRMatrix, w: &Rational) -> Result<Tensor2Q> {
    r.eval(w)?.swap_factors().add(&r.eval(&w.inv())?)
}

/// Laurent coefficients of `r(z) - subtract / z` at `z = 0` for degrees `-1..=order`, with `w = exp(z/h)`.
pub fn singular_expansion(r: &TrigRMatrix, subtract: &Tensor2Q, order: usize) -> Result<Vec<(i64, Tensor2Q)>> {
    if order < 1 {
        return Err(Error::TruncationTooShort(format!("order {order} does not reach z^1")));
    }
    let n = r.n();
    let h = r.h() as i64;
    // two extra terms absorb the simple pole at w = 1
    let w_series = exp_series(&Rational::from_ratio(1, h), order + 2);
    let sym = r.symbolic();
    let lowest = -1i64;
    let mut coeffs: Vec<Tensor2Q> = (lowest..=order as i64).map(|_| Tensor2::zeros(n)).collect();
    let mut cache: BTreeMap<String, crate::SeriesQ> = BTreeMap::new();
    for (f, i, j, k, l) in sym.terms() {
        let key = format!("{f:?}");
        let s = match cache.get(&key) {
            Some(s) => s.clone(),
            None => {
                let s = compose_ratfunc_series(&f, &w_series, order as i64)?;
                cache.insert(key, s.clone());
                s
            }
        };
        if s.precision() <= order as i64 {
            return Err(Error::TruncationTooShort(format!("series precision {}", s.precision())));
        }
        if s.order_low() < lowest {
            return Err(Error::TruncationTooShort(format!("pole of order {} at z = 0", -s.order_low())));
        }
        for (slot, deg) in coeffs.iter_mut().zip(lowest..) {
            let c = s.coeff(deg);
            if !c.is_zero() {
                slot.add_term(c, i, j, k, l)?;
            }
        }
    }
    coeffs[0] = coeffs[0].sub(subtract)?;
    Ok((lowest..).zip(coeffs).collect())
}

/// `r(z) - Ω/z` has no negative powers of `z`.
pub fn singular_part_ok(r: &TrigRMatrix, order: usize) -> Result<bool> {
    let omega = (0..r.h()).fold(Tensor2::zeros(r.n()), |acc, j| acc.add(r.omega(j)).expect("same n"));
    let exp = singular_expansion(r, &omega, order)?;
    Ok(exp.iter().filter(|(d, _)| *d < 0).all(|(_, t)| t.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn gram_for_small_cycles() {
        let g3 = Coxeter::new(3).unwrap().gram();
        assert_eq!(*g3.get(0, 0), q(2));
        assert_eq!(*g3.get(0, 1), q(-1));
        assert_eq!(*g3.get(2, 0), q(-1));
        let g2 = Coxeter::new(2).unwrap().gram();
        assert_eq!(*g2.get(0, 1), q(-2));
        assert_eq!(*g2.get(1, 1), q(2));
    }

    #[test]
    fn empty_triple_gives_half_omega0() {
        let t = LieBdTriple::validate(&RawLieTriple::parse(3, "", "", "").unwrap()).unwrap();
        let sol = t.solve_r0().unwrap();
        assert_eq!(sol.particular, Coxeter::new(3).unwrap().omega(0).scale(&Rational::from_ratio(1, 2)));
        assert_eq!(sol.freedom.len(), 1);
    }

    #[test]
    fn gram_violation_detected() {
        // n = 4: weights 1 and 2 are adjacent, 1 and 3 are not
        let raw = RawLieTriple::parse(4, "1,2", "1,3", "(1,1),(2,3)").unwrap();
        assert!(matches!(LieBdTriple::validate(&raw), Err(Error::GramViolation(_))));
    }

    #[test]
    fn cyclic_tau_rejected() {
        let raw = RawLieTriple::parse(3, "1,2", "2,1", "(1,2),(2,1)").unwrap();
        assert!(LieBdTriple::validate(&raw).is_err());
    }
}
