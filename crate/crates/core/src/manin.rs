//! The Lagrangian subalgebra `g(r) ⊂ g((t))` of a trigonometric solution,
//! studied on the nodal curve with coordinates `x = e^t`, `y = e^{t/h}`.
//!
//! Elements of the grade-`j` piece are `y^j · M(x)` with `M` a matrix of
//! rational functions supported on degree-`j` entries (the diagonal for `j = 0`).

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::cybe::{LieBdTriple, TrigRMatrix};
use crate::error::{Error, Result};
use crate::numerics::{
    compose_ratfunc_series, exp_series, solve_linear, Matrix, Point, Poly, RatFunc, Scalar, TruncSeries,
};
use crate::tensor::unit;
use crate::{MatQ, PolyQ, RatFuncQ, Rational, SeriesQ};

/// `y^j · M(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedElement {
    pub j: usize,
    pub comps: Matrix<RatFuncQ>,
}

impl GradedElement {
    pub fn zero(n: usize, j: usize) -> Self {
        GradedElement { j, comps: Matrix::zeros(n, n) }
    }

    /// `y^j f ⊗ m` for a constant matrix `m`.
    pub fn from_parts(j: usize, f: &RatFuncQ, m: &MatQ) -> Self {
        let n = m.rows();
        let mut comps = Matrix::zeros(n, n);
        for (i, k, v) in m.nonzeros() {
            comps.set(i, k, f.clone() * RatFunc::constant(v.clone()));
        }
        GradedElement { j, comps }
    }

    pub fn n(&self) -> usize {
        self.comps.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_zero()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.j != o.j {
            return Err(Error::Shape(format!("grades {} and {}", self.j, o.j)));
        }
        Ok(GradedElement { j: self.j, comps: self.comps.try_add(&o.comps)? })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GradedElement { j: self.j, comps: self.comps.scale(&RatFunc::constant(c.clone())) }
    }

    /// Multiplication by a function of `x`.
    pub fn times(&self, f: &RatFuncQ) -> Self {
        GradedElement { j: self.j, comps: self.comps.scale(f) }
    }

    /// Largest pole order at `p` over the components (`None` for the zero element).
    pub fn pole_order(&self, p: &Point<Rational>) -> Option<i64> {
        self.comps.nonzeros().map(|(_, _, f)| f.pole_order(p).expect("nonzero")).max()
    }

    /// Pole orders in `y` at `y = 0` and `y = ∞` stay below `h`.
    pub fn within_grading_bounds(&self, h: usize) -> bool {
        let h = h as i64;
        let j = self.j as i64;
        let at0 = self.pole_order(&Point::Finite(Rational::zero())).is_none_or(|p| h * p - j < h);
        let at_inf = self.pole_order(&Point::Infinity).is_none_or(|p| h * p + j < h);
        at0 && at_inf
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn x_minus_one_pow(k: usize) -> PolyQ {
    Poly::linear_root(Rational::one()).pow(k)
}

fn factorial(m: usize) -> Rational {
    (1..=m as i64).fold(Rational::one(), |acc, k| acc * Rational::from_i64(k))
}

/// `b_m = x^m / (x - 1)^{m+1}`.
pub fn b_coeff(m: usize) -> RatFuncQ {
    RatFunc::new(Poly::monomial(Rational::one(), m), x_minus_one_pow(m + 1)).expect("nonzero")
}

/// Coefficients `a_m` of `1/(x e^{-u} - 1) = Σ a_m u^m`, through the expansion in `1 - e^{-u}`.
pub fn a_coeffs(max_m: usize) -> Vec<RatFuncQ> {
    let one_minus_exp = exp_series(&Rational::zero(), max_m).sub(&exp_series(&-Rational::one(), max_m));
    let mut powers: Vec<SeriesQ> = vec![exp_series(&Rational::zero(), max_m)];
    for k in 1..=max_m {
        let next = powers[k - 1].mul(&one_minus_exp);
        powers.push(next);
    }
    (0..=max_m)
        .map(|big_m| {
            (0..=big_m).fold(RatFunc::zero(), |acc, m| {
                let c = powers[m].coeff(big_m as i64);
                if c.is_zero() {
                    acc
                } else {
                    acc + b_coeff(m) * RatFunc::constant(c)
                }
            })
        })
        .collect()
}

/// The same coefficients by dividing series with coefficients in `Q(x)`.
pub fn a_coeffs_direct(max_m: usize) -> Result<Vec<RatFuncQ>> {
    let x = RatFunc::var();
    let den = exp_series(&-RatFunc::<Rational>::one(), max_m).scale(&x).sub(&TruncSeries::from_coeffs(
        0,
        std::iter::once(RatFunc::one()).chain((0..max_m).map(|_| RatFunc::zero())).collect(),
    ));
    let num = TruncSeries::from_coeffs(
        0,
        std::iter::once(RatFunc::one()).chain((0..max_m).map(|_| RatFunc::zero())).collect(),
    );
    let s = num.div(&den)?;
    Ok((0..=max_m as i64).map(|m| s.coeff(m)).collect())
}

/// Outcome of the node-ideal checks.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeIdealAudit {
    pub a: Vec<RatFuncQ>,
    /// `(name, passed)` in a fixed order.
    pub checks: Vec<(String, bool)>,
}

impl NodeIdealAudit {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

fn vanishes_to(f: &RatFuncQ, p: &Point<Rational>, order: i64) -> bool {
    f.is_zero_fn() || f.pole_order(p).expect("nonzero") <= -order
}

/// Coefficient vector of `f · (x-1)^k`, or `None` if that is not a polynomial of degree `<= k`.
fn node_coords(f: &RatFuncQ, k: usize) -> Option<Vec<Rational>> {
    let scaled = f.clone() * RatFunc::from_poly(x_minus_one_pow(k));
    if scaled.denom().degree() != Some(0) {
        return None;
    }
    let p = scaled.numer();
    if p.degree().is_some_and(|d| d > k) {
        return None;
    }
    Some((0..=k).map(|e| p.coeff(e)).collect())
}

/// Checks `a_m ∈ I`, `a_m - a_1/m! ∈ I₂` and that `x/(x-1)²`, `x/(x-1)³` generate `k ⊕ I`.
pub fn node_ideal_audit(max_m: usize) -> Result<NodeIdealAudit> {
    let a = a_coeffs(max_m);
    let zero = Point::Finite(Rational::zero());
    let mut checks = Vec::new();
    checks.push(("a_m by two expansions agree".to_string(), a == a_coeffs_direct(max_m)?));
    for (m, am) in a.iter().enumerate().skip(1) {
        let ok = vanishes_to(am, &zero, 1) && vanishes_to(am, &Point::Infinity, 1);
        checks.push((format!("a_{m} in I"), ok));
    }
    let a1 = &a[1];
    for (m, am) in a.iter().enumerate().skip(2) {
        let d = am.clone() - a1.clone() * RatFunc::constant(factorial(m).inv());
        let ok = vanishes_to(&d, &zero, 1) && vanishes_to(&d, &Point::Infinity, 2);
        checks.push((format!("a_{m} - a_1/{m}! in I2"), ok));
    }
    // k ⊕ I up to pole order K is spanned by 1, a_1, …, a_{K-1}; compare with monomials in g2, g3
    let g2 = RatFunc::new(Poly::monomial(Rational::one(), 1), x_minus_one_pow(2))?;
    let g3 = RatFunc::new(Poly::monomial(Rational::one(), 1), x_minus_one_pow(3))?;
    let big_k = max_m + 1;
    let mut monomials = vec![RatFunc::one()];
    for e2 in 0..=big_k / 2 {
        for e3 in 0..=big_k / 3 {
            if (e2, e3) != (0, 0) && 2 * e2 + 3 * e3 <= big_k {
                monomials.push(g2.powi(e2 as i64)? * g3.powi(e3 as i64)?);
            }
        }
    }
    let mut ideal = vec![RatFunc::one()];
    ideal.extend(a[1..].iter().cloned());
    let to_rows =
        |fs: &[RatFuncQ]| -> Option<Vec<Vec<Rational>>> { fs.iter().map(|f| node_coords(f, big_k)).collect() };
    let same_span = match (to_rows(&monomials), to_rows(&ideal)) {
        (Some(mr), Some(ir)) => {
            let rm = Matrix::from_rows(mr.clone())?.rank();
            let ri = Matrix::from_rows(ir.clone())?.rank();
            let both = Matrix::from_rows(mr.into_iter().chain(ir).collect())?.rank();
            rm == ri && ri == both && ri == big_k
        }
        _ => false,
    };
    checks.push((format!("x/(x-1)^2 and x/(x-1)^3 generate k + I through pole order {big_k}"), same_span));
    Ok(NodeIdealAudit { a, checks })
}

/// Basis vectors of `g_j` paired with their dual functionals under the trace form:
/// `(v, w)` with `tr(v w') = δ`. For `j ≠ 0` these are `(e_α, e_{-α})`.
fn graded_basis(triple: &LieBdTriple, j: usize) -> Vec<MatQ> {
    let cox = triple.coxeter();
    if j.is_multiple_of(cox.h()) {
        cox.cartan_basis()
    } else {
        cox.root_units(j).into_iter().map(|(i, k)| unit(cox.n(), i, k)).collect()
    }
}

/// A labelled spanning element.
#[derive(Clone, Debug, PartialEq)]
pub struct SpanElement {
    pub label: String,
    /// Index of the defining vector in the grade's basis.
    pub basis_index: usize,
    pub m: usize,
    pub element: GradedElement,
}

/// Closed-form spanning elements of `g(r)_j` with `m <= m_max`.
pub fn spanning_set(r: &TrigRMatrix, triple: &LieBdTriple, j: usize, m_max: usize) -> Vec<SpanElement> {
    let cox = triple.coxeter();
    let n = cox.n();
    let h = cox.h();
    let j = j % h;
    let a = a_coeffs(m_max);
    let x_inv = RatFunc::var().powi(-1).expect("x is invertible");
    let mut out = Vec::new();
    if j == 0 {
        let r21 = r.r0().swap_factors();
        for (idx, v) in cox.cartan_basis().iter().enumerate() {
            let head = GradedElement::from_parts(0, &RatFunc::one(), &r21.contract_first(v));
            let s = head.add(&GradedElement::from_parts(0, &a[0], v)).expect("same grade");
            out.push(SpanElement { label: format!("s(x_{})", idx + 1), basis_index: idx, m: 0, element: s });
            for (m, am) in a.iter().enumerate().skip(1) {
                out.push(SpanElement {
                    label: format!("a_{m} x_{}", idx + 1),
                    basis_index: idx,
                    m,
                    element: GradedElement::from_parts(0, am, v),
                });
            }
        }
        return out;
    }
    for (idx, (i, k)) in cox.root_units(j).into_iter().enumerate() {
        let e_alpha = unit::<Rational>(n, i, k);
        let forward = triple.psi((i, k));
        // Σ_k e_{-τ^{-k}(-α)} with the signs of τ
        let mut backward = MatQ::zeros(n, n);
        for ((p, qq), s) in triple.tau_inverse_orbit((k, i)) {
            backward.add_at(qq - 1, p - 1, Rational::from_i64(s as i64));
        }
        for (m, am) in a.iter().enumerate() {
            let mut el = GradedElement::from_parts(j, am, &e_alpha);
            if m == 0 {
                el = el.sub(&GradedElement::from_parts(j, &RatFunc::one(), &forward)).expect("same grade");
            }
            let tail = GradedElement::from_parts(j, &x_inv, &backward).scale(&factorial(m).inv());
            el = el.add(&tail).expect("same grade");
            out.push(SpanElement { label: format!("c^{j}_{m}(e_{i}{k})"), basis_index: idx, m, element: el });
        }
    }
    out
}

/// Expands a function of `w` at `w = y e^{-u/h}` as a series in `u` over `Q(y)`.
fn expand_in_u(f: &RatFuncQ, w_series: &TruncSeries<RatFuncQ>, prec: i64) -> Result<TruncSeries<RatFuncQ>> {
    let lift = |p: &PolyQ| Poly::new(p.coeffs().iter().map(|c| RatFunc::constant(c.clone())).collect());
    let num = w_series.eval_poly(&lift(f.numer()), prec);
    let den = w_series.eval_poly(&lift(f.denom()), prec);
    num.div(&den)
}

/// Reads off `g(r)_j` elements from the `u`-expansion of `r²¹(t - u)·e^{ju/h}`,
/// contracting the first leg with the trace duals of the grade's basis.
/// Entry `[idx][m]` corresponds to basis vector `idx` and `u^m`.
pub fn extract_gr_from_r(
    r: &TrigRMatrix,
    triple: &LieBdTriple,
    j: usize,
    m_max: usize,
) -> Result<Vec<Vec<GradedElement>>> {
    let n = r.n();
    let h = r.h();
    let j = j % h;
    let prec = m_max as i64 + 1;
    let y = RatFunc::<Rational>::var();
    // w = y · exp(-u/h)
    let w_series = exp_series(&RatFunc::constant(q(-1, h as i64)), m_max).scale(&y);
    let shift = exp_series(&RatFunc::constant(q(j as i64, h as i64)), m_max);
    let r21 = r.symbolic().swap_factors();
    let mut cache: HashMap<RatFuncQ, TruncSeries<RatFuncQ>> = HashMap::new();
    let mut out = Vec::new();
    for v in graded_basis(triple, j) {
        let lifted = Matrix::from_fn(n, n, |a, b| RatFunc::constant(v.get(a, b).clone()));
        let contracted = r21.contract_first(&lifted);
        let mut per_m: Vec<GradedElement> = (0..=m_max).map(|_| GradedElement::zero(n, j)).collect();
        for (a, b, f) in contracted.nonzeros() {
            let s = match cache.get(f) {
                Some(s) => s.clone(),
                None => {
                    let s = expand_in_u(f, &w_series, prec)?;
                    cache.insert(f.clone(), s.clone());
                    s
                }
            };
            let s = s.mul(&shift);
            if s.precision() < prec {
                return Err(Error::TruncationTooShort(format!("u-expansion precision {}", s.precision())));
            }
            for (m, slot) in per_m.iter_mut().enumerate() {
                let g = s.coeff(m as i64);
                if g.is_zero_fn() {
                    continue;
                }
                let (e, fx) = g
                    .split_power(h)
                    .ok_or_else(|| Error::AuditFailure(format!("coefficient {g:?} is not y^j f(y^h)")))?;
                if e as usize != j {
                    return Err(Error::AuditFailure(format!("coefficient in grade {j} carries y^{e}")));
                }
                slot.comps.set(a, b, fx);
            }
        }
        out.push(per_m);
    }
    Ok(out)
}

/// Result of a span-membership query.
#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    /// Coefficients over the labelled spanning elements; the combination was replayed exactly.
    InSpan(Vec<(String, Rational)>),
    NotInSpan(String),
}

impl Membership {
    pub fn is_in(&self) -> bool {
        matches!(self, Membership::InSpan(_))
    }
}

/// Decides whether `target` lies in `g(r)_j`.
///
/// An element with pole order `M` at `x = 1` can only involve spanning
/// elements with `m < M`, so the search is finite.
pub fn membership(r: &TrigRMatrix, triple: &LieBdTriple, target: &GradedElement) -> Result<Membership> {
    let n = r.n();
    let one = Point::Finite(Rational::one());
    let zero = Point::Finite(Rational::zero());
    let mut big_m = 0usize;
    for (_, _, f) in target.comps.nonzeros() {
        let at1 = f.pole_order(&one)?.max(0) as usize;
        let at0 = f.pole_order(&zero)?.max(0);
        if at0 > 1 {
            return Ok(Membership::NotInSpan(format!("pole of order {at0} at x = 0")));
        }
        let allowed = &x_minus_one_pow(at1) * &Poly::monomial(Rational::one(), at0 as usize);
        if !allowed.div_rem(f.denom())?.1.is_zero() {
            return Ok(Membership::NotInSpan("pole outside x in {0, 1}".into()));
        }
        big_m = big_m.max(at1);
    }
    if target.is_zero() {
        return Ok(Membership::InSpan(Vec::new()));
    }
    if big_m == 0 {
        return Ok(Membership::NotInSpan("no pole at x = 1".into()));
    }
    let elems = spanning_set(r, triple, target.j, big_m - 1);
    let common = RatFunc::from_poly(&x_minus_one_pow(big_m) * &Poly::monomial(Rational::one(), 1));
    let numerators = |g: &GradedElement| -> Result<Vec<PolyQ>> {
        (0..n * n)
            .map(|idx| {
                let f = g.comps.get(idx / n, idx % n).clone() * common.clone();
                if f.denom().degree() != Some(0) {
                    return Err(Error::AuditFailure("denominator outside the common bound".into()));
                }
                Ok(f.numer().scale(&f.denom().coeff(0).inv()))
            })
            .collect()
    };
    let target_polys = numerators(target)?;
    let elem_polys: Vec<Vec<PolyQ>> = elems.iter().map(|e| numerators(&e.element)).collect::<Result<_>>()?;
    let max_deg = target_polys.iter().chain(elem_polys.iter().flatten()).filter_map(Poly::degree).max().unwrap_or(0);
    let rows = n * n * (max_deg + 1);
    let a =
        Matrix::from_fn(rows, elems.len(), |row, col| elem_polys[col][row / (max_deg + 1)].coeff(row % (max_deg + 1)));
    let b: Vec<Rational> = (0..rows).map(|row| target_polys[row / (max_deg + 1)].coeff(row % (max_deg + 1))).collect();
    let sol = solve_linear(&a, &b)?;
    let Some(coef) = sol.particular else {
        return Ok(Membership::NotInSpan("linear system is inconsistent".into()));
    };
    let mut replay = GradedElement::zero(n, target.j);
    for (c, e) in coef.iter().zip(&elems) {
        if !c.is_zero() {
            replay = replay.add(&e.element.scale(c))?;
        }
    }
    if replay != *target {
        return Err(Error::AuditFailure("certificate replay disagrees with the target".into()));
    }
    Ok(Membership::InSpan(
        elems.iter().zip(coef).filter(|(_, c)| !c.is_zero()).map(|(e, c)| (e.label.clone(), c)).collect(),
    ))
}

/// `x/(x-1)²` and `x/(x-1)³`.
pub fn node_generators() -> [RatFuncQ; 2] {
    let x = Poly::monomial(Rational::one(), 1);
    [
        RatFunc::new(x.clone(), x_minus_one_pow(2)).expect("nonzero"),
        RatFunc::new(x, x_minus_one_pow(3)).expect("nonzero"),
    ]
}

/// One failed or passed sub-check with an optional witness.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl NamedCheck {
    fn new(name: impl Into<String>, passed: bool, witness: Option<String>) -> Self {
        NamedCheck { name: name.into(), passed, witness }
    }
}

/// Every grade is stable under multiplication by the node generators.
pub fn verify_module_closure(r: &TrigRMatrix, triple: &LieBdTriple, m_max: usize) -> Result<NamedCheck> {
    let mut products = 0usize;
    for j in 0..r.h() {
        for el in spanning_set(r, triple, j, m_max) {
            for (gi, g) in node_generators().iter().enumerate() {
                products += 1;
                if let Membership::NotInSpan(why) = membership(r, triple, &el.element.times(g))? {
                    return Ok(NamedCheck::new(
                        "module_closure",
                        false,
                        Some(format!("g{} · {}: {why}", gi + 2, el.label)),
                    ));
                }
            }
        }
    }
    Ok(NamedCheck::new("module_closure", true, Some(format!("{products} products in span"))))
}

/// The intermediate inclusions used to prove closure, each checked on its own.
pub fn closure_inclusion_checks(r: &TrigRMatrix, triple: &LieBdTriple, m_max: usize) -> Result<Vec<NamedCheck>> {
    let cox = triple.coxeter();
    let n = cox.n();
    let a = a_coeffs(m_max.max(1));
    let mut i2 = true;
    let mut tau_image = true;
    let mut tau_preimage = true;
    let mut difference = true;
    let mut witness: [Option<String>; 4] = Default::default();
    let mut counts = [0usize; 4];
    for j in 1..cox.h() {
        let span = spanning_set(r, triple, j, 1);
        for (idx, (i, k)) in cox.root_units(j).into_iter().enumerate() {
            let e_alpha = unit::<Rational>(n, i, k);
            for m in 2..=m_max {
                let f = a[m].clone() - a[1].clone() * RatFunc::constant(factorial(m).inv());
                counts[0] += 1;
                if !membership(r, triple, &GradedElement::from_parts(j, &f, &e_alpha))?.is_in() {
                    i2 = false;
                    witness[0].get_or_insert(format!("j={j} m={m} e_{i}{k}"));
                }
            }
            if let Some(((p, qq), s)) = triple.tau_unit((i, k)) {
                let img = unit::<Rational>(n, p, qq).scale(&Rational::from_i64(s as i64));
                for am in a.iter().skip(1) {
                    counts[1] += 1;
                    if !membership(r, triple, &GradedElement::from_parts(j, am, &img))?.is_in() {
                        tau_image = false;
                        witness[1].get_or_insert(format!("j={j} e_{p}{qq}"));
                    }
                }
            }
            if let Some(&((p, qq), s)) = triple.tau_inverse_orbit((k, i)).first() {
                let pre = unit::<Rational>(n, qq, p).scale(&Rational::from_i64(s as i64));
                let f = a[1].clone() - a[0].clone();
                counts[2] += 1;
                if !membership(r, triple, &GradedElement::from_parts(j, &f, &pre))?.is_in() {
                    tau_preimage = false;
                    witness[2].get_or_insert(format!("j={j} e_{qq}{p}"));
                }
            }
            let c0 = &span.iter().find(|e| e.basis_index == idx && e.m == 0).expect("m = 0 present").element;
            let c1 = &span.iter().find(|e| e.basis_index == idx && e.m == 1).expect("m = 1 present").element;
            let expected = GradedElement::from_parts(j, &(a[1].clone() - a[0].clone()), &e_alpha)
                .add(&GradedElement::from_parts(j, &RatFunc::one(), &triple.psi((i, k))))?;
            counts[3] += 1;
            if c1.sub(c0)? != expected {
                difference = false;
                witness[3].get_or_insert(format!("j={j} e_{i}{k}"));
            }
        }
    }
    let [w0, w1, w2, w3] = witness;
    let tally = |w: Option<String>, k: usize, what: &str| w.or(Some(format!("{k} {what}")));
    Ok(vec![
        NamedCheck::new("inclusion_i2", i2, tally(w0, counts[0], "memberships")),
        NamedCheck::new("inclusion_tau_image", tau_image, tally(w1, counts[1], "memberships")),
        NamedCheck::new("inclusion_tau_preimage", tau_preimage, tally(w2, counts[2], "memberships")),
        NamedCheck::new("c1_minus_c0_identity", difference, tally(w3, counts[3], "identities")),
    ])
}

/// Principal part at `t = 0` (`x = e^t`) of `y^j f(x)`, coefficients of `t^{-1}, …, t^{-P}`.
fn principal_part(f: &RatFuncQ, j: usize, h: usize, pole_bound: usize, order: usize) -> Result<Vec<Rational>> {
    let x_series = exp_series(&Rational::one(), order);
    let fx = compose_ratfunc_series(f, &x_series, order as i64)?;
    let yj = exp_series(&q(j as i64, h as i64), order);
    let s = fx.mul(&yj);
    if s.order_low() < -(pole_bound as i64) {
        return Err(Error::AuditFailure(format!("pole of order {} exceeds the bound", -s.order_low())));
    }
    if s.precision() < 0 {
        return Err(Error::TruncationTooShort(format!("order {order} does not reach t^-1")));
    }
    Ok((1..=pole_bound as i64).map(|k| s.coeff(-k)).collect())
}

/// Isotropy under `Res_{t=0} tr(·,·) dt` and complementarity to `g[[t]]` through pole order `P`.
pub fn manin_audit(r: &TrigRMatrix, triple: &LieBdTriple, pole_bound: usize, order: usize) -> Result<Vec<NamedCheck>> {
    if pole_bound == 0 {
        return Err(Error::TruncationTooShort("pole bound must be positive".into()));
    }
    if order < pole_bound + 1 {
        return Err(Error::TruncationTooShort(format!("order {order} with pole bound {pole_bound}")));
    }
    let h = r.h();
    let n = r.n();
    let m_max = pole_bound - 1;
    let grades: Vec<Vec<SpanElement>> = (0..h).map(|j| spanning_set(r, triple, j, m_max)).collect();

    let mut residues = 0usize;
    let mut skipped = 0usize;
    let mut iso_witness = None;
    for j1 in 0..h {
        for j2 in 0..h {
            if (j1 + j2) % h != 0 {
                skipped += grades[j1].len() * grades[j2].len();
                continue;
            }
            let x_power = RatFunc::var().powi(((j1 + j2) / h) as i64 - 1)?;
            for u in &grades[j1] {
                for v in &grades[j2] {
                    let tr = u.element.comps.try_mul(&v.element.comps)?.trace();
                    residues += 1;
                    if tr.is_zero_fn() {
                        continue;
                    }
                    let res = (tr * x_power.clone()).residue(&Rational::one())?;
                    if !res.is_zero() && iso_witness.is_none() {
                        iso_witness = Some(format!("<{}, {}> has residue {res}", u.label, v.label));
                    }
                }
            }
        }
    }
    let isotropy = NamedCheck::new(
        "isotropy",
        iso_witness.is_none(),
        iso_witness.or(Some(format!("{residues} residues vanish, {skipped} pairs zero by grade"))),
    );

    let mut comp_witness = None;
    for (j, elems) in grades.iter().enumerate() {
        let dim_gj = if j == 0 { n - 1 } else { n };
        let rows: Vec<Vec<Rational>> = elems
            .iter()
            .map(|e| -> Result<Vec<Rational>> {
                let mut row = Vec::with_capacity(n * n * pole_bound);
                for a in 0..n {
                    for b in 0..n {
                        let f = e.element.comps.get(a, b);
                        if f.is_zero_fn() {
                            row.extend(std::iter::repeat_n(Rational::zero(), pole_bound));
                        } else {
                            row.extend(principal_part(f, j, h, pole_bound, order)?);
                        }
                    }
                }
                Ok(row)
            })
            .collect::<Result<_>>()?;
        let rank = Matrix::from_rows(rows)?.rank();
        if rank != elems.len() || rank != dim_gj * pole_bound {
            comp_witness.get_or_insert(format!(
                "grade {j}: rank {rank} of {} rows, expected {}",
                elems.len(),
                dim_gj * pole_bound
            ));
        }
    }
    let complementarity = NamedCheck::new(
        "complementarity",
        comp_witness.is_none(),
        comp_witness.or(Some(format!("{} grades, pole bound {pole_bound}", h))),
    );
    Ok(vec![isotropy, complementarity])
}
