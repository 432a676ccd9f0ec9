//! Matrix-problem model attached to normalized associative BD data and a cut
//! point `m`: the subalgebra `I ⊂ P₁ × P₂`, the sections defining `φ`, and the
//! closed form of `φ` built from coordinate projectors.
//!
//! A vector bundle `O^m ⊕ O(1)^{n-m+1}` is encoded by `ε_i = [i >= m]`; the
//! entry `(i, j)` of an endomorphism is a section of `O(ε_i - ε_j)`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::assoc_bd::{AssocBdData, Pair};
use crate::error::{Error, Result};
use crate::numerics::{Matrix, Scalar};
use crate::tensor::{unit, Tensor2};
use crate::{MatQ, Rational, Tensor2Q};

/// Degree `ε_i - ε_j` of the entry `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryDegree {
    Minus,
    Zero,
    Plus,
}

/// How the Levi quotients of `P₁` and `P₂` are identified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gluing {
    Sigma,
    /// Identity instead of `σ`; only meaningful as a negative control.
    Identity,
}

/// Coordinate subspaces of `Mat_n` used by the projectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subspace {
    /// `B₁⁺`, upper triangular.
    B1Plus,
    /// `N₁⁺`, strictly upper triangular.
    N1Plus,
    B2Plus,
    B2Minus,
    A1Plus,
    A1Minus,
    A2Plus,
    A2Minus,
    /// Diagonal.
    H,
    /// `M(O(-1))`
    ODegMinus,
    /// `M(O)`
    ODegZero,
    /// `M(O(1))`
    ODegPlus,
}

/// Which transfer operator to inspect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theta {
    Plus,
    Minus,
}

/// Which evaluation route produces `φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiRoute {
    /// Projector formula.
    Closed,
    /// Solving for the section with prescribed residue.
    Solve,
}

/// Sparse linear form over the unknowns of a system.
type LinForm = Vec<(usize, Rational)>;

#[derive(Clone, Debug)]
pub struct OrderModel {
    data: AssocBdData,
    m: usize,
    gluing: Gluing,
    basis: Vec<(MatQ, MatQ)>,
}

/// Outcome of the structural audits run when a model is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelAudit {
    pub dim_p1: usize,
    pub dim_p2: usize,
    pub dim_i: usize,
    pub contains_identity: bool,
    pub closed: bool,
    pub isotropic: bool,
    pub theta_plus_index: usize,
    pub theta_minus_index: usize,
}

impl OrderModel {
    /// Builds the model; `data` must be normalized and `m` a valid cut point.
    pub fn build(data: &AssocBdData, m: usize) -> Result<Self> {
        Self::build_with(data, m, Gluing::Sigma)
    }

    pub fn build_with(data: &AssocBdData, m: usize, gluing: Gluing) -> Result<Self> {
        if !data.is_normalized() {
            return Err(Error::UnnormalizedGamma);
        }
        if !data.valid_m().contains(&m) {
            return Err(Error::InvalidM(m));
        }
        let mut model = OrderModel { data: data.clone(), m, gluing, basis: Vec::new() };
        model.check_shape()?;
        if gluing == Gluing::Identity {
            let n = data.n();
            let l1: BTreeSet<Pair> = model.levi_positions(1).collect();
            let l2: BTreeSet<Pair> = model.levi_positions(2).collect();
            if l1 != l2 {
                return Err(Error::LeviMismatch(format!("identity does not carry L(P1) onto L(P2) for n = {n}")));
            }
        }
        model.basis = model.compute_basis();
        Ok(model)
    }

    /// `Π₁` must consist of positive pairs and `Π₂` must lie in `S_m`.
    fn check_shape(&self) -> Result<()> {
        if let Some(p) = self.data.pi1().iter().find(|p| p.0 >= p.1) {
            return Err(Error::AuditFailure(format!("{p:?} in Pi1 is not positive")));
        }
        if let Some(p) = self.data.pi2().iter().find(|&&p| !self.in_s_m(p)) {
            return Err(Error::AuditFailure(format!("{p:?} in Pi2 lies outside S_m")));
        }
        Ok(())
    }

    pub fn data(&self) -> &AssocBdData {
        &self.data
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.data.n()
    }

    /// Basis of `I` as pairs `(a, b)`.
    pub fn basis(&self) -> &[(MatQ, MatQ)] {
        &self.basis
    }

    fn eps(&self, i: usize) -> i32 {
        i32::from(i >= self.m)
    }

    pub fn degree(&self, i: usize, j: usize) -> EntryDegree {
        match self.eps(i) - self.eps(j) {
            -1 => EntryDegree::Minus,
            0 => EntryDegree::Zero,
            _ => EntryDegree::Plus,
        }
    }

    /// `(i, j) ∈ S_m`: `i` precedes `j` in the order `m < m+1 < … < n < 1 < … < m-1`.
    pub fn in_s_m(&self, (i, j): Pair) -> bool {
        let m = self.m;
        (i < j && j < m) || (m <= i && i < j) || (i >= m && m > j)
    }

    pub fn contains(&self, space: Subspace, i: usize, j: usize) -> bool {
        let pi1 = self.data.pi1();
        let pi2 = self.data.pi2();
        match space {
            Subspace::B1Plus => i <= j,
            Subspace::N1Plus => i < j,
            Subspace::B2Plus => i == j || self.in_s_m((i, j)),
            Subspace::B2Minus => i == j || self.in_s_m((j, i)),
            Subspace::A1Plus => pi1.contains(&(i, j)),
            Subspace::A1Minus => pi1.contains(&(j, i)),
            Subspace::A2Plus => pi2.contains(&(i, j)),
            Subspace::A2Minus => pi2.contains(&(j, i)),
            Subspace::H => i == j,
            Subspace::ODegMinus => self.degree(i, j) == EntryDegree::Minus,
            Subspace::ODegZero => self.degree(i, j) == EntryDegree::Zero,
            Subspace::ODegPlus => self.degree(i, j) == EntryDegree::Plus,
        }
    }

    /// Coordinate projector onto a subspace.
    pub fn project(&self, space: Subspace, a: &MatQ) -> MatQ {
        let mut out = MatQ::zeros(a.rows(), a.cols());
        for (i, j, v) in a.nonzeros() {
            if self.contains(space, i + 1, j + 1) {
                out.set(i, j, v.clone());
            }
        }
        out
    }

    fn in_p1(&self, i: usize, j: usize) -> bool {
        self.contains(Subspace::B1Plus, i, j) || self.contains(Subspace::A1Minus, i, j)
    }

    fn in_p2(&self, i: usize, j: usize) -> bool {
        self.contains(Subspace::B2Minus, i, j) || self.contains(Subspace::A2Plus, i, j)
    }

    pub fn dim_p1(&self) -> usize {
        self.positions().filter(|&(i, j)| self.in_p1(i, j)).count()
    }

    pub fn dim_p2(&self) -> usize {
        self.positions().filter(|&(i, j)| self.in_p2(i, j)).count()
    }

    fn positions(&self) -> impl Iterator<Item = Pair> {
        let n = self.n();
        (1..=n).flat_map(move |i| (1..=n).map(move |j| (i, j)))
    }

    /// Positions of the Levi factor `H + A_k⁺ + A_k⁻`.
    fn levi_positions(&self, k: u8) -> impl Iterator<Item = Pair> + '_ {
        let pi = if k == 1 { self.data.pi1() } else { self.data.pi2() };
        self.positions().filter(move |&(i, j)| i == j || pi.contains(&(i, j)) || pi.contains(&(j, i)))
    }

    fn glue(&self, p: Pair) -> Pair {
        match self.gluing {
            Gluing::Sigma => self.data.sigma().apply_pair(p),
            Gluing::Identity => p,
        }
    }

    /// Rows expressing `(A, B) ∈ I` where `A`, `B` are linear in some unknowns.
    fn membership_rows(&self, a: impl Fn(Pair) -> LinForm, b: impl Fn(Pair) -> LinForm) -> Vec<LinForm> {
        let mut rows = Vec::new();
        for (i, j) in self.positions() {
            if !self.in_p1(i, j) {
                rows.push(a((i, j)));
            }
            if !self.in_p2(i, j) {
                rows.push(b((i, j)));
            }
        }
        for p in self.levi_positions(1) {
            let mut row = b(self.glue(p));
            row.extend(a(p).into_iter().map(|(k, c)| (k, -c)));
            rows.push(row);
        }
        rows
    }

    fn idx(&self, (i, j): Pair) -> usize {
        (i - 1) * self.n() + (j - 1)
    }

    fn compute_basis(&self) -> Vec<(MatQ, MatQ)> {
        let n = self.n();
        let nn = n * n;
        let one = Rational::one();
        let rows =
            self.membership_rows(|p| vec![(self.idx(p), one.clone())], |p| vec![(nn + self.idx(p), one.clone())]);
        let null = dense(&rows, 2 * nn).nullspace();
        null.iter().map(|v| (unvec(n, &v[..nn]), unvec(n, &v[nn..]))).collect()
    }

    /// Checks `(a, b) ∈ I` directly against the defining conditions.
    pub fn is_member(&self, a: &MatQ, b: &MatQ) -> bool {
        let one = Rational::one();
        let nn = self.n() * self.n();
        let rows =
            self.membership_rows(|p| vec![(self.idx(p), one.clone())], |p| vec![(nn + self.idx(p), one.clone())]);
        let mut v: Vec<Rational> = Vec::with_capacity(2 * nn);
        v.extend((0..nn).map(|k| a.get(k / self.n(), k % self.n()).clone()));
        v.extend((0..nn).map(|k| b.get(k / self.n(), k % self.n()).clone()));
        rows.iter()
            .all(|row| row.iter().fold(Rational::zero(), |acc, (k, c)| acc + c.clone() * v[*k].clone()).is_zero())
    }

    /// `tr(a a') - tr(b b')`.
    pub fn pairing(u: &(MatQ, MatQ), v: &(MatQ, MatQ)) -> Rational {
        let tr = |x: &MatQ, y: &MatQ| -> Rational {
            x.nonzeros().fold(Rational::zero(), |acc, (i, j, val)| acc + val.clone() * y.get(j, i).clone())
        };
        tr(&u.0, &v.0) - tr(&u.1, &v.1)
    }

    /// Runs every structural audit and reports the outcome.
    pub fn audit(&self) -> Result<ModelAudit> {
        let n = self.n();
        let closed = self.basis.iter().all(|u| {
            self.basis.iter().all(|v| {
                let a = u.0.try_mul(&v.0).expect("square");
                let b = u.1.try_mul(&v.1).expect("square");
                self.is_member(&a, &b)
            })
        });
        let isotropic = self.basis.iter().all(|u| self.basis.iter().all(|v| Self::pairing(u, v).is_zero()));
        Ok(ModelAudit {
            dim_p1: self.dim_p1(),
            dim_p2: self.dim_p2(),
            dim_i: self.basis.len(),
            contains_identity: self.is_member(&MatQ::identity(n), &MatQ::identity(n)),
            closed,
            isotropic,
            theta_plus_index: self.nilpotency_index(Theta::Plus)?,
            theta_minus_index: self.nilpotency_index(Theta::Minus)?,
        })
    }

    /// Builds, audits, and fails on the first broken property.
    pub fn build_audited(data: &AssocBdData, m: usize) -> Result<(Self, ModelAudit)> {
        let model = Self::build(data, m)?;
        let audit = model.audit()?;
        let n = model.n();
        if audit.dim_i != n * n {
            return Err(Error::AuditFailure(format!("dim I = {}, expected {}", audit.dim_i, n * n)));
        }
        if !audit.contains_identity {
            return Err(Error::AuditFailure("(1, 1) is not in I".into()));
        }
        if !audit.closed {
            return Err(Error::ClosureViolation("I is not closed under multiplication".into()));
        }
        if !audit.isotropic {
            return Err(Error::AuditFailure("I is not isotropic".into()));
        }
        Ok((model, audit))
    }

    pub fn sigma_act(&self, a: &MatQ, inverse: bool) -> MatQ {
        let s = if inverse { self.data.sigma().inverse() } else { self.data.sigma().clone() };
        let mut out = MatQ::zeros(a.rows(), a.cols());
        for (i, j, v) in a.nonzeros() {
            out.set(s.apply(i + 1) - 1, s.apply(j + 1) - 1, v.clone());
        }
        out
    }

    /// `θ⁺ = σ π_{A₁⁺} π_O` and `θ⁻ = σ⁻¹ π_{A₂⁻} π_O`.
    pub fn theta(&self, which: Theta, a: &MatQ) -> MatQ {
        let zero_part = self.project(Subspace::ODegZero, a);
        match which {
            Theta::Plus => self.sigma_act(&self.project(Subspace::A1Plus, &zero_part), false),
            Theta::Minus => self.sigma_act(&self.project(Subspace::A2Minus, &zero_part), true),
        }
    }

    /// Least `k` with `θ^k = 0`.
    pub fn nilpotency_index(&self, which: Theta) -> Result<usize> {
        let n = self.n();
        let mut worst = 0;
        for (i, j) in self.positions() {
            let mut cur = unit::<Rational>(n, i, j);
            let mut k = 0;
            while !cur.is_zero() {
                cur = self.theta(which, &cur);
                k += 1;
                if k > n * n {
                    return Err(Error::NotNilpotent(format!("{which:?}")));
                }
            }
            worst = worst.max(k);
        }
        Ok(worst)
    }

    /// `Σ_k c^k θ^k v`, finite by nilpotency.
    fn neumann(&self, which: Theta, c: &Rational, v: &MatQ) -> MatQ {
        let mut acc = v.clone();
        let mut term = v.clone();
        let mut ck = Rational::one();
        loop {
            term = self.theta(which, &term);
            if term.is_zero() {
                return acc;
            }
            ck *= c.clone();
            acc = acc.try_add(&term.scale(&ck)).expect("same shape");
        }
    }

    /// Dimension of global sections `a = a₀ + a₁ t` with `(a(0), a(∞)) ∈ I`.
    pub fn h0_dimension(&self) -> usize {
        let n = self.n();
        let nn = n * n;
        let one = Rational::one();
        let mut rows = Vec::new();
        for p in self.positions() {
            match self.degree(p.0, p.1) {
                EntryDegree::Minus => {
                    rows.push(vec![(self.idx(p), one.clone())]);
                    rows.push(vec![(nn + self.idx(p), one.clone())]);
                }
                EntryDegree::Zero => rows.push(vec![(nn + self.idx(p), one.clone())]),
                EntryDegree::Plus => {}
            }
        }
        rows.extend(self.membership_rows(
            |p| vec![(self.idx(p), one.clone())],
            |p| {
                let mut f = vec![(nn + self.idx(p), one.clone())];
                if self.degree(p.0, p.1) == EntryDegree::Zero {
                    f.push((self.idx(p), one.clone()));
                }
                f
            },
        ));
        dense(&rows, 2 * nn).nullspace().len()
    }

    /// Sections `a = (-x a₀ + a₁ t + a₂ t²) / (t - x)` with `(λ a(0), a(∞)) ∈ I`.
    pub fn section_space(&self, lambda: &Rational, x: &Rational) -> Result<SectionSpace> {
        check_params(self.n(), lambda, x)?;
        let n = self.n();
        let nn = n * n;
        let one = Rational::one();
        let a0 = |p: Pair| self.idx(p);
        let a1 = |p: Pair| nn + self.idx(p);
        let a2 = |p: Pair| 2 * nn + self.idx(p);
        let mut rows = Vec::new();
        for p in self.positions() {
            match self.degree(p.0, p.1) {
                EntryDegree::Minus => {
                    rows.push(vec![(a1(p), one.clone())]);
                    rows.push(vec![(a2(p), one.clone())]);
                }
                EntryDegree::Zero => rows.push(vec![(a2(p), one.clone())]),
                EntryDegree::Plus => {}
            }
        }
        rows.extend(self.membership_rows(
            |p| vec![(a0(p), lambda.clone())],
            |p| match self.degree(p.0, p.1) {
                EntryDegree::Minus => vec![(a0(p), -x.clone())],
                EntryDegree::Zero => vec![(a1(p), one.clone())],
                EntryDegree::Plus => vec![(a2(p), one.clone())],
            },
        ));
        let null = dense(&rows, 3 * nn).nullspace();
        if null.len() != nn {
            return Err(Error::SingularParameter(format!("section space has dimension {} != {nn}", null.len())));
        }
        // residue b = -a₀ + a₁ + x a₂
        let residue = Matrix::from_fn(nn, null.len(), |r, c| {
            let v = &null[c];
            -v[r].clone() + v[nn + r].clone() + x.clone() * v[2 * nn + r].clone()
        });
        let inv = residue.inverse().map_err(|_| Error::SingularParameter("residue map is not bijective".into()))?;
        Ok(SectionSpace { n, x: x.clone(), basis: null, residue_inverse: inv })
    }

    /// `φ(b)` by solving for the section with residue `b`.
    pub fn phi_oracle(&self, lambda: &Rational, x: &Rational, y: &Rational, b: &MatQ) -> Result<MatQ> {
        check_point(x, y)?;
        self.section_space(lambda, x)?.phi(y, b)
    }

    /// `φ(b)` from the projector formula.
    pub fn phi_closed(&self, lambda: &Rational, x: &Rational, y: &Rational, b: &MatQ) -> Result<MatQ> {
        check_params(self.n(), lambda, x)?;
        check_point(x, y)?;
        let n = self.n();
        let lambda_inv = lambda.inv();
        let coef = y.clone() / (y.clone() - x.clone());
        // (1 - λσ)⁻¹ on the diagonal, summed over one period of σ
        let hb = self.project(Subspace::H, b);
        let mut h_inv = MatQ::zeros(n, n);
        let mut term = hb;
        let mut lk = Rational::one();
        for _ in 0..n {
            h_inv = h_inv.try_add(&term.scale(&lk))?;
            term = self.sigma_act(&term, false);
            lk *= lambda.clone();
        }
        let h_inv = h_inv.scale(&(Rational::one() - lambda.pow_i(n as i64)).inv());
        let phi0 = b.scale(&coef).try_sub(&self.project(Subspace::N1Plus, b))?.try_sub(&h_inv)?;

        let minus_seed = |part: Subspace| -> MatQ {
            let v = self.project(Subspace::A2Minus, &self.project(part, b));
            self.neumann(Theta::Minus, &lambda_inv, &self.sigma_act(&v, true).scale(&lambda_inv))
        };
        let plus_tail = self.neumann(Theta::Plus, lambda, &self.sigma_act(&self.project(Subspace::A1Plus, b), false));
        let phi_minus = minus_seed(Subspace::ODegZero);
        let psi_minus = minus_seed(Subspace::ODegMinus);
        let phi_plus = self.project(Subspace::ODegZero, &plus_tail).scale(lambda);
        let psi_plus = self.project(Subspace::ODegPlus, &plus_tail).scale(lambda);

        phi0.try_add(&phi_minus)?.try_sub(&phi_plus)?.try_add(&psi_minus.scale(x))?.try_sub(&psi_plus.scale(y))
    }

    /// `Σ_{i,j} φ(e_ij) ⊗ e_ji`.
    pub fn geometric_rmatrix(
        &self,
        lambda: &Rational,
        x: &Rational,
        y: &Rational,
        route: PhiRoute,
    ) -> Result<Tensor2Q> {
        let n = self.n();
        let space = match route {
            PhiRoute::Solve => Some(self.section_space(lambda, x)?),
            PhiRoute::Closed => None,
        };
        let mut r = Tensor2::zeros(n);
        for i in 1..=n {
            for j in 1..=n {
                let e = unit(n, i, j);
                let img = match &space {
                    Some(s) => s.phi(y, &e)?,
                    None => self.phi_closed(lambda, x, y, &e)?,
                };
                r = r.add(&Tensor2::outer(&img, &unit(n, j, i)))?;
            }
        }
        Ok(r)
    }
}

fn check_params(n: usize, lambda: &Rational, x: &Rational) -> Result<()> {
    if lambda.is_zero() || lambda.pow_i(n as i64).is_one() {
        return Err(Error::SingularParameter(format!("lambda = {lambda} has lambda^{n} = 1 or is zero")));
    }
    if x.is_zero() {
        return Err(Error::SingularParameter("x = 0".into()));
    }
    Ok(())
}

fn check_point(x: &Rational, y: &Rational) -> Result<()> {
    if y.is_zero() || x == y {
        return Err(Error::SingularParameter(format!("evaluation point y = {y} with x = {x}")));
    }
    Ok(())
}

/// Solved section space at fixed `(λ, x)`.
#[derive(Clone, Debug)]
pub struct SectionSpace {
    n: usize,
    x: Rational,
    /// Columns `(a₀, a₁, a₂)` stacked, one per basis section.
    basis: Vec<Vec<Rational>>,
    residue_inverse: MatQ,
}

impl SectionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Section with residue `b` as `(a₀, a₁, a₂)`.
    pub fn section(&self, b: &MatQ) -> Result<(MatQ, MatQ, MatQ)> {
        let n = self.n;
        let nn = n * n;
        let bv: Vec<Rational> = (0..nn).map(|k| b.get(k / n, k % n).clone()).collect();
        let c = self.residue_inverse.mul_vec(&bv)?;
        let mut v = vec![Rational::zero(); 3 * nn];
        for (coef, col) in c.iter().zip(&self.basis) {
            if coef.is_zero() {
                continue;
            }
            for (slot, e) in v.iter_mut().zip(col) {
                if !e.is_zero() {
                    *slot = slot.clone() + coef.clone() * e.clone();
                }
            }
        }
        Ok((unvec(n, &v[..nn]), unvec(n, &v[nn..2 * nn]), unvec(n, &v[2 * nn..])))
    }

    /// `a(y) = (-x a₀ + y a₁ + y² a₂) / (y - x)`.
    pub fn phi(&self, y: &Rational, b: &MatQ) -> Result<MatQ> {
        check_point(&self.x, y)?;
        let (a0, a1, a2) = self.section(b)?;
        let num = a0.scale(&-self.x.clone()).try_add(&a1.scale(y))?.try_add(&a2.scale(&(y.clone() * y.clone())))?;
        Ok(num.scale(&(y.clone() - self.x.clone()).inv()))
    }
}

fn dense(rows: &[LinForm], cols: usize) -> MatQ {
    let mut m = MatQ::zeros(rows.len(), cols);
    for (r, row) in rows.iter().enumerate() {
        for (k, c) in row {
            m.add_at(r, *k, c.clone());
        }
    }
    m
}

fn unvec(n: usize, v: &[Rational]) -> MatQ {
    Matrix::from_fn(n, n, |i, j| v[i * n + j].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc_bd::{Normalization, RawBdData};

    fn example_normalized() -> AssocBdData {
        let raw = RawBdData::parse(6, "(136245)", "{(6,1),(1,2)}", "{(2,3),(3,4)}").unwrap();
        AssocBdData::validate(&raw, Normalization::Auto).unwrap()
    }

    #[test]
    fn example_parabolic_dimensions() {
        let model = OrderModel::build(&example_normalized(), 1).unwrap();
        assert_eq!(model.dim_p1(), 24);
        assert_eq!(model.dim_p2(), 24);
        assert_eq!(model.basis().len(), 36);
    }

    #[test]
    fn example_theta_plus() {
        let model = OrderModel::build(&example_normalized(), 1).unwrap();
        let e12 = unit::<Rational>(6, 1, 2);
        assert_eq!(model.theta(Theta::Plus, &e12), unit(6, 3, 4));
        assert!(model.theta(Theta::Plus, &unit(6, 3, 4)).is_zero());
    }

    #[test]
    fn invalid_cut_point_rejected() {
        let d = example_normalized();
        assert!(matches!(OrderModel::build(&d, 4), Err(Error::InvalidM(4))));
    }

    #[test]
    fn unnormalized_rejected() {
        let raw = RawBdData::parse(6, "(136245)", "{(6,1),(1,2)}", "{(2,3),(3,4)}").unwrap();
        let d = AssocBdData::validate(&raw, Normalization::AsGiven).unwrap();
        assert_eq!(OrderModel::build(&d, 1).unwrap_err(), Error::UnnormalizedGamma);
    }

    #[test]
    fn identity_gluing_is_rejected_when_levis_differ() {
        let d = example_normalized();
        assert!(matches!(OrderModel::build_with(&d, 1, Gluing::Identity), Err(Error::LeviMismatch(_))));
    }
}
