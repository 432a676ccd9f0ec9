//! Associative Belavin-Drinfeld data on the `n`-gon and the derived index sets.
//!
//! Points are `1..=n`; arcs are the pairs `(i, i+1)` with `(n, 1)` closing the cycle.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub type Pair = (usize, usize);

/// Permutation of `1..=n` stored in one-line form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotCyclic(format!("{images:?} is not a permutation of 1..={n}")));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation such as `(136245)`, `(1 3 6)(2 4 5)` or `(1,3,6,2,4,5)`.
    ///
    /// Undelimited digit runs are read one digit per point, so they only make sense for `n <= 9`.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let body = s.trim();
        if body.is_empty() || body == "()" || body == "id" {
            return Ok(Perm { images });
        }
        for chunk in body.split('(').map(str::trim).filter(|c| !c.is_empty()) {
            let inner = chunk.strip_suffix(')').ok_or_else(|| Error::Parse(format!("unbalanced cycle in {s:?}")))?;
            let pts: Vec<usize> = if inner.contains([',', ' ']) {
                inner
                    .split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad point {t:?}"))))
                    .collect::<Result<_>>()?
            } else {
                inner
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad point {c:?}"))))
                    .collect::<Result<_>>()?
            };
            if let Some(bad) = pts.iter().find(|&&p| p == 0 || p > n) {
                return Err(Error::Parse(format!("point {bad} outside 1..={n}")));
            }
            // cycles are composed right to left, the rightmost acting first
            let mut cyc: Vec<usize> = (1..=n).collect();
            for w in 0..pts.len() {
                cyc[pts[w] - 1] = pts[(w + 1) % pts.len()];
            }
            let prev = images.clone();
            images = prev.iter().map(|&v| cyc[v - 1]).collect();
        }
        Self::from_images(images)
    }

    /// Cycle notation when the text contains `(`, otherwise one-line notation
    /// listing `σ(1) … σ(n)`, e.g. `3,4,6,5,1,2` or `346512`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let body = s.trim();
        if body.is_empty() || body.contains('(') || body == "id" {
            return Self::parse_cycles(body, n);
        }
        let images: Vec<usize> = if body.contains([',', ' ']) {
            body.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad point {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad point {c:?}"))))
                .collect::<Result<_>>()?
        };
        if images.len() != n {
            return Err(Error::Parse(format!("one-line permutation {s:?} has {} entries, expected {n}", images.len())));
        }
        Self::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn apply_pair(&self, p: Pair) -> Pair {
        (self.apply(p.0), self.apply(p.1))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm { images: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Perm { images: other.images.iter().map(|&v| self.apply(v)).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let id = Perm { images: (1..=self.n()).collect() };
        (0..k.unsigned_abs()).fold(id, |acc, _| base.compose(&acc))
    }

    pub fn is_single_cycle(&self) -> bool {
        let n = self.n();
        let mut i = 1;
        for step in 1..=n {
            i = self.apply(i);
            if i == 1 {
                return step == n;
            }
        }
        false
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

impl fmt::Display for Perm {
    /// Cycle notation with comma separated points, each cycle starting at its least point.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.n()];
        let mut any = false;
        for start in 1..=self.n() {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            any = true;
            let mut pts = vec![start];
            seen[start - 1] = true;
            let mut i = self.apply(start);
            while i != start {
                seen[i - 1] = true;
                pts.push(i);
                i = self.apply(i);
            }
            let body: Vec<String> = pts.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(","))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses a list of pairs such as `{(6,1),(1,2)}`; any non-digit separates numbers.
pub fn parse_pairs(s: &str) -> Result<Vec<Pair>> {
    let nums: Vec<usize> = s
        .split(|c: char| !c.is_ascii_digit())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad number {t:?}"))))
        .collect::<Result<_>>()?;
    if !nums.len().is_multiple_of(2) {
        return Err(Error::Parse(format!("odd number of entries in pair list {s:?}")));
    }
    Ok(nums.chunks(2).map(|c| (c[0], c[1])).collect())
}

/// Unvalidated input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawBdData {
    pub n: usize,
    pub sigma: Perm,
    pub gamma1: Vec<Pair>,
    pub gamma2: Vec<Pair>,
}

impl RawBdData {
    /// Convenience constructor from cycle notation and pair lists.
    pub fn parse(n: usize, sigma: &str, gamma1: &str, gamma2: &str) -> Result<Self> {
        Ok(RawBdData { n, sigma: Perm::parse(sigma, n)?, gamma1: parse_pairs(gamma1)?, gamma2: parse_pairs(gamma2)? })
    }
}

/// How to treat data with `(n, 1) ∈ Γ₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Accept the labels as given.
    AsGiven,
    /// Reject with [`Error::UnnormalizedGamma`].
    Require,
    /// Rotate labels by the least shift that moves `(n, 1)` out of `Γ₁`.
    Auto,
}

/// Validated associative BD data `(σ, Γ₁, Γ₂)` with its chain sets `Π₁`, `Π₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocBdData {
    n: usize,
    sigma: Perm,
    gamma1: BTreeSet<Pair>,
    gamma2: BTreeSet<Pair>,
    pi1: BTreeSet<Pair>,
    pi2: BTreeSet<Pair>,
    shift: usize,
}

/// Successor on the `n`-gon.
pub fn succ(n: usize, i: usize) -> usize {
    i % n + 1
}

/// Predecessor on the `n`-gon.
pub fn pred(n: usize, i: usize) -> usize {
    (i + n - 2) % n + 1
}

pub fn is_arc(n: usize, p: Pair) -> bool {
    (1..=n).contains(&p.0) && p.1 == succ(n, p.0)
}

/// All pairs `(i, σ₀^r(i))` whose chain of consecutive arcs lies in `gamma`.
pub fn chain_closure(n: usize, gamma: &BTreeSet<Pair>) -> BTreeSet<Pair> {
    let mut out = BTreeSet::new();
    for i in 1..=n {
        let mut j = i;
        for _ in 0..n {
            if !gamma.contains(&(j, succ(n, j))) {
                break;
            }
            j = succ(n, j);
            if j == i {
                break;
            }
            out.insert((i, j));
        }
    }
    out
}

fn rotate(n: usize, s: usize, i: usize) -> usize {
    (i - 1 + s) % n + 1
}

impl AssocBdData {
    pub fn validate(raw: &RawBdData, mode: Normalization) -> Result<Self> {
        let n = raw.n;
        if n < 2 || raw.sigma.n() != n {
            return Err(Error::NotCyclic(format!("sigma acts on {} points, n = {n}", raw.sigma.n())));
        }
        if !raw.sigma.is_single_cycle() {
            return Err(Error::NotCyclic(raw.sigma.to_string()));
        }
        let as_set = |g: &[Pair], name: &str| -> Result<BTreeSet<Pair>> {
            let set: BTreeSet<Pair> = g.iter().copied().collect();
            if let Some(p) = set.iter().find(|&&p| !is_arc(n, p)) {
                return Err(Error::NotProperSubset(format!("{name} contains {p:?}, which is not an arc")));
            }
            if set.len() >= n {
                return Err(Error::NotProperSubset(format!("{name} contains every arc")));
            }
            Ok(set)
        };
        let gamma1 = as_set(&raw.gamma1, "gamma1")?;
        let gamma2 = as_set(&raw.gamma2, "gamma2")?;
        let image: BTreeSet<Pair> = gamma1.iter().map(|&p| raw.sigma.apply_pair(p)).collect();
        if image != gamma2 {
            return Err(Error::GammaMismatch(format!("sigma(gamma1) = {image:?}, gamma2 = {gamma2:?}")));
        }
        let data = Self::assemble(n, raw.sigma.clone(), gamma1, gamma2, 0);
        if data.is_normalized() {
            return Ok(data);
        }
        match mode {
            Normalization::AsGiven => Ok(data),
            Normalization::Require => Err(Error::UnnormalizedGamma),
            Normalization::Auto => {
                let s = (1..n)
                    .find(|&s| !data.gamma1.contains(&(rotate(n, n - s, n), rotate(n, n - s, 1))))
                    .expect("a proper subset misses some arc");
                Ok(data.relabel(s))
            }
        }
    }

    fn assemble(n: usize, sigma: Perm, gamma1: BTreeSet<Pair>, gamma2: BTreeSet<Pair>, shift: usize) -> Self {
        let pi1 = chain_closure(n, &gamma1);
        let pi2 = chain_closure(n, &gamma2);
        AssocBdData { n, sigma, gamma1, gamma2, pi1, pi2, shift }
    }

    /// Relabels every point `i ↦ i + s (mod n)`.
    pub fn relabel(&self, s: usize) -> Self {
        let n = self.n;
        let rho = |i| rotate(n, s, i);
        let images: Vec<usize> = (1..=n).map(|i| rho(self.sigma.apply(rotate(n, n - s, i)))).collect();
        let sigma = Perm::from_images(images).expect("conjugate of a permutation");
        let map = |g: &BTreeSet<Pair>| g.iter().map(|&(a, b)| (rho(a), rho(b))).collect();
        Self::assemble(n, sigma, map(&self.gamma1), map(&self.gamma2), (self.shift + s) % n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    pub fn gamma1(&self) -> &BTreeSet<Pair> {
        &self.gamma1
    }

    pub fn gamma2(&self) -> &BTreeSet<Pair> {
        &self.gamma2
    }

    pub fn pi1(&self) -> &BTreeSet<Pair> {
        &self.pi1
    }

    pub fn pi2(&self) -> &BTreeSet<Pair> {
        &self.pi2
    }

    /// Label rotation applied by [`Normalization::Auto`] (0 when none).
    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn is_normalized(&self) -> bool {
        !self.gamma1.contains(&(self.n, 1))
    }

    /// `τ^k(α)`, defined iff `σ^i(α) ∈ Π₁` for `0 <= i < k`.
    pub fn tau_pow(&self, alpha: Pair, k: usize) -> Option<Pair> {
        let mut cur = alpha;
        for _ in 0..k {
            if !self.pi1.contains(&cur) {
                return None;
            }
            cur = self.sigma.apply_pair(cur);
        }
        Some(cur)
    }

    /// `[τ(α), τ²(α), …]` while defined.
    pub fn tau_orbit(&self, alpha: Pair) -> Vec<Pair> {
        (1..=self.n).map_while(|k| self.tau_pow(alpha, k)).collect()
    }

    /// Cut points `m` with `(σ₀⁻¹(m), m) ∉ Γ₂`.
    pub fn valid_m(&self) -> Vec<usize> {
        (1..=self.n).filter(|&m| !self.gamma2.contains(&(pred(self.n, m), m))).collect()
    }

    pub fn choose_m(&self) -> usize {
        self.valid_m()[0]
    }

    /// `(σ⁻¹, Γ₂, Γ₁)`.
    pub fn reverse(&self) -> Self {
        Self::assemble(self.n, self.sigma.inverse(), self.gamma2.clone(), self.gamma1.clone(), self.shift)
    }

    pub fn to_raw(&self) -> RawBdData {
        RawBdData {
            n: self.n,
            sigma: self.sigma.clone(),
            gamma1: self.gamma1.iter().copied().collect(),
            gamma2: self.gamma2.iter().copied().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_raw() -> RawBdData {
        RawBdData::parse(6, "(136245)", "{(6,1),(1,2)}", "{(2,3),(3,4)}").unwrap()
    }

    #[test]
    fn cycle_parsing_and_inverse() {
        let s = Perm::parse_cycles("(136245)", 6).unwrap();
        assert_eq!(s.images(), &[3, 4, 6, 5, 1, 2]);
        assert_eq!(s.inverse().to_string(), "(1,5,4,2,6,3)");
        assert!(s.is_single_cycle());
        assert_eq!(Perm::parse_cycles("(1,3,6,2,4,5)", 6).unwrap(), s);
    }

    #[test]
    fn one_line_notation() {
        let s = Perm::parse_cycles("(136245)", 6).unwrap();
        assert_eq!(Perm::parse("346512", 6).unwrap(), s);
        assert_eq!(Perm::parse("3, 4, 6, 5, 1, 2", 6).unwrap(), s);
        assert!(matches!(Perm::parse("34651", 6), Err(Error::Parse(_))));
    }

    #[test]
    fn example_pi_and_tau() {
        let d = AssocBdData::validate(&example_raw(), Normalization::AsGiven).unwrap();
        let pi1: BTreeSet<Pair> = [(6, 1), (1, 2), (6, 2)].into_iter().collect();
        assert_eq!(d.pi1(), &pi1);
        assert_eq!(d.tau_pow((6, 1), 1), Some((2, 3)));
        assert_eq!(d.tau_pow((1, 2), 1), Some((3, 4)));
        assert_eq!(d.tau_pow((6, 2), 1), Some((2, 4)));
        for a in [(6, 1), (1, 2), (6, 2)] {
            assert_eq!(d.tau_pow(a, 2), None);
        }
    }

    #[test]
    fn example_cut_points() {
        let d = AssocBdData::validate(&example_raw(), Normalization::AsGiven).unwrap();
        assert_eq!(d.valid_m(), vec![1, 2, 5, 6]);
        assert_eq!(d.choose_m(), 1);
    }

    #[test]
    fn require_rejects_unnormalized() {
        assert_eq!(AssocBdData::validate(&example_raw(), Normalization::Require), Err(Error::UnnormalizedGamma));
    }

    #[test]
    fn auto_normalization_rotates_by_one() {
        let d = AssocBdData::validate(&example_raw(), Normalization::Auto).unwrap();
        assert_eq!(d.shift(), 1);
        assert!(d.is_normalized());
        assert_eq!(d.gamma1().iter().copied().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
        assert_eq!(d.gamma2().iter().copied().collect::<Vec<_>>(), vec![(3, 4), (4, 5)]);
        assert_eq!(d.sigma().to_string(), "(1,3,5,6,2,4)");
    }

    #[test]
    fn non_cycle_rejected() {
        let raw = RawBdData::parse(4, "(12)(34)", "", "").unwrap();
        assert!(matches!(AssocBdData::validate(&raw, Normalization::AsGiven), Err(Error::NotCyclic(_))));
    }

    #[test]
    fn full_gamma_rejected() {
        let raw = RawBdData::parse(3, "(123)", "(1,2),(2,3),(3,1)", "(2,3),(3,1),(1,2)").unwrap();
        assert!(matches!(AssocBdData::validate(&raw, Normalization::AsGiven), Err(Error::NotProperSubset(_))));
    }

    #[test]
    fn mismatched_image_rejected() {
        let raw = RawBdData::parse(4, "(1234)", "(1,2)", "(3,4)").unwrap();
        assert!(matches!(AssocBdData::validate(&raw, Normalization::AsGiven), Err(Error::GammaMismatch(_))));
    }
}
