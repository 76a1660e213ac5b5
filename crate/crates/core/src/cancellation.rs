//! Symmetric characteristic-class series in formal Chern roots, and the
//! exact solution of the `L̂ = Σ 2^{e_b} Â·ch(h_b)` cancellation identity by
//! level-2 modular-form linear algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{factorial, pow, rat, HalfInt, PowerSeries, QAlgebra, QSeries, Ring};
use crate::error::{Error, Result};
use crate::lambda_ring::ThetaVariant;
use crate::modforms::{modform_qexp, ModForm};
use crate::{Rational, RationalSeries};

/// Parts `r` of a monomial `∏ p_r` in the power sums `p_r = Σ_j x_j^{2r}`, non-increasing.
pub type Partition = Vec<u32>;

/// A symmetric series in Chern roots `x_j`, stored in the power-sum basis.
///
/// `p_r` has cohomological weight `4r`. Terms of weight above `4·cutoff`
/// are discarded; a `None` cutoff marks an exact polynomial.
#[derive(Clone, Debug)]
pub struct ChernRootSeries {
    terms: BTreeMap<Partition, Rational>,
    cutoff: Option<u32>,
}

fn degree(p: &[u32]) -> u32 {
    p.iter().sum()
}

fn merge(a: &[u32], b: &[u32]) -> Partition {
    let mut v: Partition = a.iter().chain(b).copied().collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

fn min_cutoff(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// All partitions of `n`, parts non-increasing, in lexicographically decreasing order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl ChernRootSeries {
    fn normalize(mut self) -> Self {
        self.terms.retain(|p, c| !c.is_zero() && self.cutoff.is_none_or(|k| degree(p) <= k));
        self
    }

    pub fn zero_with(cutoff: u32) -> Self {
        ChernRootSeries {
            terms: BTreeMap::new(),
            cutoff: Some(cutoff),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([(Vec::new(), c)], None)
    }

    /// `c · p_r`.
    pub fn power_sum(r: u32, c: Rational, cutoff: u32) -> Self {
        Self::from_terms([(vec![r], c)], Some(cutoff))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>, cutoff: Option<u32>) -> Self {
        let mut map = BTreeMap::new();
        for (mut p, c) in terms {
            assert!(p.iter().all(|&r| r > 0), "power sums are indexed from 1");
            p.sort_unstable_by(|x, y| y.cmp(x));
            *map.entry(p).or_insert_with(Rational::zero) += c;
        }
        ChernRootSeries { terms: map, cutoff }.normalize()
    }

    pub fn cutoff(&self) -> Option<u32> {
        self.cutoff
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &[u32]) -> Rational {
        let mut key = p.to_vec();
        key.sort_unstable_by(|x, y| y.cmp(x));
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&[])
    }

    pub fn with_cutoff(&self, cutoff: u32) -> Self {
        ChernRootSeries {
            terms: self.terms.clone(),
            cutoff: min_cutoff(self.cutoff, Some(cutoff)),
        }
        .normalize()
    }

    /// The part of cohomological weight exactly `4d`, as an exact polynomial.
    pub fn homogeneous(&self, d: u32) -> Self {
        ChernRootSeries {
            terms: self.terms.iter().filter(|(p, _)| degree(p) == d).map(|(p, c)| (p.clone(), c.clone())).collect(),
            cutoff: None,
        }
    }

    /// Largest cohomological weight among stored terms.
    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(|p| 4 * degree(p)).max()
    }

    /// Evaluates at explicit roots `x_1, …, x_n`.
    pub fn eval_roots(&self, roots: &[Rational]) -> Rational {
        let top = self.terms.keys().flat_map(|p| p.iter().copied()).max().unwrap_or(0);
        let squares: Vec<Rational> = roots.iter().map(|x| x * x).collect();
        let sums: Vec<Rational> = (0..=top)
            .map(|r| squares.iter().fold(Rational::zero(), |acc, y| acc + pow(y, r as u64)))
            .collect();
        self.terms.iter().fold(Rational::zero(), |acc, (p, c)| {
            acc + p.iter().fold(c.clone(), |m, &r| m * &sums[r as usize])
        })
    }

    /// `exp` of a series with zero constant term; needs a finite cutoff.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let k = self
            .cutoff
            .ok_or_else(|| Error::InvalidArgument("exp of an untruncated Chern-root series".into()))?;
        let mut out = Self::constant(rat(1)).with_cutoff(k);
        let mut power = out.clone();
        for n in 1..=k {
            power = (power * self).scale(&Rational::new(BigInt::one(), BigInt::from(n)));
            out = out + &power;
        }
        Ok(out)
    }
}

impl PartialEq for ChernRootSeries {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl fmt::Display for ChernRootSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for r in p {
                write!(f, "*p{r}")?;
            }
        }
        Ok(())
    }
}

impl Add<&ChernRootSeries> for ChernRootSeries {
    type Output = ChernRootSeries;
    fn add(mut self, rhs: &ChernRootSeries) -> ChernRootSeries {
        for (p, c) in &rhs.terms {
            *self.terms.entry(p.clone()).or_insert_with(Rational::zero) += c;
        }
        self.cutoff = min_cutoff(self.cutoff, rhs.cutoff);
        self.normalize()
    }
}

impl Sub<&ChernRootSeries> for ChernRootSeries {
    type Output = ChernRootSeries;
    fn sub(self, rhs: &ChernRootSeries) -> ChernRootSeries {
        self + &(-rhs.clone())
    }
}

impl Mul<&ChernRootSeries> for ChernRootSeries {
    type Output = ChernRootSeries;
    fn mul(self, rhs: &ChernRootSeries) -> ChernRootSeries {
        let cutoff = min_cutoff(self.cutoff, rhs.cutoff);
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                if cutoff.is_some_and(|k| degree(a) + degree(b) > k) {
                    continue;
                }
                *terms.entry(merge(a, b)).or_insert_with(Rational::zero) += x * y;
            }
        }
        ChernRootSeries { terms, cutoff }.normalize()
    }
}

impl Neg for ChernRootSeries {
    type Output = ChernRootSeries;
    fn neg(mut self) -> ChernRootSeries {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Zero for ChernRootSeries {
    fn zero() -> Self {
        ChernRootSeries {
            terms: BTreeMap::new(),
            cutoff: None,
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ChernRootSeries {
    fn one() -> Self {
        Self::constant(rat(1))
    }
}

impl std::ops::Add for ChernRootSeries {
    type Output = ChernRootSeries;
    fn add(self, rhs: ChernRootSeries) -> ChernRootSeries {
        self + &rhs
    }
}

impl std::ops::Mul for ChernRootSeries {
    type Output = ChernRootSeries;
    fn mul(self, rhs: ChernRootSeries) -> ChernRootSeries {
        self * &rhs
    }
}

impl Ring for ChernRootSeries {
    fn try_inverse(&self) -> Option<Self> {
        let c = self.constant_term();
        if c.is_zero() {
            return None;
        }
        let k = match self.cutoff {
            Some(k) => k,
            None if self.terms.len() == 1 => return Some(Self::constant(c.recip())),
            None => return None,
        };
        // (c(1 + n))⁻¹ = c⁻¹ Σ (−n)^i with n nilpotent below the cutoff
        let n = (self.scale(&c.recip()) - &Self::one()).with_cutoff(k);
        let mut out = Self::one().with_cutoff(k);
        let mut power = out.clone();
        for _ in 0..k {
            power = -(power * &n);
            out = out + &power;
        }
        Some(out.scale(&c.recip()))
    }
}

impl QAlgebra for ChernRootSeries {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(q.clone())
    }

    fn scale(&self, q: &Rational) -> Self {
        ChernRootSeries {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * q)).collect(),
            cutoff: self.cutoff,
        }
        .normalize()
    }
}

/// `Σ_{n≤k} y^n / (4^n (2n+1)!)`, the series of `sinh(x/2)/(x/2)` in `y = x²`.
fn sinhc_half(k: usize) -> PowerSeries<Rational> {
    PowerSeries::from_fn(k, |n| (factorial(2 * n as u64 + 1) * pow(&rat(4), n as u64)).recip())
}

/// `Σ_{n≤k} y^n / (4^n (2n)!)`, the series of `cosh(x/2)` in `y = x²`.
fn cosh_half(k: usize) -> PowerSeries<Rational> {
    PowerSeries::from_fn(k, |n| (factorial(2 * n as u64) * pow(&rat(4), n as u64)).recip())
}

fn exp_power_sums(logs: &PowerSeries<Rational>, k: u32) -> ChernRootSeries {
    let s = ChernRootSeries::from_terms((1..=k).map(|r| (vec![r], logs.coeffs()[r as usize].clone())), Some(k));
    s.exp().expect("power sums have no constant term")
}

/// `Â = ∏_j (x_j/2)/sinh(x_j/2)`, through weight `4k`.
pub fn a_hat(k: u32) -> ChernRootSeries {
    let log = sinhc_half(k as usize).log().expect("unit constant term");
    exp_power_sums(&(-&log), k)
}

/// `L̂ = ∏_j x_j/tanh(x_j/2)` over the `2k` roots of a `4k`-manifold, through weight `4k`.
pub fn l_hat(k: u32) -> ChernRootSeries {
    let n = k as usize;
    let log = &cosh_half(n).log().expect("unit constant term") - &sinhc_half(n).log().expect("unit constant term");
    exp_power_sums(&log, k).scale(&pow(&rat(2), 2 * k as u64))
}

/// `Σ_r g_r(q) p_r` with `ch Θ(T̃_ℂ) = exp(Σ_r g_r p_r)`.
fn theta_log(k: u32, variant: ThetaVariant, n: u32) -> QSeries<ChernRootSeries> {
    let top = 2 * n as usize;
    let mut g: Vec<ChernRootSeries> = vec![ChernRootSeries::zero_with(k); top + 1];
    for r in 1..=k {
        let weight = rat(2) / factorial(2 * r as u64);
        let mut add = |h: usize, c: Rational| {
            if h <= top {
                g[h] = g[h].clone() + &ChernRootSeries::power_sum(r, c * &weight, k);
            }
        };
        let kk = |j: usize| pow(&rat(j as i64), 2 * r as u64 - 1);
        // S_{q^m}(T̃): Σ_m Σ_j j^{2r−1} q^{mj}
        for m in 1..=n as usize {
            for j in 1..=(n as usize / m) {
                add(2 * m * j, kk(j));
            }
        }
        match variant {
            ThetaVariant::Theta => {}
            // Λ_{q^m}(T̃)
            ThetaVariant::Theta1 => {
                for m in 1..=n as usize {
                    for j in 1..=(n as usize / m) {
                        let s = if j % 2 == 1 { kk(j) } else { -kk(j) };
                        add(2 * m * j, s);
                    }
                }
            }
            // Λ_{−q^{m−1/2}}(T̃)
            ThetaVariant::Theta2 => {
                for m in 1..=n as usize {
                    for j in 1..=top / (2 * m - 1) {
                        add((2 * m - 1) * j, -kk(j));
                    }
                }
            }
        }
    }
    QSeries::from_half_fn(n, |h| g[h].clone())
}

/// `ch Θ(T̃_ℂ M)` as a q-series of Chern-root series through `q^n`.
pub fn ch_theta_series(k: u32, variant: ThetaVariant, n: u32) -> QSeries<ChernRootSeries> {
    theta_log(k, variant, n).exp().expect("no constant term in q")
}

/// `ch` of the grade-`grade` coefficient bundle of `Θ_variant(T̃_ℂ M)`.
pub fn ch_witten(k: u32, variant: ThetaVariant, grade: HalfInt) -> Result<ChernRootSeries> {
    if grade.halves() < 0 {
        return Err(Error::GradeOutOfRange { grade, truncation: 0 });
    }
    let n = (grade.halves() as u32).div_ceil(2);
    Ok(ch_theta_series(k, variant, n).checked_coeff(grade)?.clone())
}

/// `{Â · ch Θ₂}^{(4k)}` or `{L̂ · ch Θ₁}^{(4k)}` for each half-grade.
fn top_form_series(k: u32, genus: &ChernRootSeries, variant: ThetaVariant, n: u32) -> QSeries<ChernRootSeries> {
    ch_theta_series(k, variant, n).map(|c| (genus.clone() * c).homogeneous(k))
}

/// `(8δ₂)^{m−2b} ε₂^b` through `q^n`.
pub fn p2_basis(m: u32, b: u32, n: u32) -> RationalSeries {
    assert!(2 * b <= m);
    let d = modform_qexp(ModForm::Delta2, n).series.scale(&rat(8));
    let e = modform_qexp(ModForm::Epsilon2, n).series;
    &d.pow((m - 2 * b) as u64) * &e.pow(b as u64)
}

/// `(8δ₁)^{m−2b} ε₁^b` through `q^n`.
pub fn p1_basis(m: u32, b: u32, n: u32) -> RationalSeries {
    assert!(2 * b <= m);
    let d = modform_qexp(ModForm::Delta1, n).series.scale(&rat(8));
    let e = modform_qexp(ModForm::Epsilon1, n).series;
    &d.pow((m - 2 * b) as u64) * &e.pow(b as u64)
}

/// Coefficients `h_b` with `s = Σ_b h_b (8δ₂)^{m−2b} ε₂^b` through `q^n`.
///
/// The basis element of index `b` starts at `q^{b/2}` with coefficient
/// `(−1)^{m−2b}`, so the system is triangular on half-grades `0..=⌊m/2⌋`;
/// the remaining grades check that `s` lies in the span.
pub fn p2_decompose(s: &RationalSeries, m: u32, n: u32) -> Result<Vec<Rational>> {
    let top = m / 2;
    if n < top.div_ceil(2) || s.truncation() < n {
        return Err(Error::InvalidArgument(format!(
            "need q-order {} (and an input known that far) to decompose weight {}",
            top.div_ceil(2),
            2 * m
        )));
    }
    let basis: Vec<RationalSeries> = (0..=top).map(|b| p2_basis(m, b, n)).collect();
    let mut h = Vec::with_capacity(basis.len());
    let mut rest = s.truncate(n);
    for (b, e) in basis.iter().enumerate() {
        let c = rest.coeff_half(b).clone() / e.coeff_half(b);
        rest = &rest - &e.scale(&c);
        h.push(c);
    }
    if let Some((g, _)) = rest.grades().find(|(_, c)| !c.is_zero()) {
        return Err(Error::InconsistentSystem(format!(
            "series is not in the span of (8 delta2)^(m-2b) epsilon2^b: mismatch at grade {g}"
        )));
    }
    Ok(h)
}

/// Exact solution of an overdetermined linear system by Gaussian elimination.
pub fn solve_exact(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Result<Vec<Rational>> {
    let unknowns = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..unknowns {
        let Some(p) = (pivot_row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            return Err(Error::SingularSystem(format!("no pivot in column {col}")));
        };
        rows.swap(pivot_row, p);
        rhs.swap(pivot_row, p);
        let inv = rows[pivot_row][col].recip();
        for i in 0..rows.len() {
            if i == pivot_row || rows[i][col].is_zero() {
                continue;
            }
            let f = &rows[i][col] * &inv;
            for j in col..unknowns {
                let d = &f * &rows[pivot_row][j];
                rows[i][j] -= d;
            }
            let d = &f * &rhs[pivot_row];
            rhs[i] -= d;
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rhs[pivot_row..].iter().any(|c| !c.is_zero()) {
        return Err(Error::InconsistentSystem("right-hand side is not in the column span".into()));
    }
    Ok(pivots.iter().enumerate().map(|(col, &r)| &rhs[r] / &rows[r][col]).collect())
}

/// `e` with `c = 2^e`, if `c` is a power of two.
pub fn log2_exact(c: &Rational) -> Option<i64> {
    if !c.is_positive() {
        return None;
    }
    let two_power = |x: &BigInt| -> Option<i64> {
        let t = x.trailing_zeros()?;
        (x >> t as usize == BigInt::one()).then_some(t as i64)
    };
    Some(two_power(c.numer())? - two_power(c.denom())?)
}

/// Outcome of solving `{L̂}^{(4k)} = Σ_b c_b {Â·ch(h_b)}^{(4k)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CancellationReport {
    pub k: u32,
    pub q_order: u32,
    /// `h_b = {Â·ch(h_b)}^{(4k)}`, read off the `(8δ₂)^{k−2b}ε₂^b` decomposition.
    pub h: Vec<ChernRootSeries>,
    /// Solved scalars `c_b`.
    pub coefficients: Vec<Rational>,
    /// `log₂ c_b` where `c_b` is a power of two.
    pub exponents: Vec<Option<i64>>,
    /// Whether `e_b = 3k − 6b` for every `b`.
    pub graded_schedule: bool,
    /// Whether `e_b = 3k − 6⌊k/2⌋` for every `b`.
    pub uniform_schedule: bool,
    /// `{L̂}^{(4k)} − Σ_b c_b h_b`.
    pub residual: ChernRootSeries,
    /// `{L̂·ch Θ₁}^{(4k)} − 2^{2k} Σ_b h_b (8δ₁)^{k−2b}ε₁^b` through `q^{q_order}`.
    pub p1_residual: QSeries<ChernRootSeries>,
}

impl CancellationReport {
    pub fn is_success(&self) -> bool {
        self.residual.is_zero() && self.p1_residual.is_zero()
    }
}

/// Decomposes `{Â·ch Θ₂(T̃_ℂ)}^{(4k)}` in the level-2 basis and solves for the
/// scalars expressing `{L̂}^{(4k)}` in the resulting classes.
pub fn solve_cancellation(k: u32, q_order: u32) -> Result<CancellationReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let top = k / 2;
    if q_order < top + 1 {
        return Err(Error::InvalidArgument(format!("q-order must be at least {}", top + 1)));
    }
    let n = q_order;
    let p2 = top_form_series(k, &a_hat(k), ThetaVariant::Theta2, n);
    let parts = partitions(k);
    let mut h: Vec<Vec<(Partition, Rational)>> = vec![Vec::new(); top as usize + 1];
    for p in &parts {
        let s: RationalSeries = p2.map(|c| c.coeff(p));
        for (b, c) in p2_decompose(&s, k, n)?.into_iter().enumerate() {
            h[b].push((p.clone(), c));
        }
    }
    let h: Vec<ChernRootSeries> = h.into_iter().map(|t| ChernRootSeries::from_terms(t, None)).collect();

    let l = l_hat(k).homogeneous(k);
    let rows = parts.iter().map(|p| h.iter().map(|hb| hb.coeff(p)).collect()).collect();
    let rhs = parts.iter().map(|p| l.coeff(p)).collect();
    let coefficients = solve_exact(rows, rhs)?;
    let exponents: Vec<Option<i64>> = coefficients.iter().map(log2_exact).collect();
    let graded_schedule = exponents.iter().enumerate().all(|(b, e)| *e == Some(3 * k as i64 - 6 * b as i64));
    let uniform_schedule = exponents.iter().all(|e| *e == Some(3 * k as i64 - 6 * top as i64));
    let residual = h.iter().zip(&coefficients).fold(l, |acc, (hb, c)| acc - &hb.scale(c));

    let p1 = top_form_series(k, &l_hat(k), ThetaVariant::Theta1, n);
    let scale = pow(&rat(2), 2 * k as u64);
    let mut predicted = QSeries::<ChernRootSeries>::zero(n);
    for (b, hb) in h.iter().enumerate() {
        let basis = p1_basis(k, b as u32, n);
        predicted = &predicted + &basis.map(|c| hb.scale(&(c * &scale)));
    }
    let p1_residual = &p1 - &predicted;

    Ok(CancellationReport {
        k,
        q_order,
        h,
        coefficients,
        exponents,
        graded_schedule,
        uniform_schedule,
        residual,
        p1_residual,
    })
}

/// Floating-point value of a rational, for numeric cross-checks.
pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
