//! Lefschetz numbers of twisted Dirac and signature operators for weighted
//! circle actions `λ·[z₀:…:z_{2l−1}] = [λ^{a₀}z₀:…]` on `ℂP^{2l−1}`.
//!
//! The fixed points are the coordinate lines. At the `j`-th one the tangent
//! weights are `a_s − a_j`; with `λ = μ²` the Dirac contribution is
//!
//! ```text
//! σ_j ∏_{s≠j} 1 / (μ^{w_s} − μ^{−w_s}),   w_s = |a_s − a_j|,
//! ```
//!
//! where `σ_j = (−1)^{#{s : a_s < a_j}}` records the orientation flips hidden
//! in the absolute values. Each q-grade of the sum over fixed points is
//! computed exactly as a rational function in `μ` and must reduce to a
//! Laurent polynomial with even exponents.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{rat, CyclotomicTable, HalfInt, Poly, PowerSeries};
use crate::error::{Error, Result};
use crate::lambda_ring::{theta_bundle, ThetaVariant, VirtualChar};
use crate::{CharSeries, Laurent, RatFunc, Rational};

/// A validated, ascending list of `2l` distinct integers with even sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    weights: Vec<i64>,
}

impl WeightVector {
    pub fn new(mut weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() || !weights.len().is_multiple_of(2) {
            return Err(Error::BadWeightCount(weights.len()));
        }
        weights.sort_unstable();
        if let Some(w) = weights.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::DuplicateWeights(w[0]));
        }
        let sum: i64 = weights.iter().sum();
        if sum % 2 != 0 {
            return Err(Error::OddWeightSum(sum));
        }
        Ok(WeightVector { weights })
    }

    /// Sorted weights.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// `l`, so that the space is `ℂP^{2l−1}`.
    pub fn l(&self) -> usize {
        self.weights.len() / 2
    }

    /// Complex dimension `2l − 1`.
    pub fn complex_dim(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn fixed_points(&self) -> Vec<FixedPointDatum> {
        (0..self.weights.len())
            .map(|j| {
                let a = self.weights[j];
                let below = self.weights.iter().filter(|&&b| b < a).count();
                let tangent: Vec<i64> = self
                    .weights
                    .iter()
                    .enumerate()
                    .filter(|&(s, _)| s != j)
                    .map(|(_, &b)| (b - a).abs())
                    .collect();
                FixedPointDatum {
                    index: j,
                    weight: a,
                    tangent,
                    sign: if below % 2 == 0 { 1 } else { -1 },
                }
            })
            .collect()
    }
}

impl FromStr for WeightVector {
    type Err = Error;
    /// Comma-separated integers, e.g. `0,1,2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let w = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        WeightVector::new(w)
    }
}

/// Local data at one fixed point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FixedPointDatum {
    pub index: usize,
    /// `a_j`.
    pub weight: i64,
    /// `|a_s − a_j|` for `s ≠ j`, in the order of the sorted weights.
    pub tangent: Vec<i64>,
    /// `σ_j = ±1`.
    pub sign: i8,
}

impl FixedPointDatum {
    /// `Σ_s w_s`.
    pub fn weight_sum(&self) -> i64 {
        self.tangent.iter().sum()
    }

    /// Character of `T_ℂ` at the point, `Σ_s (λ^{w_s} + λ^{−w_s})`.
    pub fn complexified_tangent(&self) -> VirtualChar {
        let ws: Vec<i64> = self.tangent.iter().flat_map(|&w| [w, -w]).collect();
        VirtualChar::from_weights(&ws)
    }
}

/// Validates raw weights and returns the fixed-point data in sorted order.
pub fn validate_weights(weights: &[i64]) -> Result<Vec<FixedPointDatum>> {
    let w = WeightVector::new(weights.to_vec())?;
    let pts = w.fixed_points();
    debug_assert!(pts.iter().all(|p| p.weight_sum() % 2 == 0));
    Ok(pts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Operator {
    #[default]
    Dirac,
    Signature,
}

impl FromStr for Operator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dirac" => Ok(Operator::Dirac),
            "signature" => Ok(Operator::Signature),
            _ => Err(Error::Parse(format!("unknown operator {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Twist {
    #[default]
    None,
    Theta,
    Theta1,
    Theta2,
}

impl Twist {
    fn variant(self) -> Option<ThetaVariant> {
        match self {
            Twist::None => None,
            Twist::Theta => Some(ThetaVariant::Theta),
            Twist::Theta1 => Some(ThetaVariant::Theta1),
            Twist::Theta2 => Some(ThetaVariant::Theta2),
        }
    }
}

impl FromStr for Twist {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Twist::None),
            "theta" => Ok(Twist::Theta),
            "theta1" => Ok(Twist::Theta1),
            "theta2" => Ok(Twist::Theta2),
            _ => Err(Error::Parse(format!("unknown twist {s:?}"))),
        }
    }
}

/// Whether the orientation signs `σ_j` are applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum SignConvention {
    #[default]
    Signed,
    /// Every `σ_j = 1`; for comparison only, this is not Laurent in general.
    Unsigned,
}

/// How each q-grade of the fixed-point sum is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// Common denominator kept factored into cyclotomic polynomials.
    #[default]
    Factored,
    /// Term-by-term sum of reduced rational functions.
    Naive,
    /// Laurent expansion at `μ = 0`, checked to terminate.
    MuSeries,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Options {
    pub signs: SignConvention,
    pub strategy: Strategy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    Witten,
    Elliptic1,
    Elliptic2,
    #[serde(rename = "P")]
    P,
    Twisted,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SeriesKind::Witten => "witten",
            SeriesKind::Elliptic1 => "elliptic1",
            SeriesKind::Elliptic2 => "elliptic2",
            SeriesKind::P => "P",
            SeriesKind::Twisted => "twisted",
        };
        f.write_str(s)
    }
}

/// An equivariant q-series whose coefficients are integral Laurent
/// polynomials in `λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoVariableSeries {
    pub kind: SeriesKind,
    pub series: CharSeries,
}

impl TwoVariableSeries {
    /// Every grade is a constant.
    pub fn is_lambda_independent(&self) -> bool {
        self.series.grades().all(|(_, c)| c.is_constant() || c.is_zero())
    }
}

/// Per-point numerators `N_j(q)` in `μ`; the contribution of point `j` at a
/// given grade is `σ_j N_j μ^{W_j} / ∏_s (μ^{2w_s} − 1)`.
struct Local {
    sign: Rational,
    tangent: Vec<i64>,
    numerator: CharSeries,
}

impl Local {
    fn weight_sum(&self) -> i64 {
        self.tangent.iter().sum()
    }
}

fn locals(
    w: &WeightVector,
    n: u32,
    signs: SignConvention,
    operator: Operator,
    twist_at: impl Fn(&FixedPointDatum) -> CharSeries,
) -> Vec<Local> {
    w.fixed_points()
        .into_iter()
        .map(|p| {
            let sign = match signs {
                SignConvention::Signed => rat(p.sign as i64),
                SignConvention::Unsigned => rat(1),
            };
            let mut numerator = twist_at(&p).map(|c| c.adams(2));
            if operator == Operator::Signature {
                let spinor = p
                    .tangent
                    .iter()
                    .fold(Laurent::one(), |acc, &t| acc * &Laurent::from_terms([(t, rat(1)), (-t, rat(1))]));
                numerator = numerator.map(|c| c.clone() * &spinor);
            }
            debug_assert_eq!(numerator.truncation(), n);
            Local {
                sign,
                tangent: p.tangent,
                numerator,
            }
        })
        .collect()
}

fn laurent_to_poly(p: &Laurent) -> (Poly<Rational>, i64) {
    let (low, c) = p.dense();
    (Poly::from_coeffs(c.to_vec()), low)
}

fn poly_to_laurent(p: &Poly<Rational>, low: i64) -> Laurent {
    Laurent::from_dense(low, p.coeffs().to_vec())
}

/// Cyclotomic factorisation `∏_s (μ^{2w_s} − 1) = ∏_d Φ_d^{m_d}`.
fn denominator_factors(tangent: &[i64]) -> BTreeMap<u64, u32> {
    let mut m = BTreeMap::new();
    for &w in tangent {
        for d in crate::algebra::divisors(2 * w as u64) {
            *m.entry(d).or_insert(0) += 1;
        }
    }
    m
}

struct FactoredSum {
    /// `L_j = L / D_j` as a polynomial, times `σ_j μ^{W_j}`.
    cofactors: Vec<Laurent>,
    /// Maximal multiplicities of the common denominator `L`.
    common: BTreeMap<u64, u32>,
    table: CyclotomicTable,
}

impl FactoredSum {
    fn new(locals: &[Local]) -> Self {
        let mut table = CyclotomicTable::new();
        let facs: Vec<_> = locals.iter().map(|l| denominator_factors(&l.tangent)).collect();
        let mut common: BTreeMap<u64, u32> = BTreeMap::new();
        for f in &facs {
            for (&d, &m) in f {
                let e = common.entry(d).or_insert(0);
                *e = (*e).max(m);
            }
        }
        let cofactors = locals
            .iter()
            .zip(&facs)
            .map(|(l, f)| {
                let mut p = Poly::one();
                for (&d, &m) in &common {
                    let extra = m - f.get(&d).copied().unwrap_or(0);
                    for _ in 0..extra {
                        p = &p * &table.get(d);
                    }
                }
                poly_to_laurent(&p, l.weight_sum()).scale(&l.sign)
            })
            .collect();
        FactoredSum {
            cofactors,
            common,
            table,
        }
    }

    /// `Σ_j σ_j N_j μ^{W_j} / D_j` for one grade, exactly.
    fn sum(&mut self, numerators: &[&Laurent]) -> Result<Laurent> {
        let total = numerators
            .iter()
            .zip(&self.cofactors)
            .fold(Laurent::zero(), |acc, (n, c)| acc + &((*n).clone() * c));
        if total.is_zero() {
            return Ok(total);
        }
        let (mut t, low) = laurent_to_poly(&total);
        let mut remaining = Poly::<Rational>::one();
        for (&d, &m) in &self.common {
            let phi = self.table.get(d);
            let mut left = m;
            while left > 0 {
                match t.div_exact_monic(&phi) {
                    Some(q) => {
                        t = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            for _ in 0..left {
                remaining = &remaining * &phi;
            }
        }
        if remaining.degree() == Some(0) {
            Ok(poly_to_laurent(&t, low))
        } else {
            let f = RatFunc::from_laurent_ratio(&poly_to_laurent(&t, low), &poly_to_laurent(&remaining, 0))?;
            f.to_laurent()
        }
    }
}

/// The contribution of one point as a reduced rational function in `μ`.
pub fn local_ratfunc(sign: &Rational, tangent: &[i64], numerator: &Laurent) -> Result<RatFunc> {
    let den = tangent.iter().fold(Laurent::one(), |acc, &w| {
        acc * &Laurent::from_terms([(w, rat(1)), (-w, rat(-1))])
    });
    RatFunc::from_laurent_ratio(&numerator.scale(sign), &den)
}

fn naive_sum(locals: &[Local], numerators: &[&Laurent]) -> Result<RatFunc> {
    let mut acc = RatFunc::from_laurent(&Laurent::zero());
    for (l, n) in locals.iter().zip(numerators) {
        acc = &acc + &local_ratfunc(&l.sign, &l.tangent, n)?;
    }
    Ok(acc)
}

/// Expansion at `μ = 0`. The true sum has `μ`-degree at most
/// `B = max_j(deg N_j − W_j)`; the expansion is carried to
/// `B + 2·max_j W_j + 4` and every coefficient above `B` must vanish.
fn mu_series_sum(locals: &[Local], numerators: &[&Laurent]) -> Result<Laurent> {
    let live: Vec<_> = locals
        .iter()
        .zip(numerators)
        .filter(|(_, n)| !n.is_zero())
        .collect();
    if live.is_empty() {
        return Ok(Laurent::zero());
    }
    let bound = live
        .iter()
        .map(|(l, n)| n.max_exponent().unwrap() - l.weight_sum())
        .max()
        .unwrap();
    let max_w = locals.iter().map(Local::weight_sum).max().unwrap();
    let top = bound + 2 * max_w + 4;
    let mut total = Laurent::zero();
    for (l, n) in live {
        let low = n.min_exponent().unwrap() + l.weight_sum();
        if top < low {
            continue;
        }
        let order = (top - low) as usize;
        // ∏_s 1/(μ^{2w} − 1) = (−1)^{#s} ∏_s 1/(1 − μ^{2w})
        let mut g = PowerSeries::<Rational>::one(order);
        for &w in &l.tangent {
            g = g.mul_binomial(&rat(-1), 2 * w as usize, -1);
        }
        if l.tangent.len() % 2 == 1 {
            g = -&g;
        }
        let g = Laurent::from_dense(0, g.into_coeffs()).shift(l.weight_sum());
        let term = ((*n).clone() * &g).scale(&l.sign);
        total = total + &term.clamp_exponents(i64::MIN / 4, top);
    }
    if total.terms().any(|(e, _)| e > bound && e <= top) {
        return Err(Error::NotLaurent {
            denominator_degree: 0,
        });
    }
    Ok(total.clamp_exponents(i64::MIN / 4, bound))
}

fn mu_to_lambda(p: Laurent) -> Result<Laurent> {
    if let Some((e, _)) = p.terms().find(|(e, _)| e % 2 != 0) {
        return Err(Error::OddExponent(e));
    }
    let l = p.halve_exponents().expect("exponents checked even");
    if let Some((_, c)) = l.terms().find(|(_, c)| !c.is_integer()) {
        return Err(Error::NonIntegral(c.to_string()));
    }
    Ok(l)
}

fn fixed_point_sum(locals: &[Local], n: u32, strategy: Strategy) -> Result<CharSeries> {
    let mut factored = (strategy == Strategy::Factored).then(|| FactoredSum::new(locals));
    let mut out = CharSeries::zero(n);
    for i in 0..=2 * n as usize {
        let nums: Vec<&Laurent> = locals.iter().map(|l| l.numerator.coeff_half(i)).collect();
        let mu = match strategy {
            Strategy::Factored => factored.as_mut().unwrap().sum(&nums)?,
            Strategy::Naive => naive_sum(locals, &nums)?.to_laurent()?,
            Strategy::MuSeries => mu_series_sum(locals, &nums)?,
        };
        out.set_coeff(HalfInt::from_halves(i as i64), mu_to_lambda(mu)?);
    }
    Ok(out)
}

/// `∏_{n≤N}(1−qⁿ)^{2d} ∏_s 1/((1−λ^{w_s}qⁿ)(1−λ^{−w_s}qⁿ))`, `d` the number of tangent weights.
fn witten_numerator(p: &FixedPointDatum, n: u32) -> CharSeries {
    let mut s = CharSeries::one(n);
    let rank = 2 * p.tangent.len() as i64;
    for k in 1..=n as i64 {
        let g = HalfInt::whole(k);
        s = s.mul_binomial(&Laurent::constant(rat(-1)), g, rank);
        for &w in &p.tangent {
            s = s.mul_binomial(&Laurent::monomial(rat(-1), w), g, -1);
            s = s.mul_binomial(&Laurent::monomial(rat(-1), -w), g, -1);
        }
    }
    s
}

/// The Witten-bundle twisted Dirac Lefschetz number, from its product formula.
pub fn lefschetz_witten(w: &WeightVector, n: u32) -> Result<TwoVariableSeries> {
    lefschetz_witten_with(w, n, Options::default())
}

pub fn lefschetz_witten_with(w: &WeightVector, n: u32, opts: Options) -> Result<TwoVariableSeries> {
    let ls = locals(w, n, opts.signs, Operator::Dirac, |p| witten_numerator(p, n));
    Ok(TwoVariableSeries {
        kind: SeriesKind::Witten,
        series: fixed_point_sum(&ls, n, opts.strategy)?,
    })
}

fn twisted_locals(w: &WeightVector, operator: Operator, twist: Twist, n: u32, signs: SignConvention) -> Vec<Local> {
    locals(w, n, signs, operator, |p| match twist.variant() {
        Some(v) => theta_bundle(&p.complexified_tangent(), v, n),
        None => CharSeries::one(n),
    })
}

/// Lefschetz number of `operator ⊗ twist(T_ℂ)`, twists taken from the
/// lambda-ring Witten bundles.
pub fn lefschetz_twisted(w: &WeightVector, operator: Operator, twist: Twist, n: u32) -> Result<TwoVariableSeries> {
    lefschetz_twisted_with(w, operator, twist, n, Options::default())
}

pub fn lefschetz_twisted_with(
    w: &WeightVector,
    operator: Operator,
    twist: Twist,
    n: u32,
    opts: Options,
) -> Result<TwoVariableSeries> {
    let ls = twisted_locals(w, operator, twist, n, opts.signs);
    let kind = match (operator, twist) {
        (Operator::Dirac, Twist::Theta) => SeriesKind::Witten,
        (Operator::Signature, Twist::Theta1) => SeriesKind::Elliptic1,
        (Operator::Dirac, Twist::Theta2) => SeriesKind::Elliptic2,
        _ => SeriesKind::Twisted,
    };
    Ok(TwoVariableSeries {
        kind,
        series: fixed_point_sum(&ls, n, opts.strategy)?,
    })
}

/// The fixed-point sum with the `(1−qⁿ)` factors stripped:
/// `Σ_j σ_j ∏_s 1/((μ^{w}−μ^{−w}) ∏_n (1−λ^{w}qⁿ)(1−λ^{−w}qⁿ))`.
pub fn bare_fixed_point_sum(w: &WeightVector, n: u32, opts: Options) -> Result<CharSeries> {
    let ls = locals(w, n, opts.signs, Operator::Dirac, |p| {
        let mut s = CharSeries::one(n);
        for k in 1..=n as i64 {
            for &t in &p.tangent {
                s = s.mul_binomial(&Laurent::monomial(rat(-1), t), HalfInt::whole(k), -1);
                s = s.mul_binomial(&Laurent::monomial(rat(-1), -t), HalfInt::whole(k), -1);
            }
        }
        s
    });
    fixed_point_sum(&ls, n, opts.strategy)
}

/// `P = ∏(1−qⁿ)^{4l} · ∏(1+Σ_i(λ²qⁿ)^i)(1+Σ_i(λ⁻²qⁿ)^i) · (bare fixed-point sum)`.
pub fn p_series(w: &WeightVector, n: u32) -> Result<TwoVariableSeries> {
    p_series_with(w, n, Options::default())
}

pub fn p_series_with(w: &WeightVector, n: u32, opts: Options) -> Result<TwoVariableSeries> {
    let mut front = CharSeries::one(n);
    let four_l = 4 * w.l() as i64;
    for k in 1..=n as i64 {
        let g = HalfInt::whole(k);
        front = front.mul_binomial(&Laurent::constant(rat(-1)), g, four_l);
        front = front.mul_binomial(&Laurent::monomial(rat(-1), 2), g, -1);
        front = front.mul_binomial(&Laurent::monomial(rat(-1), -2), g, -1);
    }
    let bare = bare_fixed_point_sum(w, n, opts)?;
    Ok(TwoVariableSeries {
        kind: SeriesKind::P,
        series: &front * &bare,
    })
}

/// One grade of a twisted Lefschetz number as a reduced rational function
/// in `μ`, summed term by term; its value at `μ = 1` is finite exactly when
/// the poles of the local contributions cancel.
pub fn grade_ratfunc(
    w: &WeightVector,
    operator: Operator,
    twist: Twist,
    n: u32,
    grade: HalfInt,
    signs: SignConvention,
) -> Result<RatFunc> {
    let ls = twisted_locals(w, operator, twist, n, signs);
    let i = grade.halves() as usize;
    let nums: Vec<&Laurent> = ls.iter().map(|l| l.numerator.coeff_half(i)).collect();
    naive_sum(&ls, &nums)
}

/// The set of exponents occurring in any grade.
pub fn exponent_support(s: &CharSeries) -> BTreeSet<i64> {
    s.grades().flat_map(|(_, c)| c.terms().map(|(e, _)| e).collect::<Vec<_>>()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(a: &[i64]) -> WeightVector {
        WeightVector::new(a.to_vec()).unwrap()
    }

    #[test]
    fn fixed_point_data() {
        let p = validate_weights(&[0, 2]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!((p[0].tangent.clone(), p[0].sign), (vec![2], 1));
        assert_eq!((p[1].tangent.clone(), p[1].sign), (vec![2], -1));
        let p = validate_weights(&[0, 1, 2, 3]).unwrap();
        assert_eq!((p[0].tangent.clone(), p[0].sign), (vec![1, 2, 3], 1));
        assert_eq!((p[1].tangent.clone(), p[1].sign), (vec![1, 1, 2], -1));
        assert_eq!(validate_weights(&[0, 1]), Err(Error::OddWeightSum(1)));
        assert_eq!(validate_weights(&[2, 0, 2, 4]), Err(Error::DuplicateWeights(2)));
        assert_eq!(validate_weights(&[0, 1, 3]), Err(Error::BadWeightCount(3)));
        assert_eq!("3, 1,0,2".parse::<WeightVector>().unwrap(), wv(&[0, 1, 2, 3]));
    }

    #[test]
    fn projective_line_vanishes() {
        let s = lefschetz_witten(&wv(&[0, 2]), 6).unwrap();
        assert!(s.series.is_zero());
        let err = lefschetz_witten_with(
            &wv(&[0, 2]),
            2,
            Options {
                signs: SignConvention::Unsigned,
                ..Default::default()
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotLaurent { .. }));
    }

    #[test]
    fn three_space_a_hat_vanishes() {
        let s = lefschetz_witten(&wv(&[0, 1, 2, 3]), 2).unwrap();
        assert!(s.series.coeff_half(0).is_zero());
    }

    #[test]
    fn strategies_agree() {
        for a in [&[0, 1, 2, 3][..], &[-1, 0, 2, 5], &[0, 2]] {
            let w = wv(a);
            let get = |strategy| {
                lefschetz_witten_with(&w, 3, Options { strategy, ..Default::default() })
                    .unwrap()
                    .series
            };
            let f = get(Strategy::Factored);
            assert_eq!(f, get(Strategy::Naive), "{a:?}");
            assert_eq!(f, get(Strategy::MuSeries), "{a:?}");
        }
    }

    #[test]
    fn twisted_theta_is_witten() {
        let w = wv(&[0, 1, 2, 3]);
        let a = lefschetz_witten(&w, 5).unwrap();
        let b = lefschetz_twisted(&w, Operator::Dirac, Twist::Theta, 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rigidity_on_three_space() {
        let w = wv(&[0, 1, 2, 3]);
        let e1 = lefschetz_twisted(&w, Operator::Signature, Twist::Theta1, 4).unwrap();
        assert!(e1.is_lambda_independent());
        let e2 = lefschetz_twisted(&w, Operator::Dirac, Twist::Theta2, 4).unwrap();
        assert!(e2.series.is_zero());
    }

    #[test]
    fn untwisted_genera() {
        let w = wv(&[0, 1, 2, 3]);
        let a = lefschetz_twisted(&w, Operator::Dirac, Twist::None, 1).unwrap();
        assert!(a.series.is_zero());
        // signature of ℂP³ is zero
        let s = lefschetz_twisted(&w, Operator::Signature, Twist::None, 1).unwrap();
        assert!(s.series.coeff_half(0).is_zero());
        // χ_y-style check: signature of ℂP¹ ⨯ point count
        let s = lefschetz_twisted(&wv(&[0, 2]), Operator::Signature, Twist::None, 1).unwrap();
        assert!(s.series.is_zero());
    }

    #[test]
    fn p_series_basics() {
        let w = wv(&[0, 2]);
        let p = p_series(&w, 4).unwrap();
        assert!(p.series.is_zero());
        let w = wv(&[0, 1, 2, 3]);
        let p = p_series(&w, 3).unwrap();
        assert!(p.series.coeff_half(0).is_zero());
    }

    #[test]
    fn lambda_one_from_reduced_form() {
        let w = wv(&[0, 1, 2, 3]);
        for (op, tw) in [(Operator::Dirac, Twist::Theta), (Operator::Signature, Twist::Theta1)] {
            let s = lefschetz_twisted(&w, op, tw, 2).unwrap();
            for (g, c) in s.series.grades() {
                let f = grade_ratfunc(&w, op, tw, 2, g, SignConvention::Signed).unwrap();
                assert_eq!(f.eval(&rat(1)), Some(c.value_at_one()));
            }
        }
    }

    #[test]
    fn translation_invariance() {
        let a = lefschetz_witten(&wv(&[0, 1, 2, 3]), 3).unwrap();
        let b = lefschetz_witten(&wv(&[4, 5, 6, 7]), 3).unwrap();
        assert_eq!(a, b);
    }
}
