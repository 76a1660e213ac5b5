//! Lambda-ring operations on virtual circle representations.
//!
//! A virtual representation is recorded by its character, a Laurent
//! polynomial in `λ`; `ℂ[n]` has character `λ^n`. Total symmetric and
//! exterior powers take values in q-series over characters.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{ratio, HalfInt, QSeries};
use crate::error::{Error, Result};
use crate::{CharSeries, Laurent, Rational};

/// A virtual representation of the circle, given by its character.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualChar {
    character: Laurent,
}

impl VirtualChar {
    pub fn new(character: Laurent) -> Self {
        VirtualChar { character }
    }

    /// The irreducible representation `ℂ[n]`.
    pub fn rep(n: i64) -> Self {
        Self::new(Laurent::x_pow(n))
    }

    /// `ℂ^k`, the trivial representation of rank `k`.
    pub fn trivial(k: i64) -> Self {
        Self::new(Laurent::constant(Rational::from_integer(k.into())))
    }

    /// `⊕_s ℂ[w_s]`.
    pub fn from_weights(weights: &[i64]) -> Self {
        Self::new(Laurent::from_terms(weights.iter().map(|&w| (w, Rational::one()))))
    }

    pub fn character(&self) -> &Laurent {
        &self.character
    }

    pub fn into_character(self) -> Laurent {
        self.character
    }

    /// Value of the character at `λ = 1`.
    pub fn rank(&self) -> Rational {
        self.character.value_at_one()
    }

    /// All multiplicities are integers.
    pub fn is_integral(&self) -> bool {
        self.character.is_integral()
    }

    /// An honest representation: nonnegative integer multiplicities.
    pub fn is_genuine(&self) -> bool {
        self.is_integral() && self.character.terms().all(|(_, c)| !c.is_negative())
    }

    /// `E − ℂ^{rk E}`.
    pub fn tilde(&self) -> Self {
        Self::new(&self.character - &Laurent::constant(self.rank()))
    }

    pub fn adams(&self, k: u32) -> Self {
        Self::new(self.character.adams(k))
    }

    pub fn dual(&self) -> Self {
        Self::new(self.character.conjugate())
    }

    /// `(weight, multiplicity)` pairs, or `None` if some multiplicity is not an integer.
    fn integral_terms(&self) -> Option<Vec<(i64, i64)>> {
        self.character
            .terms()
            .map(|(e, c)| {
                if c.is_integer() {
                    c.to_integer().to_i64().map(|m| (e, m))
                } else {
                    None
                }
            })
            .collect()
    }
}

impl std::ops::Add for &VirtualChar {
    type Output = VirtualChar;
    fn add(self, rhs: &VirtualChar) -> VirtualChar {
        VirtualChar::new(&self.character + &rhs.character)
    }
}

impl std::ops::Sub for &VirtualChar {
    type Output = VirtualChar;
    fn sub(self, rhs: &VirtualChar) -> VirtualChar {
        VirtualChar::new(&self.character - &rhs.character)
    }
}

impl std::ops::Mul for &VirtualChar {
    type Output = VirtualChar;
    fn mul(self, rhs: &VirtualChar) -> VirtualChar {
        VirtualChar::new(&self.character * &rhs.character)
    }
}

/// The formal variable `t = ±q^{grade}` of a total power operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TVar {
    pub negative: bool,
    pub grade: HalfInt,
}

impl TVar {
    pub fn new(negative: bool, grade: HalfInt) -> Self {
        assert!(grade.halves() > 0, "t must have positive q-grade");
        TVar { negative, grade }
    }

    pub fn q_pow(grade: HalfInt) -> Self {
        Self::new(false, grade)
    }

    pub fn minus_q_pow(grade: HalfInt) -> Self {
        Self::new(true, grade)
    }

    fn sign(self) -> Rational {
        if self.negative {
            -Rational::one()
        } else {
            Rational::one()
        }
    }

    /// `t ↦ −t`.
    pub fn negate(self) -> Self {
        TVar {
            negative: !self.negative,
            grade: self.grade,
        }
    }
}

impl fmt::Display for TVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        if self.grade == HalfInt::ONE {
            write!(f, "{sign}q")
        } else {
            write!(f, "{sign}q^{}", self.grade)
        }
    }
}

impl FromStr for TVar {
    type Err = Error;

    /// Accepts `q`, `-q`, `q^3/2`, `-q^1/2`, `q^2`, …
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad t-variable {s:?}, expected e.g. q, -q^1/2"));
        let (negative, rest) = match s.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, s),
        };
        let rest = rest.strip_prefix('q').ok_or_else(bad)?;
        let grade = match rest.strip_prefix('^') {
            Some(g) => g.parse::<HalfInt>().map_err(|_| bad())?,
            None if rest.is_empty() => HalfInt::ONE,
            None => return Err(bad()),
        };
        if grade.halves() <= 0 {
            return Err(bad());
        }
        Ok(TVar { negative, grade })
    }
}

/// How a total power operation is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    /// Products for genuine inputs, the Adams exponential otherwise.
    #[default]
    Auto,
    /// Binomial products; needs integer multiplicities.
    Product,
    /// `exp(Σ_k ±ψ^k(E) t^k / k)` over the rational characters.
    Adams,
}

/// Multiplies `acc` by `∏_w (1 + c λ^w t)^{e·m_w}` where `E = Σ m_w ℂ[w]`.
fn mul_product(acc: &CharSeries, terms: &[(i64, i64)], coeff: &Rational, t: TVar, exponent: i64) -> CharSeries {
    let c0 = coeff.clone() * t.sign();
    terms.iter().fold(acc.clone(), |s, &(w, m)| {
        s.mul_binomial(&Laurent::monomial(c0.clone(), w), t.grade, exponent * m)
    })
}

/// `Σ_{k ≥ 1} coeff(k) ψ^k(E) t^k`, truncated.
fn adams_log(e: &VirtualChar, t: TVar, n: u32, coeff: impl Fn(u64) -> Rational) -> CharSeries {
    let mut out = CharSeries::zero(n);
    let step = t.grade.halves() as usize;
    let mut k = 1u64;
    while step * k as usize <= 2 * n as usize {
        let mut c = coeff(k);
        if t.negative && k % 2 == 1 {
            c = -c;
        }
        let g = HalfInt::from_halves(step as i64 * k as i64);
        let term = e.character.adams(k as u32).scale(&c);
        out.set_coeff(g, out.coeff(g).unwrap() + &term);
        k += 1;
    }
    out
}

fn exp_of(log: &CharSeries) -> CharSeries {
    log.exp().expect("log series has zero constant term")
}

fn resolve(route: Route, e: &VirtualChar) -> Route {
    match route {
        Route::Auto if e.is_genuine() => Route::Product,
        Route::Auto => Route::Adams,
        Route::Product if !e.is_integral() => Route::Adams,
        r => r,
    }
}

/// `S_t(E) = Σ_k S^k(E) t^k`, truncated at `q^n`.
pub fn sym_total(e: &VirtualChar, t: TVar, n: u32) -> CharSeries {
    sym_total_with(e, t, n, Route::Auto)
}

pub fn sym_total_with(e: &VirtualChar, t: TVar, n: u32, route: Route) -> CharSeries {
    match resolve(route, e) {
        Route::Product => {
            let terms = e.integral_terms().expect("integral character");
            mul_product(&CharSeries::one(n), &terms, &-Rational::one(), t, -1)
        }
        _ => {
            let out = exp_of(&adams_log(e, t, n, |k| ratio(1, k as i64)));
            debug_assert!(!e.is_integral() || is_integral_series(&out));
            out
        }
    }
}

/// `Λ_t(E) = Σ_k Λ^k(E) t^k`, truncated at `q^n`.
pub fn ext_total(e: &VirtualChar, t: TVar, n: u32) -> CharSeries {
    ext_total_with(e, t, n, Route::Auto)
}

pub fn ext_total_with(e: &VirtualChar, t: TVar, n: u32, route: Route) -> CharSeries {
    match resolve(route, e) {
        Route::Product => {
            let terms = e.integral_terms().expect("integral character");
            mul_product(&CharSeries::one(n), &terms, &Rational::one(), t, 1)
        }
        _ => {
            let out = exp_of(&adams_log(e, t, n, |k| {
                let c = ratio(1, k as i64);
                if k % 2 == 0 {
                    -c
                } else {
                    c
                }
            }));
            debug_assert!(!e.is_integral() || is_integral_series(&out));
            out
        }
    }
}

/// The three Witten bundles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaVariant {
    /// `⊗_{n≥1} S_{qⁿ}(Ẽ)`
    Theta,
    /// `Θ ⊗ ⊗_{m≥1} Λ_{q^m}(Ẽ)`
    Theta1,
    /// `Θ ⊗ ⊗_{m≥1} Λ_{−q^{m−1/2}}(Ẽ)`
    Theta2,
}

impl ThetaVariant {
    pub const ALL: [ThetaVariant; 3] = [ThetaVariant::Theta, ThetaVariant::Theta1, ThetaVariant::Theta2];

    pub fn name(self) -> &'static str {
        match self {
            ThetaVariant::Theta => "theta",
            ThetaVariant::Theta1 => "theta1",
            ThetaVariant::Theta2 => "theta2",
        }
    }
}

impl FromStr for ThetaVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theta" => Ok(ThetaVariant::Theta),
            "theta1" => Ok(ThetaVariant::Theta1),
            "theta2" => Ok(ThetaVariant::Theta2),
            _ => Err(Error::Parse(format!("unknown theta variant {s:?}"))),
        }
    }
}

/// Every `(t, kind)` factor of a Witten bundle up to `q^n`, where `kind` is
/// `true` for symmetric and `false` for exterior powers.
fn theta_factors(variant: ThetaVariant, n: u32) -> Vec<(TVar, bool)> {
    let mut out: Vec<(TVar, bool)> = (1..=n as i64).map(|j| (TVar::q_pow(HalfInt::whole(j)), true)).collect();
    match variant {
        ThetaVariant::Theta => {}
        ThetaVariant::Theta1 => {
            out.extend((1..=n as i64).map(|m| (TVar::q_pow(HalfInt::whole(m)), false)));
        }
        ThetaVariant::Theta2 => {
            out.extend((1..=n as i64).map(|m| (TVar::minus_q_pow(HalfInt::from_halves(2 * m - 1)), false)));
        }
    }
    out
}

/// The Witten bundle of `Ẽ = E − ℂ^{rk E}`, truncated at `q^n`.
pub fn theta_bundle(e: &VirtualChar, variant: ThetaVariant, n: u32) -> CharSeries {
    theta_bundle_with(e, variant, n, Route::Product)
}

/// As [`theta_bundle`], choosing the evaluation route.
///
/// The product route splits `Ẽ` into its positive and negative parts and
/// uses `S_t(E − F) = S_t(E) Λ_{−t}(F)`; the Adams route exponentiates the
/// logarithm of the whole product at once.
pub fn theta_bundle_with(e: &VirtualChar, variant: ThetaVariant, n: u32, route: Route) -> CharSeries {
    let et = e.tilde();
    let terms = match route {
        Route::Adams => None,
        _ => et.integral_terms(),
    };
    match terms {
        Some(terms) => theta_factors(variant, n).into_iter().fold(CharSeries::one(n), |acc, (t, sym)| {
            if sym {
                mul_product(&acc, &terms, &-Rational::one(), t, -1)
            } else {
                mul_product(&acc, &terms, &Rational::one(), t, 1)
            }
        }),
        None => {
            let mut log = CharSeries::zero(n);
            for (t, sym) in theta_factors(variant, n) {
                let part = if sym {
                    adams_log(&et, t, n, |k| ratio(1, k as i64))
                } else {
                    adams_log(&et, t, n, |k| {
                        let c = ratio(1, k as i64);
                        if k % 2 == 0 {
                            -c
                        } else {
                            c
                        }
                    })
                };
                log = &log + &part;
            }
            exp_of(&log)
        }
    }
}

/// The virtual representation at `grade`.
pub fn fourier_coefficient(s: &CharSeries, grade: HalfInt) -> Result<VirtualChar> {
    s.checked_coeff(grade).cloned().map(VirtualChar::new)
}

/// Every coefficient has integral multiplicities.
pub fn is_integral_series(s: &CharSeries) -> bool {
    s.grades().all(|(_, c)| c.is_integral())
}

/// Rank-zero expansion of the Witten bundle evaluated at `λ = 1`.
pub fn rank_series(s: &CharSeries) -> QSeries<Rational> {
    s.map(Laurent::value_at_one)
}

/// A symbolic bundle built from circle representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BundleExpr {
    Rep(i64),
    Trivial(i64),
    Sum(Vec<BundleExpr>),
    Difference(Box<BundleExpr>, Box<BundleExpr>),
    Tensor(Vec<BundleExpr>),
    Sym(TVar, Box<BundleExpr>),
    Ext(TVar, Box<BundleExpr>),
    Tilde(Box<BundleExpr>),
    Theta(ThetaVariant, Box<BundleExpr>),
}

impl BundleExpr {
    /// Parses the S-expression form, e.g. `(theta1 (tilde (sum (rep 2) (rep -2))))`.
    pub fn parse(s: &str) -> Result<Self> {
        let tokens = tokenize(s);
        let mut pos = 0;
        let expr = parse_expr(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::Parse(format!("trailing input after token {pos}")));
        }
        expr.check_tilde(false)?;
        Ok(expr)
    }

    fn check_tilde(&self, inside: bool) -> Result<()> {
        use BundleExpr::*;
        match self {
            Rep(_) | Trivial(_) => Ok(()),
            Tilde(_) if inside => Err(Error::Parse("tilde applied twice on one chain".into())),
            Tilde(e) => e.check_tilde(true),
            Sum(v) | Tensor(v) => v.iter().try_for_each(|e| e.check_tilde(inside)),
            Difference(a, b) => {
                a.check_tilde(inside)?;
                b.check_tilde(inside)
            }
            Sym(_, e) | Ext(_, e) | Theta(_, e) => e.check_tilde(inside),
        }
    }

    /// Expands to a q-series of characters truncated at `q^n`.
    ///
    /// The argument of `sym`, `ext`, `tilde` and the theta operations must be
    /// an honest character, i.e. have no positive q-grades.
    pub fn eval(&self, n: u32) -> Result<CharSeries> {
        use BundleExpr::*;
        Ok(match self {
            Rep(k) => CharSeries::constant(Laurent::x_pow(*k), n),
            Trivial(k) => CharSeries::constant(VirtualChar::trivial(*k).into_character(), n),
            Sum(v) => v.iter().try_fold(CharSeries::zero(n), |acc, e| Ok::<_, Error>(&acc + &e.eval(n)?))?,
            Difference(a, b) => &a.eval(n)? - &b.eval(n)?,
            Tensor(v) => v.iter().try_fold(CharSeries::one(n), |acc, e| Ok::<_, Error>(&acc * &e.eval(n)?))?,
            Sym(t, e) => sym_total(&e.eval_char(n)?, *t, n),
            Ext(t, e) => ext_total(&e.eval_char(n)?, *t, n),
            Tilde(e) => CharSeries::constant(e.eval_char(n)?.tilde().into_character(), n),
            Theta(v, e) => theta_bundle(&e.eval_char(n)?, *v, n),
        })
    }

    fn eval_char(&self, n: u32) -> Result<VirtualChar> {
        let s = self.eval(n)?;
        if s.grades().skip(1).any(|(_, c)| !c.is_zero()) {
            return Err(Error::InvalidArgument(
                "power operations need a character argument, not a q-series".into(),
            ));
        }
        Ok(VirtualChar::new(s.coeff_half(0).clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Atom(String),
}

fn tokenize(s: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let flush = |cur: &mut String, out: &mut Vec<Token>| {
        if !cur.is_empty() {
            out.push(Token::Atom(std::mem::take(cur)));
        }
    };
    for ch in s.chars() {
        match ch {
            '(' => {
                flush(&mut cur, &mut out);
                out.push(Token::Open);
            }
            ')' => {
                flush(&mut cur, &mut out);
                out.push(Token::Close);
            }
            c if c.is_whitespace() => flush(&mut cur, &mut out),
            c => cur.push(c),
        }
    }
    flush(&mut cur, &mut out);
    out
}

fn parse_expr(tokens: &[Token], pos: &mut usize) -> Result<BundleExpr> {
    let err = |m: &str| Error::Parse(m.to_string());
    match tokens.get(*pos) {
        Some(Token::Open) => *pos += 1,
        Some(Token::Atom(a)) => return Err(Error::Parse(format!("expected '(' before {a:?}"))),
        _ => return Err(err("unexpected end of expression")),
    }
    let head = match tokens.get(*pos) {
        Some(Token::Atom(a)) => a.clone(),
        _ => return Err(err("expected an operator name")),
    };
    *pos += 1;
    let int_arg = |pos: &mut usize| -> Result<i64> {
        match tokens.get(*pos) {
            Some(Token::Atom(a)) => {
                *pos += 1;
                a.parse().map_err(|_| Error::Parse(format!("expected integer, got {a:?}")))
            }
            _ => Err(err("expected integer argument")),
        }
    };
    let t_arg = |pos: &mut usize| -> Result<TVar> {
        match tokens.get(*pos) {
            Some(Token::Atom(a)) => {
                *pos += 1;
                a.parse()
            }
            _ => Err(err("expected t-variable argument")),
        }
    };
    let sub_args = |pos: &mut usize| -> Result<Vec<BundleExpr>> {
        let mut v = Vec::new();
        while let Some(Token::Open) = tokens.get(*pos) {
            v.push(parse_expr(tokens, pos)?);
        }
        Ok(v)
    };
    let one = |v: Vec<BundleExpr>, name: &str| -> Result<Box<BundleExpr>> {
        let [e]: [BundleExpr; 1] = v
            .try_into()
            .map_err(|_| Error::Parse(format!("{name} takes exactly one argument")))?;
        Ok(Box::new(e))
    };
    let expr = match head.as_str() {
        "rep" => BundleExpr::Rep(int_arg(pos)?),
        "trivial" => BundleExpr::Trivial(int_arg(pos)?),
        "sum" => BundleExpr::Sum(sub_args(pos)?),
        "tensor" => BundleExpr::Tensor(sub_args(pos)?),
        "difference" => {
            let [a, b]: [BundleExpr; 2] = sub_args(pos)?
                .try_into()
                .map_err(|_| err("difference takes exactly two arguments"))?;
            BundleExpr::Difference(Box::new(a), Box::new(b))
        }
        "sym" => {
            let t = t_arg(pos)?;
            BundleExpr::Sym(t, one(sub_args(pos)?, "sym")?)
        }
        "ext" => {
            let t = t_arg(pos)?;
            BundleExpr::Ext(t, one(sub_args(pos)?, "ext")?)
        }
        "tilde" => BundleExpr::Tilde(one(sub_args(pos)?, "tilde")?),
        name => match name.parse::<ThetaVariant>() {
            Ok(v) => BundleExpr::Theta(v, one(sub_args(pos)?, name)?),
            Err(_) => return Err(Error::Parse(format!("unknown operator {name:?}"))),
        },
    };
    match tokens.get(*pos) {
        Some(Token::Close) => {
            *pos += 1;
            Ok(expr)
        }
        _ => Err(Error::Parse(format!("missing ')' after {head}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn lp(terms: &[(i64, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    fn q() -> TVar {
        TVar::q_pow(HalfInt::ONE)
    }

    #[test]
    fn symmetric_powers_of_lines() {
        let s = sym_total(&VirtualChar::rep(0), q(), 4);
        for k in 0..=4 {
            assert_eq!(s.coeff(HalfInt::whole(k)), Some(&lp(&[(0, 1)])));
            if k < 4 {
                assert!(s.coeff(HalfInt::from_halves(2 * k + 1)).unwrap().is_zero());
            }
        }
        let s = sym_total(&VirtualChar::rep(2), q(), 4);
        for k in 0..=4 {
            assert_eq!(s.coeff(HalfInt::whole(k)), Some(&lp(&[(2 * k, 1)])));
        }
    }

    #[test]
    fn symmetric_power_of_virtual_difference() {
        let e = &VirtualChar::rep(2) - &VirtualChar::rep(0);
        let s = sym_total(&e, q(), 5);
        assert_eq!(s.coeff(HalfInt::whole(0)), Some(&lp(&[(0, 1)])));
        for k in 1..=5 {
            assert_eq!(s.coeff(HalfInt::whole(k)), Some(&lp(&[(2 * k, 1), (2 * k - 2, -1)])));
        }
        assert_eq!(s, sym_total_with(&e, q(), 5, Route::Product));
    }

    #[test]
    fn exterior_powers() {
        let s = ext_total(&VirtualChar::rep(0), TVar::minus_q_pow(HalfInt::HALF), 2);
        assert_eq!(s, CharSeries::one(2).mul_binomial(&lp(&[(0, -1)]), HalfInt::HALF, 1));
        let p = VirtualChar::from_weights(&[2, -2]);
        let s = ext_total(&p, q(), 3);
        assert_eq!(s.coeff(HalfInt::whole(1)), Some(&lp(&[(2, 1), (-2, 1)])));
        assert_eq!(s.coeff(HalfInt::whole(2)), Some(&lp(&[(0, 1)])));
        assert!(s.coeff(HalfInt::whole(3)).unwrap().is_zero());
    }

    #[test]
    fn exterior_power_of_difference_is_quotient() {
        let e = VirtualChar::from_weights(&[2, -2]);
        let f = VirtualChar::trivial(2);
        let t = q();
        let lhs = ext_total(&(&e - &f), t, 6);
        let rhs = &ext_total(&e, t, 6) * &ext_total(&f, t, 6).inverse().unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjoint_witten_bundle_coefficients() {
        let p = VirtualChar::from_weights(&[2, -2]);
        let pt = p.tilde().into_character();
        let t1 = theta_bundle(&p, ThetaVariant::Theta1, 2);
        assert_eq!(t1.coeff(HalfInt::whole(0)), Some(&lp(&[(0, 1)])));
        assert_eq!(t1.coeff(HalfInt::whole(1)), Some(&pt.scale(&rat(2))));
        let pc = p.character().clone();
        let w2 = (&(&pc * &pc) - &pc.scale(&rat(3))) + &lp(&[(0, 2)]);
        assert_eq!(t1.coeff(HalfInt::whole(2)), Some(&w2.scale(&rat(2))));

        let t2 = theta_bundle(&p, ThetaVariant::Theta2, 1);
        assert_eq!(t2.coeff(HalfInt::HALF), Some(&-pt.clone()));
        assert_eq!(t2.coeff(HalfInt::ONE), Some(&lp(&[(0, 2), (2, -1), (-2, -1)])));
    }

    #[test]
    fn theta_routes_agree() {
        let e = VirtualChar::from_weights(&[1, 2, 3, -1, -2, -3]);
        for v in ThetaVariant::ALL {
            let a = theta_bundle_with(&e, v, 4, Route::Product);
            let b = theta_bundle_with(&e, v, 4, Route::Adams);
            assert_eq!(a, b, "{v:?}");
            assert!(is_integral_series(&b));
            let ranks = rank_series(&a);
            assert_eq!(ranks, QSeries::one(4));
        }
    }

    #[test]
    fn fourier_coefficient_bounds() {
        let s = theta_bundle(&VirtualChar::rep(3), ThetaVariant::Theta, 2);
        assert_eq!(fourier_coefficient(&s, HalfInt::ZERO).unwrap(), VirtualChar::trivial(1));
        assert!(matches!(
            fourier_coefficient(&s, HalfInt::from_halves(5)),
            Err(Error::GradeOutOfRange { .. })
        ));
    }

    #[test]
    fn t_variable_syntax() {
        assert_eq!("q".parse::<TVar>().unwrap(), q());
        assert_eq!("-q^1/2".parse::<TVar>().unwrap(), TVar::minus_q_pow(HalfInt::HALF));
        assert_eq!("q^2".parse::<TVar>().unwrap(), TVar::q_pow(HalfInt::whole(2)));
        assert!("q^0".parse::<TVar>().is_err());
        assert!("t".parse::<TVar>().is_err());
        for s in ["q", "-q^1/2", "q^3/2"] {
            assert_eq!(s.parse::<TVar>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn expression_parser() {
        let e = BundleExpr::parse("(theta1 (tilde (sum (rep 2) (rep -2))))").unwrap();
        let direct = theta_bundle(&VirtualChar::from_weights(&[2, -2]), ThetaVariant::Theta1, 3);
        assert_eq!(e.eval(3).unwrap(), direct);

        let e = BundleExpr::parse("(tensor (sym q (rep 2)) (ext -q (rep 2)))").unwrap();
        assert_eq!(e.eval(4).unwrap(), CharSeries::one(4));

        let e = BundleExpr::parse("(difference (trivial 3) (rep 1))").unwrap();
        assert_eq!(e.eval(1).unwrap().coeff_half(0), &lp(&[(0, 3), (1, -1)]));

        assert!(BundleExpr::parse("(tilde (tilde (rep 1)))").is_err());
        assert!(BundleExpr::parse("(rep 1").is_err());
        assert!(BundleExpr::parse("(frob (rep 1))").is_err());
        assert!(BundleExpr::parse("(rep 1) (rep 2)").is_err());
        let nested = BundleExpr::parse("(sym q (sym q (rep 1)))").unwrap();
        assert!(matches!(nested.eval(2), Err(Error::InvalidArgument(_))));
    }
}
