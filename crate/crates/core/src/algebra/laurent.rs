//! Laurent polynomials `Σ c_e x^e` with finitely many integer exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::traits::{Field, QAlgebra, Ring};
use crate::Rational;

/// A Laurent polynomial stored densely from its lowest to its highest
/// nonzero exponent.
///
/// Both ends of `coeffs` are nonzero; the zero polynomial has no coefficients.
/// Structural equality is therefore mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<S> {
    low: i64,
    coeffs: Vec<S>,
}

impl<S: Ring> LaurentPoly<S> {
    pub fn monomial(c: S, exponent: i64) -> Self {
        LaurentPoly {
            low: exponent,
            coeffs: vec![c],
        }
        .normalized()
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable itself raised to `exponent`, with coefficient one.
    pub fn x_pow(exponent: i64) -> Self {
        Self::monomial(S::one(), exponent)
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, S)>) -> Self {
        let mut map: BTreeMap<i64, S> = BTreeMap::new();
        for (e, c) in terms {
            let slot = map.entry(e).or_insert_with(S::zero);
            *slot = std::mem::replace(slot, S::zero()) + &c;
        }
        let (Some(&lo), Some(&hi)) = (map.keys().next(), map.keys().next_back()) else {
            return Self::zero();
        };
        let mut coeffs = vec![S::zero(); (hi - lo + 1) as usize];
        for (e, c) in map {
            coeffs[(e - lo) as usize] = c;
        }
        LaurentPoly { low: lo, coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exponent(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exponent: i64) -> S {
        let idx = exponent - self.low;
        if idx < 0 {
            return S::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(S::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &S)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty() || (self.low == 0 && self.coeffs.len() == 1)
    }

    /// The single term when this is `c x^e` with `c ≠ 0`.
    pub fn as_monomial(&self) -> Option<(i64, &S)> {
        (self.coeffs.len() == 1).then(|| (self.low, &self.coeffs[0]))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `f(x) ↦ f(x^k)` for `k ≥ 1`; this is the Adams operation on characters.
    pub fn adams(&self, k: u32) -> Self {
        assert!(k >= 1, "Adams operation needs k ≥ 1");
        Self::from_terms(self.terms().map(|(e, c)| (e * k as i64, c.clone())))
    }

    /// `f(x) ↦ f(x^{-1})`.
    pub fn conjugate(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    /// Exponents divided by two, provided they are all even.
    pub fn halve_exponents(&self) -> Option<Self> {
        if self.terms().any(|(e, _)| e % 2 != 0) {
            return None;
        }
        Some(Self::from_terms(
            self.terms().map(|(e, c)| (e / 2, c.clone())),
        ))
    }

    /// Sum of the coefficients, i.e. the value at `x = 1`.
    pub fn value_at_one(&self) -> S {
        self.coeffs.iter().fold(S::zero(), |acc, c| acc + c)
    }

    pub fn map_coeffs<T: Ring>(&self, mut f: impl FnMut(&S) -> T) -> LaurentPoly<T> {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(&mut f).collect(),
        }
        .normalized()
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map_coeffs(|a| a.clone() * c)
    }

    /// Keeps only terms with `lo ≤ exponent ≤ hi`.
    pub fn clamp_exponents(&self, lo: i64, hi: i64) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|&(e, _)| e >= lo && e <= hi)
                .map(|(e, c)| (e, c.clone())),
        )
    }

    /// Coefficients from `x^low` upward, with the lowest exponent.
    pub fn dense(&self) -> (i64, &[S]) {
        (self.low, &self.coeffs)
    }

    pub fn from_dense(low: i64, coeffs: Vec<S>) -> Self {
        LaurentPoly { low, coeffs }.normalized()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        if let Some((e, c)) = rhs.as_monomial() {
            return LaurentPoly {
                low: self.low + e,
                coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
            }
            .normalized();
        }
        if let Some((e, c)) = self.as_monomial() {
            return LaurentPoly {
                low: rhs.low + e,
                coeffs: rhs.coeffs.iter().map(|b| c.clone() * b).collect(),
            }
            .normalized();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let slot = &mut out[i + j];
                *slot = std::mem::replace(slot, S::zero()) + &(a.clone() * b);
            }
        }
        LaurentPoly {
            low: self.low + rhs.low,
            coeffs: out,
        }
        .normalized()
    }

    fn combine(&self, rhs: &Self, negate_rhs: bool) -> Self {
        if rhs.coeffs.is_empty() {
            return self.clone();
        }
        if self.coeffs.is_empty() {
            return if negate_rhs { -rhs.clone() } else { rhs.clone() };
        }
        let lo = self.low.min(rhs.low);
        let hi = (self.low + self.coeffs.len() as i64).max(rhs.low + rhs.coeffs.len() as i64);
        let mut out = vec![S::zero(); (hi - lo) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[(self.low - lo) as usize + i] = a.clone();
        }
        for (i, b) in rhs.coeffs.iter().enumerate() {
            let slot = &mut out[(rhs.low - lo) as usize + i];
            let old = std::mem::replace(slot, S::zero());
            *slot = if negate_rhs { old - b } else { old + b };
        }
        LaurentPoly { low: lo, coeffs: out }.normalized()
    }
}

impl<F: Field> LaurentPoly<F> {
    pub fn eval(&self, x: &F) -> Option<F> {
        if self.coeffs.is_empty() {
            return Some(F::zero());
        }
        let xinv = x.try_inverse();
        if self.low < 0 && xinv.is_none() {
            return None;
        }
        let base = if self.low >= 0 {
            super::traits::pow(x, self.low as u64)
        } else {
            super::traits::pow(xinv.as_ref().unwrap(), (-self.low) as u64)
        };
        // Horner from the top, then multiply by x^low
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        Some(acc * &base)
    }
}

impl LaurentPoly<Rational> {
    /// The same polynomial over the integers when every coefficient is integral.
    pub fn to_integral(&self) -> Option<LaurentPoly<BigInt>> {
        if self.coeffs.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some(LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| c.to_integer()).collect(),
        })
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl LaurentPoly<BigInt> {
    pub fn to_rational(&self) -> LaurentPoly<Rational> {
        LaurentPoly {
            low: self.low,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl<S: Ring> Zero for LaurentPoly<S> {
    fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<S: Ring> One for LaurentPoly<S> {
    fn one() -> Self {
        Self::constant(S::one())
    }
}

impl<S: Ring> Add for LaurentPoly<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, false)
    }
}

impl<'a, S: Ring> Add<&'a LaurentPoly<S>> for LaurentPoly<S> {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        self.combine(rhs, false)
    }
}

impl<'a, S: Ring> Add<&'a LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn add(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
        self.combine(rhs, false)
    }
}

impl<S: Ring> Sub for LaurentPoly<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, true)
    }
}

impl<'a, S: Ring> Sub<&'a LaurentPoly<S>> for LaurentPoly<S> {
    type Output = Self;
    fn sub(self, rhs: &'a Self) -> Self {
        self.combine(rhs, true)
    }
}

impl<'a, S: Ring> Sub<&'a LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn sub(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
        self.combine(rhs, true)
    }
}

impl<S: Ring> Mul for LaurentPoly<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a, S: Ring> Mul<&'a LaurentPoly<S>> for LaurentPoly<S> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        self.mul_ref(rhs)
    }
}

impl<'a, S: Ring> Mul<&'a LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn mul(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
        self.mul_ref(rhs)
    }
}

impl<S: Ring> Neg for LaurentPoly<S> {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<S: Ring> Ring for LaurentPoly<S> {
    /// Units are the monomials `c x^e` with `c` a unit.
    fn try_inverse(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        Some(Self::monomial(c.try_inverse()?, -e))
    }
}

impl<S: QAlgebra> QAlgebra for LaurentPoly<S> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(S::from_rational(q))
    }

    fn scale(&self, q: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(q))
    }
}

impl<S: Ring + fmt::Display> fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{e}")?,
            }
        }
        Ok(())
    }
}

impl<S: Ring> fmt::Debug for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.terms().collect();
        f.debug_map().entries(terms).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    type L = LaurentPoly<Rational>;

    fn lp(terms: &[(i64, i64)]) -> L {
        L::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn zero_is_empty_after_cancellation() {
        let a = lp(&[(2, 1), (-2, 1)]);
        let d = a.clone() - &a;
        assert!(d.is_zero());
        assert_eq!(d, L::zero());
        assert_eq!(d.min_exponent(), None);
    }

    #[test]
    fn adams_scales_exponents() {
        assert_eq!(lp(&[(1, 1), (-1, 1)]).adams(2), lp(&[(2, 1), (-2, 1)]));
        assert_eq!(lp(&[(0, 3)]).adams(7), lp(&[(0, 3)]));
        assert_eq!(lp(&[(2, 1), (-2, 1)]).adams(3), lp(&[(6, 1), (-6, 1)]));
    }

    #[test]
    fn product_and_evaluation() {
        let a = lp(&[(1, 1), (-1, 1)]);
        let sq = a.clone() * &a;
        assert_eq!(sq, lp(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(sq.eval(&rat(2)), Some(ratio(25, 4)));
        assert_eq!(a.eval(&rat(0)), None);
        assert_eq!(sq.value_at_one(), rat(4));
    }

    #[test]
    fn monomial_units() {
        let m = L::monomial(ratio(2, 3), -4);
        assert_eq!(m.try_inverse(), Some(L::monomial(ratio(3, 2), 4)));
        assert_eq!(lp(&[(0, 1), (1, 1)]).try_inverse(), None);
    }

    #[test]
    fn integrality() {
        assert!(lp(&[(3, -2), (0, 5)]).to_integral().is_some());
        let h = L::monomial(ratio(1, 2), 0);
        assert!(h.to_integral().is_none());
    }
}
