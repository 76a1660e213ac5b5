//! Truncated power series in `q^{1/2}`.

use std::ops::{Add, Mul, Neg, Sub};

use super::grade::HalfInt;
use super::series::PowerSeries;
use super::traits::{QAlgebra, Ring};
use crate::error::{Error, Result};
use crate::Rational;

/// A series `Σ_{i=0}^{2N} c_i q^{i/2}` known exactly through `q^N`.
///
/// Whole-q series simply have zero odd grades. The truncation order `N` is a
/// whole number of q-units.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries<R> {
    inner: PowerSeries<R>,
}

impl<R: Ring> QSeries<R> {
    pub fn zero(truncation: u32) -> Self {
        QSeries {
            inner: PowerSeries::zero(2 * truncation as usize),
        }
    }

    pub fn one(truncation: u32) -> Self {
        Self::constant(R::one(), truncation)
    }

    pub fn constant(c: R, truncation: u32) -> Self {
        QSeries {
            inner: PowerSeries::constant(c, 2 * truncation as usize),
        }
    }

    /// `c q^{grade}`; zero when the grade lies above the truncation.
    pub fn monomial(c: R, grade: HalfInt, truncation: u32) -> Self {
        assert!(grade.halves() >= 0, "negative q-grade");
        QSeries {
            inner: PowerSeries::monomial(c, grade.halves() as usize, 2 * truncation as usize),
        }
    }

    /// Builds from a function of the half-grade index `i` (grade `i/2`).
    pub fn from_half_fn(truncation: u32, f: impl FnMut(usize) -> R) -> Self {
        QSeries {
            inner: PowerSeries::from_fn(2 * truncation as usize, f),
        }
    }

    /// Builds a whole-q series from a function of the q-exponent.
    pub fn from_whole_fn(truncation: u32, mut f: impl FnMut(usize) -> R) -> Self {
        Self::from_half_fn(truncation, |i| if i % 2 == 0 { f(i / 2) } else { R::zero() })
    }

    pub fn from_power_series(inner: PowerSeries<R>) -> Self {
        assert!(inner.order().is_multiple_of(2), "q-series need a whole truncation order");
        QSeries { inner }
    }

    pub fn as_power_series(&self) -> &PowerSeries<R> {
        &self.inner
    }

    pub fn truncation(&self) -> u32 {
        (self.inner.order() / 2) as u32
    }

    /// Highest stored half-grade index, `2N`.
    pub fn max_half(&self) -> usize {
        self.inner.order()
    }

    pub fn coeff(&self, grade: HalfInt) -> Option<&R> {
        if grade.halves() < 0 {
            return None;
        }
        self.inner.coeff(grade.halves() as usize)
    }

    pub fn coeff_half(&self, i: usize) -> &R {
        &self.inner.coeffs()[i]
    }

    /// `(grade, coefficient)` pairs for every stored grade, zeros included.
    pub fn grades(&self) -> impl Iterator<Item = (HalfInt, &R)> + '_ {
        self.inner
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| (HalfInt(i as i64), c))
    }

    pub fn set_coeff(&mut self, grade: HalfInt, c: R) {
        if grade.halves() >= 0 {
            self.inner.set_coeff(grade.halves() as usize, c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// True when every odd half-grade vanishes.
    pub fn is_whole(&self) -> bool {
        self.grades()
            .all(|(g, c)| g.is_whole() || num_traits::Zero::is_zero(c))
    }

    pub fn truncate(&self, truncation: u32) -> Self {
        QSeries {
            inner: self.inner.truncate(2 * truncation as usize),
        }
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> QSeries<S> {
        QSeries {
            inner: self.inner.map(f),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        QSeries {
            inner: self.inner.scale(c),
        }
    }

    /// Cauchy product; the result is truncated at the smaller order.
    pub fn mul_series(&self, other: &Self) -> Self {
        QSeries {
            inner: self.inner.mul_series(&other.inner),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(QSeries {
            inner: self.inner.inverse()?,
        })
    }

    pub fn pow(&self, k: u64) -> Self {
        QSeries {
            inner: self.inner.pow(k),
        }
    }

    /// Multiplies by `(1 + c q^{grade})^exponent` (negative exponents divide).
    pub fn mul_binomial(&self, c: &R, grade: HalfInt, exponent: i64) -> Self {
        assert!(grade.halves() > 0, "binomial factor needs a positive grade");
        QSeries {
            inner: self
                .inner
                .mul_binomial(c, grade.halves() as usize, exponent),
        }
    }

    /// `q^{1/2} ↦ -q^{1/2}`, the effect of `τ ↦ τ + 1` on the half-grades.
    pub fn flip_half_grades(&self) -> Self {
        Self::from_half_fn(self.truncation(), |i| {
            let c = self.coeff_half(i).clone();
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
    }

    /// `q ↦ q^k`.
    pub fn substitute_power(&self, k: usize) -> Self {
        QSeries {
            inner: self.inner.substitute_power(k),
        }
    }

    /// Applies `f` to every coefficient, falling back on the first error.
    pub fn try_map<S: Ring>(&self, mut f: impl FnMut(HalfInt, &R) -> Result<S>) -> Result<QSeries<S>> {
        let coeffs = self
            .grades()
            .map(|(g, c)| f(g, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries {
            inner: PowerSeries::from_coeffs(coeffs, self.max_half()),
        })
    }

    /// The coefficient at `grade`, or an error when it lies above the truncation.
    pub fn checked_coeff(&self, grade: HalfInt) -> Result<&R> {
        self.coeff(grade).ok_or(Error::GradeOutOfRange {
            grade,
            truncation: self.truncation(),
        })
    }
}

impl<R: QAlgebra> QSeries<R> {
    pub fn exp(&self) -> Result<Self> {
        Ok(QSeries {
            inner: self.inner.exp()?,
        })
    }

    pub fn log(&self) -> Result<Self> {
        Ok(QSeries {
            inner: self.inner.log()?,
        })
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        QSeries {
            inner: self.inner.scale_rational(q),
        }
    }
}

impl<R: Ring> Add<&QSeries<R>> for &QSeries<R> {
    type Output = QSeries<R>;
    fn add(self, rhs: &QSeries<R>) -> QSeries<R> {
        QSeries {
            inner: &self.inner + &rhs.inner,
        }
    }
}

impl<R: Ring> Sub<&QSeries<R>> for &QSeries<R> {
    type Output = QSeries<R>;
    fn sub(self, rhs: &QSeries<R>) -> QSeries<R> {
        QSeries {
            inner: &self.inner - &rhs.inner,
        }
    }
}

impl<R: Ring> Mul<&QSeries<R>> for &QSeries<R> {
    type Output = QSeries<R>;
    fn mul(self, rhs: &QSeries<R>) -> QSeries<R> {
        self.mul_series(rhs)
    }
}

impl<R: Ring> Neg for &QSeries<R> {
    type Output = QSeries<R>;
    fn neg(self) -> QSeries<R> {
        QSeries { inner: -&self.inner }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, LaurentPoly};

    fn whole(v: &[i64], n: u32) -> QSeries<Rational> {
        QSeries::from_whole_fn(n, |i| v.get(i).map(|&x| rat(x)).unwrap_or_else(|| rat(0)))
    }

    #[test]
    fn difference_of_squares() {
        let a = whole(&[1, 1], 4);
        let b = whole(&[1, -1], 4);
        assert_eq!(a.mul_series(&b), whole(&[1, 0, -1], 4));
    }

    #[test]
    fn geometric_telescope_truncates() {
        let a = whole(&[1, -1], 4);
        let b = whole(&[1, 1, 1, 1, 1], 4);
        assert_eq!(a.mul_series(&b), whole(&[1], 4));
    }

    #[test]
    fn result_truncation_is_minimum() {
        let a = whole(&[1, 1], 3);
        let b = whole(&[1, 1], 5);
        assert_eq!(a.mul_series(&b).truncation(), 3);
    }

    #[test]
    fn inverse_over_laurent_ring() {
        type L = LaurentPoly<Rational>;
        let n = 5;
        let mut s = QSeries::<L>::one(n);
        s.set_coeff(HalfInt::ONE, -L::x_pow(2));
        let inv = s.inverse().unwrap();
        for k in 0..=n as i64 {
            assert_eq!(inv.coeff(HalfInt::whole(k)), Some(&L::x_pow(2 * k)));
        }
        let mut bad = QSeries::<L>::zero(2);
        bad.set_coeff(HalfInt::ZERO, L::from_terms([(0, rat(1)), (1, rat(1))]));
        assert!(matches!(bad.inverse(), Err(Error::NonUnitConstantTerm)));
    }

    #[test]
    fn half_grade_flip() {
        let s = QSeries::from_half_fn(2, |i| rat(i as i64 + 1));
        let f = s.flip_half_grades();
        assert_eq!(f.coeff(HalfInt(1)), Some(&rat(-2)));
        assert_eq!(f.coeff(HalfInt(2)), Some(&rat(3)));
        assert_eq!(f.flip_half_grades(), s);
    }
}
