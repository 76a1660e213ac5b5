//! Dense truncated power series `Σ_{i ≤ order} c_i t^i` in one variable.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::traits::{QAlgebra, Ring};
use crate::error::{Error, Result};
use crate::Rational;

/// A power series known exactly through degree `order`.
///
/// The coefficient vector always has length `order + 1`; nothing above
/// `order` is stored or ever read.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> PowerSeries<R> {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c t^degree`, or zero when `degree > order`.
    pub fn monomial(c: R, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        PowerSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Builds from a coefficient list, padding with zeros or truncating to `order`.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Option<&R> {
        self.coeffs.get(i)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, c: R) {
        if i <= self.order() {
            self.coeffs[i] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> PowerSeries<S> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(&mut f).collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.clone() * c)
    }

    /// `self(t^k)`; coefficients landing above `order` are dropped.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let mut out = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > self.order() {
                break;
            }
            out.coeffs[i * k] = c.clone();
        }
        out
    }

    /// `c0 + c1 (s t) + c2 (s t)^2 + …` for a scalar `s`.
    pub fn rescale_variable(&self, s: &R) -> Self {
        let mut p = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.clone() * &p);
            p = p * s;
        }
        PowerSeries { coeffs: out }
    }

    /// Cauchy product truncated at `min(order_a, order_b)`.
    pub fn mul_series(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = std::mem::replace(&mut out[i + j], R::zero()) + &(a.clone() * b);
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Multiplies by `(1 + c t^shift)^exponent`; negative exponents divide.
    ///
    /// This is O(order) ring operations per unit of `|exponent|`, which is what
    /// makes the product formulas for symmetric and exterior powers cheap.
    pub fn mul_binomial(&self, c: &R, shift: usize, exponent: i64) -> Self {
        assert!(shift >= 1, "binomial factor must have positive degree");
        let mut out = self.clone();
        let n = out.coeffs.len();
        if c.is_zero() || shift >= n {
            return out;
        }
        if exponent > 0 {
            for _ in 0..exponent {
                // descending so that each coefficient reads the old value
                for i in (shift..n).rev() {
                    if out.coeffs[i - shift].is_zero() {
                        continue;
                    }
                    let add = out.coeffs[i - shift].clone() * c;
                    out.coeffs[i] = std::mem::replace(&mut out.coeffs[i], R::zero()) + &add;
                }
            }
        } else {
            // B = A / (1 + c t^s)  <=>  B_i = A_i - c B_{i-s}
            for _ in 0..(-exponent) {
                for i in shift..n {
                    if out.coeffs[i - shift].is_zero() {
                        continue;
                    }
                    let sub = out.coeffs[i - shift].clone() * c;
                    out.coeffs[i] = std::mem::replace(&mut out.coeffs[i], R::zero()) - &sub;
                }
            }
        }
        out
    }

    /// Two-sided inverse up to truncation; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or(Error::NonUnitConstantTerm)?;
        let n = self.coeffs.len();
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = R::zero();
            for i in 1..=k {
                if self.coeffs[i].is_zero() || out[k - i].is_zero() {
                    continue;
                }
                acc = acc + &(self.coeffs[i].clone() * &out[k - i]);
            }
            out.push(-(acc * &inv0));
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_series(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_series(&base);
            }
        }
        acc
    }
}

impl<R: QAlgebra> PowerSeries<R> {
    /// `exp` of a series with zero constant term, via `n e_n = Σ k a_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let n = self.coeffs.len();
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(R::one());
        for m in 1..n {
            let mut acc = R::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() || out[m - k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k].clone() * &out[m - k];
                acc = acc + &term.scale(&crate::algebra::rat(k as i64));
            }
            out.push(acc.scale(&crate::algebra::ratio(1, m as i64)));
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `log` of a series with constant term one, via `n l_n = n a_n - Σ k l_k a_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != R::one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let n = self.coeffs.len();
        let mut out: Vec<R> = vec![R::zero(); n];
        for m in 1..n {
            let mut acc = self.coeffs[m].scale(&crate::algebra::rat(m as i64));
            for k in 1..m {
                if out[k].is_zero() || self.coeffs[m - k].is_zero() {
                    continue;
                }
                let term = (out[k].clone() * &self.coeffs[m - k]).scale(&crate::algebra::rat(k as i64));
                acc = acc - &term;
            }
            out[m] = acc.scale(&crate::algebra::ratio(1, m as i64));
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.map(|a| a.scale(q))
    }
}

impl<R: Ring> Add<&PowerSeries<R>> for &PowerSeries<R> {
    type Output = PowerSeries<R>;

    fn add(self, rhs: &PowerSeries<R>) -> PowerSeries<R> {
        let order = self.order().min(rhs.order());
        PowerSeries::from_fn(order, |i| self.coeffs[i].clone() + &rhs.coeffs[i])
    }
}

impl<R: Ring> Sub<&PowerSeries<R>> for &PowerSeries<R> {
    type Output = PowerSeries<R>;

    fn sub(self, rhs: &PowerSeries<R>) -> PowerSeries<R> {
        let order = self.order().min(rhs.order());
        PowerSeries::from_fn(order, |i| self.coeffs[i].clone() - &rhs.coeffs[i])
    }
}

impl<R: Ring> Mul<&PowerSeries<R>> for &PowerSeries<R> {
    type Output = PowerSeries<R>;

    fn mul(self, rhs: &PowerSeries<R>) -> PowerSeries<R> {
        self.mul_series(rhs)
    }
}

impl<R: Ring> Neg for &PowerSeries<R> {
    type Output = PowerSeries<R>;

    fn neg(self) -> PowerSeries<R> {
        self.map(|a| -a.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn q(v: &[i64], order: usize) -> PowerSeries<Rational> {
        PowerSeries::from_coeffs(v.iter().map(|&x| rat(x)).collect(), order)
    }

    #[test]
    fn geometric_inverse() {
        let s = q(&[1, -1], 6);
        assert_eq!(s.inverse().unwrap(), q(&[1, 1, 1, 1, 1, 1, 1], 6));
        assert!(q(&[0, 1], 3).inverse().is_err());
    }

    #[test]
    fn binomial_factors_match_full_products() {
        let a = q(&[1, 2, 0, -3, 5, 1, 7], 6);
        let c = rat(-2);
        let factor = PowerSeries::from_coeffs(vec![rat(1), rat(0), c.clone()], 6);
        assert_eq!(a.mul_binomial(&c, 2, 3), a.mul_series(&factor.pow(3)));
        let inv = factor.inverse().unwrap();
        assert_eq!(a.mul_binomial(&c, 2, -2), a.mul_series(&inv.pow(2)));
    }

    #[test]
    fn exp_log_inverse_pair() {
        let a = q(&[0, 1, -2, 3, 0, 1], 5);
        let e = a.exp().unwrap();
        assert_eq!(e.log().unwrap(), a);
        // exp(t) coefficients are 1/n!
        let t = q(&[0, 1], 5);
        let et = t.exp().unwrap();
        assert_eq!(et.coeff(4), Some(&ratio(1, 24)));
    }

    #[test]
    fn substitute_and_rescale() {
        let a = q(&[1, 1, 1, 1, 1], 4);
        assert_eq!(a.substitute_power(2), q(&[1, 0, 1, 0, 1], 4));
        assert_eq!(a.rescale_variable(&rat(-1)), q(&[1, -1, 1, -1, 1], 4));
    }
}
