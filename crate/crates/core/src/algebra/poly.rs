//! Dense univariate polynomials over a field.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::traits::{Field, Ring};

/// `Σ c_i x^i` with the leading coefficient nonzero (zero is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Ring> Poly<F> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly { coeffs: vec![c] }.trimmed()
    }

    pub fn x_pow(k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = F::one();
        Poly { coeffs }
    }

    /// Coefficients from degree zero upward.
    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        Poly { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Number of leading zero coefficients from the bottom, i.e. the x-adic valuation.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `x^k`, which must divide `self`.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.valuation().is_none_or(|v| v >= k));
        Poly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
        .trimmed()
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
        }
        .trimmed()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let slot = &mut out[i + j];
                *slot = std::mem::replace(slot, F::zero()) + &(a.clone() * b);
            }
        }
        Poly { coeffs: out }.trimmed()
    }

    fn combine(&self, rhs: &Self, negate: bool) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            out.push(match rhs.coeffs.get(i) {
                Some(b) if negate => a - b,
                Some(b) => a + b,
                None => a,
            });
        }
        Poly { coeffs: out }.trimmed()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x + c)
    }

    /// `self / divisor` when `divisor` is monic and divides exactly.
    pub fn div_exact_monic(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divrem_monic(divisor);
        r.is_zero().then_some(q)
    }

    /// Division with remainder by a monic polynomial; needs no field.
    pub fn divrem_monic(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        assert!(divisor.leading() == Some(&F::one()), "divisor must be monic");
        if self.degree().is_none_or(|n| n < d) {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let n = rem.len() - 1;
        let mut quot = vec![F::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let c = std::mem::replace(&mut rem[k + d], F::zero());
            if c.is_zero() {
                continue;
            }
            for (i, b) in divisor.coeffs[..d].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let slot = &mut rem[k + i];
                *slot = std::mem::replace(slot, F::zero()) - &(c.clone() * b);
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Poly { coeffs: quot }.trimmed(), Poly { coeffs: rem }.trimmed())
    }
}

impl<F: Field> Poly<F> {
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => {
                let inv = lc.try_inverse().expect("nonzero field element");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let lc = divisor
            .leading()
            .expect("division by the zero polynomial")
            .clone();
        let inv = lc.try_inverse().expect("nonzero field element");
        let (q, r) = self.divrem_monic(&divisor.scale(&inv));
        (q.scale(&inv), r)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem_monic(&b);
            a = b;
            b = r.monic();
        }
        a
    }
}

impl<F: Ring> Add<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        self.combine(rhs, false)
    }
}

impl<F: Ring> Sub<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        self.combine(rhs, true)
    }
}

impl<F: Ring> Mul<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        self.mul_ref(rhs)
    }
}

impl<F: Ring> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}
