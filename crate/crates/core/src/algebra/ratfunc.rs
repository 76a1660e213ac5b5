//! Reduced univariate rational functions.

use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::LaurentPoly;
use super::poly::Poly;
use super::traits::Field;
use crate::error::{Error, Result};

/// `numerator / denominator`, coprime, with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RationalFunc<F> {
    /// Builds and reduces; fails on a zero denominator.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce_parts(num, den))
    }

    /// Builds `p / q` from two Laurent polynomials by clearing negative powers.
    pub fn from_laurent_ratio(num: &LaurentPoly<F>, den: &LaurentPoly<F>) -> Result<Self> {
        if num_traits::Zero::is_zero(den) {
            return Err(Error::ZeroDenominator);
        }
        let shift_n = num.min_exponent().unwrap_or(0);
        let shift_d = den.min_exponent().unwrap_or(0);
        let (n, _) = laurent_as_poly(num);
        let (d, _) = laurent_as_poly(den);
        // num = x^{shift_n} n, den = x^{shift_d} d
        let k = shift_n - shift_d;
        let (n, d) = if k >= 0 {
            (n.shift_up(k as usize), d)
        } else {
            (n, d.shift_up((-k) as usize))
        };
        Self::new(n, d)
    }

    pub fn from_laurent(p: &LaurentPoly<F>) -> Self {
        let (n, low) = laurent_as_poly(p);
        if low >= 0 {
            Self {
                num: n.shift_up(low as usize),
                den: Poly::one(),
            }
        } else {
            Self::reduce_parts(n, Poly::x_pow((-low) as usize))
        }
    }

    fn reduce_parts(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return RationalFunc {
                num,
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.divrem(&g);
        let (mut d, _) = den.divrem(&g);
        let lc = d.leading().expect("nonzero denominator").clone();
        let inv = lc.try_inverse().expect("nonzero field element");
        n = n.scale(&inv);
        d = d.scale(&inv);
        RationalFunc { num: n, den: d }
    }

    /// Re-reduces; values built through `new` are already reduced.
    pub fn reduce(&self) -> Self {
        Self::reduce_parts(self.num.clone(), self.den.clone())
    }

    pub fn numerator(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        let inv = d.try_inverse()?;
        Some(self.num.eval(x) * &inv)
    }

    /// The Laurent polynomial this equals, when the reduced denominator is `x^k`.
    pub fn to_laurent(&self) -> Result<LaurentPoly<F>> {
        let k = self.den.degree().unwrap_or(0);
        let monomial = self.den.coeffs()[..k].iter().all(num_traits::Zero::is_zero);
        if !monomial {
            return Err(Error::NotLaurent {
                denominator_degree: k,
            });
        }
        Ok(LaurentPoly::from_dense(-(k as i64), self.num.coeffs().to_vec()))
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

fn laurent_as_poly<F: Field>(p: &LaurentPoly<F>) -> (Poly<F>, i64) {
    let (low, coeffs) = p.dense();
    (Poly::from_coeffs(coeffs.to_vec()), low)
}

impl<F: Field> Add<&RationalFunc<F>> for &RationalFunc<F> {
    type Output = RationalFunc<F>;
    fn add(self, rhs: &RationalFunc<F>) -> RationalFunc<F> {
        let g = self.den.gcd(&rhs.den);
        let (a, _) = rhs.den.divrem(&g);
        let (b, _) = self.den.divrem(&g);
        let num = &(&self.num * &a) + &(&rhs.num * &b);
        let den = &self.den * &a;
        RationalFunc::reduce_parts(num, den)
    }
}

impl<F: Field> Neg for &RationalFunc<F> {
    type Output = RationalFunc<F>;
    fn neg(self) -> RationalFunc<F> {
        RationalFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<F: Field> Sub<&RationalFunc<F>> for &RationalFunc<F> {
    type Output = RationalFunc<F>;
    fn sub(self, rhs: &RationalFunc<F>) -> RationalFunc<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul<&RationalFunc<F>> for &RationalFunc<F> {
    type Output = RationalFunc<F>;
    fn mul(self, rhs: &RationalFunc<F>) -> RationalFunc<F> {
        RationalFunc::reduce_parts(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use crate::Rational;

    type L = LaurentPoly<Rational>;

    fn p(v: &[i64]) -> Poly<Rational> {
        Poly::from_coeffs(v.iter().map(|&x| rat(x)).collect())
    }

    fn lp(terms: &[(i64, i64)]) -> L {
        L::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn cancels_common_factor() {
        let f = RationalFunc::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f.numerator(), &p(&[1, 1]));
        assert_eq!(f.denominator(), &p(&[1]));
    }

    #[test]
    fn geometric_quotient_is_laurent() {
        let f = RationalFunc::from_laurent_ratio(&lp(&[(4, 1), (-4, -1)]), &lp(&[(2, 1), (-2, -1)]))
            .unwrap();
        assert_eq!(f.to_laurent().unwrap(), lp(&[(2, 1), (-2, 1)]));
    }

    #[test]
    fn cancelling_fixed_point_pair() {
        // 1/(μ²-μ⁻²) - 1/(μ²-μ⁻²)
        let term = RationalFunc::from_laurent_ratio(&lp(&[(0, 1)]), &lp(&[(2, 1), (-2, -1)])).unwrap();
        let sum = &term - &term;
        assert!(sum.is_zero());
        assert_eq!(sum.to_laurent().unwrap(), <L as num_traits::Zero>::zero());
    }

    #[test]
    fn monomial_division_and_pole() {
        let f = RationalFunc::from_laurent_ratio(&lp(&[(3, 1), (1, 1)]), &lp(&[(2, 1)])).unwrap();
        assert_eq!(f.to_laurent().unwrap(), lp(&[(1, 1), (-1, 1)]));
        let g = RationalFunc::new(p(&[1]), p(&[-1, 1])).unwrap();
        assert!(matches!(g.to_laurent(), Err(Error::NotLaurent { .. })));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(RationalFunc::new(p(&[1]), p(&[])), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn reduction_preserves_values() {
        let num = &p(&[2, -1, 3]) * &p(&[1, 1]);
        let den = &p(&[5, 0, 2]) * &p(&[1, 1]);
        let f = RationalFunc::new(num.clone(), den.clone()).unwrap();
        for x in [ratio(1, 3), rat(7), ratio(-5, 2)] {
            let direct = num.eval(&x) / den.eval(&x);
            assert_eq!(f.eval(&x), Some(direct));
        }
        assert_eq!(f.denominator().leading(), Some(&rat(1)));
    }
}
