//! Coefficient-ring abstractions shared by every container in the crate.
//!
//! The containers (`PowerSeries`, `QSeries`, `LaurentPoly`, `Poly`) are generic
//! over these traits so the same code runs on exact rationals, big integers,
//! Laurent polynomials, Chern-root series and plain floats.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

/// A commutative ring with identity.
///
/// Arithmetic takes the right operand by reference so that big-number
/// coefficients are not cloned on every operation.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse when `self` is a unit.
    fn try_inverse(&self) -> Option<Self>;
}

/// A ring containing the rationals, so that `1/k` and `x/k!` make sense.
pub trait QAlgebra: Ring {
    fn from_rational(q: &Rational) -> Self;

    fn scale(&self, q: &Rational) -> Self {
        self.clone() * &Self::from_rational(q)
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + for<'a> Div<&'a Self, Output = Self> {}

impl Ring for Rational {
    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl QAlgebra for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
}

impl Field for Rational {}

impl Ring for BigInt {
    fn try_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

macro_rules! float_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn try_inverse(&self) -> Option<Self> {
                if *self == 0.0 {
                    None
                } else {
                    Some(1.0 / *self)
                }
            }
        }

        impl QAlgebra for $t {
            fn from_rational(q: &Rational) -> Self {
                q.to_f64().map_or(<$t>::NAN, |x| x as $t)
            }
        }

        impl Field for $t {}
    };
}

float_ring!(f32);
float_ring!(f64);

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the reduced rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// `k`-th power of a ring element by repeated squaring.
pub fn pow<R: Ring>(base: &R, mut k: u64) -> R {
    let mut acc = R::one();
    let mut b = base.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * &b;
        }
        k >>= 1;
        if k > 0 {
            b = b.clone() * &b;
        }
    }
    acc
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn render_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses `p/q` or `p` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}
