//! Floating-point evaluation of exact q-series at a point of the upper half-plane.

use num_complex::Complex;
use num_traits::{Float, FloatConst, ToPrimitive, Zero};

use super::laurent::LaurentPoly;
use super::qseries::QSeries;
use super::traits::Ring;
use crate::error::{Error, Result};

/// A numeric value together with a heuristic bound on the truncation tail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation<T> {
    pub value: Complex<T>,
    pub tail_bound: T,
}

pub(crate) fn check_upper_half_plane<T: Float>(tau: Complex<T>) -> Result<()> {
    if tau.im > T::zero() && tau.im.is_finite() && tau.re.is_finite() {
        Ok(())
    } else {
        Err(Error::NotUpperHalfPlane {
            re: tau.re.to_f64().unwrap_or(f64::NAN),
            im: tau.im.to_f64().unwrap_or(f64::NAN),
        })
    }
}

/// `q^{1/2} = exp(πiτ)`.
pub fn half_nome<T: Float + FloatConst>(tau: Complex<T>) -> Complex<T> {
    (Complex::new(T::zero(), T::PI()) * tau).exp()
}

fn to_float<T: Float, R: ToPrimitive>(c: &R) -> T {
    T::from(c.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(T::nan)
}

fn tail<T: Float>(abs_half: T, max_half: usize, scale: T) -> T {
    // |q|^{N+1/2} / (1 - |q|^{1/2}) with N = max_half / 2
    let n = T::from(max_half + 1).unwrap();
    scale * abs_half.powf(n) / (T::one() - abs_half)
}

/// `Σ c_i q^{i/2}` at `q = exp(2πiτ)`.
///
/// The tail estimate multiplies the geometric remainder by the largest
/// coefficient magnitude among the top few stored grades.
pub fn complex_eval<T, R>(s: &QSeries<R>, tau: Complex<T>) -> Result<Evaluation<T>>
where
    T: Float + FloatConst,
    R: Ring + ToPrimitive,
{
    check_upper_half_plane(tau)?;
    let h = half_nome(tau);
    let mut value = Complex::zero();
    for i in (0..=s.max_half()).rev() {
        value = value * h + Complex::new(to_float::<T, R>(s.coeff_half(i)), T::zero());
    }
    let window = 4.min(s.max_half() + 1);
    let scale = (s.max_half() + 1 - window..=s.max_half())
        .map(|i| to_float::<T, R>(s.coeff_half(i)).abs())
        .fold(T::zero(), T::max);
    let scale = scale.max(T::one());
    Ok(Evaluation {
        value,
        tail_bound: tail(h.norm(), s.max_half(), scale),
    })
}

/// Evaluates a series with Laurent coefficients in `z` at `z`, `τ`.
pub fn complex_eval_laurent<T, R>(
    s: &QSeries<LaurentPoly<R>>,
    z: Complex<T>,
    tau: Complex<T>,
) -> Result<Evaluation<T>>
where
    T: Float + FloatConst,
    R: Ring + ToPrimitive,
{
    check_upper_half_plane(tau)?;
    let h = half_nome(tau);
    let mut value = Complex::zero();
    let mut top = T::zero();
    for i in (0..=s.max_half()).rev() {
        let c = eval_laurent_complex(s.coeff_half(i), z);
        if i + 4 > s.max_half() {
            top = top.max(c.norm());
        }
        value = value * h + c;
    }
    Ok(Evaluation {
        value,
        tail_bound: tail(h.norm(), s.max_half(), top.max(T::one())),
    })
}

/// `Σ c_e z^e` in floating point.
pub fn eval_laurent_complex<T, R>(p: &LaurentPoly<R>, z: Complex<T>) -> Complex<T>
where
    T: Float + FloatConst,
    R: Ring + ToPrimitive,
{
    p.terms().fold(Complex::zero(), |acc, (e, c)| {
        acc + z.powi(e as i32) * to_float::<T, R>(c)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, HalfInt};
    use crate::Rational;

    #[test]
    fn constant_and_nome() {
        let one = QSeries::<Rational>::one(3);
        let e = complex_eval(&one, Complex::new(0.3, 0.7)).unwrap();
        assert!((e.value - Complex::new(1.0, 0.0)).norm() < 1e-15);

        let q = QSeries::monomial(rat(1), HalfInt::ONE, 3);
        let e = complex_eval(&q, Complex::new(0.0, 1.0)).unwrap();
        assert!((e.value.re - 0.001_867_442_731_707_988_8).abs() < 1e-15);
        assert!(e.value.im.abs() < 1e-15);
    }

    #[test]
    fn rejects_lower_half_plane() {
        let one = QSeries::<Rational>::one(1);
        assert!(complex_eval(&one, Complex::new(0.0, -1.0)).is_err());
        assert!(complex_eval(&one, Complex::new(0.0f32, 0.0)).is_err());
    }

    #[test]
    fn works_in_single_precision() {
        let s = QSeries::from_whole_fn(4, |i| rat(i as i64 + 1));
        let e32 = complex_eval(&s, Complex::new(0.1f32, 0.9)).unwrap();
        let e64 = complex_eval(&s, Complex::new(0.1f64, 0.9)).unwrap();
        assert!((e32.value.re as f64 - e64.value.re).abs() < 1e-5);
    }
}
