//! The four Jacobi theta functions with `q = e^{2πiτ}` and `z = e^{2πiv}`:
//!
//! ```text
//! θ (v,τ) = 2q^{1/8} sin(πv) ∏_j (1−q^j)(1−z q^j)(1−z⁻¹q^j)
//! θ₁(v,τ) = 2q^{1/8} cos(πv) ∏_j (1−q^j)(1+z q^j)(1+z⁻¹q^j)
//! θ₂(v,τ) =                  ∏_j (1−q^j)(1−z q^{j−1/2})(1−z⁻¹q^{j−1/2})
//! θ₃(v,τ) =                  ∏_j (1−q^j)(1+z q^{j−1/2})(1+z⁻¹q^{j−1/2})
//! ```

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{Float, FloatConst};
use serde::Serialize;

use crate::algebra::numeric::{check_upper_half_plane, complex_eval_laurent, half_nome};
use crate::algebra::{rat, Evaluation, HalfInt};
use crate::error::{Error, Result};
use crate::{CharSeries, Laurent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ThetaKind {
    Theta,
    Theta1,
    Theta2,
    Theta3,
}

impl ThetaKind {
    pub const ALL: [ThetaKind; 4] = [ThetaKind::Theta, ThetaKind::Theta1, ThetaKind::Theta2, ThetaKind::Theta3];

    /// Sign in front of `z^{±1}` in the product factors.
    fn plus(self) -> bool {
        matches!(self, ThetaKind::Theta1 | ThetaKind::Theta3)
    }

    /// Whether the `z`-factors sit at half-integral q-grades.
    fn half_shifted(self) -> bool {
        matches!(self, ThetaKind::Theta2 | ThetaKind::Theta3)
    }

    pub fn prefactor(self) -> TrigPrefactor {
        match self {
            ThetaKind::Theta => TrigPrefactor::Sin,
            ThetaKind::Theta1 => TrigPrefactor::Cos,
            _ => TrigPrefactor::None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ThetaKind::Theta => "theta",
            ThetaKind::Theta1 => "theta1",
            ThetaKind::Theta2 => "theta2",
            ThetaKind::Theta3 => "theta3",
        }
    }
}

impl fmt::Display for ThetaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ThetaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ThetaKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theta function {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TrigPrefactor {
    /// `2 sin(πv)`
    Sin,
    /// `2 cos(πv)`
    Cos,
    None,
}

/// A theta function written as `prefactor · q^{q_shift} · series(z, q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaExpansion {
    pub kind: ThetaKind,
    /// `1/8` for `θ` and `θ₁`, zero otherwise.
    pub q_shift: (i64, i64),
    pub series: CharSeries,
    pub prefactor: TrigPrefactor,
}

/// Formal product expansion through `q^{n_q}`, keeping `|z-exponent| ≤ n_z`.
pub fn theta_qexp(kind: ThetaKind, n_q: u32, n_z: i64) -> ThetaExpansion {
    let sign = if kind.plus() { rat(1) } else { rat(-1) };
    let mut s = CharSeries::one(n_q);
    for j in 1..=n_q as i64 {
        s = s.mul_binomial(&Laurent::constant(rat(-1)), HalfInt::whole(j), 1);
        let g = if kind.half_shifted() {
            HalfInt::from_halves(2 * j - 1)
        } else {
            HalfInt::whole(j)
        };
        s = s.mul_binomial(&Laurent::monomial(sign.clone(), 1), g, 1);
        s = s.mul_binomial(&Laurent::monomial(sign.clone(), -1), g, 1);
    }
    let series = s.map(|c| c.clamp_exponents(-n_z, n_z));
    let q_shift = if kind.prefactor() == TrigPrefactor::None {
        (0, 1)
    } else {
        (1, 8)
    };
    ThetaExpansion {
        kind,
        q_shift,
        series,
        prefactor: kind.prefactor(),
    }
}

fn trig<T: Float + FloatConst>(p: TrigPrefactor, v: Complex<T>) -> Complex<T> {
    let two = T::one() + T::one();
    let x = v * T::PI();
    match p {
        TrigPrefactor::Sin => x.sin() * two,
        TrigPrefactor::Cos => x.cos() * two,
        TrigPrefactor::None => Complex::new(T::one(), T::zero()),
    }
}

/// `q^{1/8} = e^{2πiτ/8}`.
fn nome_eighth<T: Float + FloatConst>(tau: Complex<T>) -> Complex<T> {
    (Complex::new(T::zero(), T::PI() / T::from(4).unwrap()) * tau).exp()
}

impl ThetaExpansion {
    /// Sums the truncated expansion at `z = e^{2πiv}`.
    pub fn eval<T: Float + FloatConst>(&self, v: Complex<T>, tau: Complex<T>) -> Result<Evaluation<T>> {
        let z = (Complex::new(T::zero(), T::PI() + T::PI()) * v).exp();
        let e = complex_eval_laurent(&self.series, z, tau)?;
        let mut pre = trig(self.prefactor, v);
        if self.q_shift.0 != 0 {
            pre = pre * nome_eighth(tau);
        }
        Ok(Evaluation {
            value: e.value * pre,
            tail_bound: e.tail_bound * pre.norm(),
        })
    }
}

/// Numeric product with factors `j ≤ n`.
pub fn theta_eval<T: Float + FloatConst>(
    kind: ThetaKind,
    v: Complex<T>,
    tau: Complex<T>,
    n: u32,
) -> Result<Evaluation<T>> {
    check_upper_half_plane(tau)?;
    let one = Complex::new(T::one(), T::zero());
    let h = half_nome(tau);
    let q = h * h;
    let z = (Complex::new(T::zero(), T::PI() + T::PI()) * v).exp();
    let zi = one / z;
    let mut prod = one;
    let mut qj = one;
    for _ in 0..n {
        let qz = if kind.half_shifted() { qj * h } else { qj * q };
        qj = qj * q;
        let (a, b) = if kind.plus() { (one + z * qz, one + zi * qz) } else { (one - z * qz, one - zi * qz) };
        prod = prod * (one - qj) * a * b;
    }
    let mut pre = trig(kind.prefactor(), v);
    if kind.prefactor() != TrigPrefactor::None {
        pre = pre * nome_eighth(tau);
    }
    let value = prod * pre;
    // the omitted factors are 1 + O(|q|^{n+1/2} max(|z|, 1/|z|))
    let r = h.norm().powi(2 * n as i32 + 1) * z.norm().max(zi.norm());
    let tail = if r < T::from(0.5).unwrap() {
        value.norm() * (r * T::from(6).unwrap()) / (T::one() - h.norm())
    } else {
        T::infinity()
    };
    Ok(Evaluation { value, tail_bound: tail })
}

/// One transformation law and its numeric residual `|LHS − RHS|`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawResidual {
    pub law: &'static str,
    pub residual: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawReport {
    pub laws: Vec<LawResidual>,
    pub tolerance: f64,
    pub all_passed: bool,
}

impl LawReport {
    pub fn from_residuals(laws: Vec<(&'static str, f64)>, tol: f64) -> Self {
        let laws: Vec<LawResidual> = laws
            .into_iter()
            .map(|(law, residual)| LawResidual {
                law,
                residual,
                passed: residual <= tol,
            })
            .collect();
        let all_passed = laws.iter().all(|l| l.passed);
        LawReport {
            laws,
            tolerance: tol,
            all_passed,
        }
    }

    /// The report, or an error naming the worst failing law.
    pub fn into_result(self) -> Result<Self> {
        if self.all_passed {
            return Ok(self);
        }
        let worst = self
            .laws
            .iter()
            .filter(|l| !l.passed)
            .max_by(|a, b| a.residual.total_cmp(&b.residual))
            .expect("some law failed");
        Err(Error::LawFailed {
            law: worst.law.to_string(),
            residual: worst.residual,
            tol: self.tolerance,
        })
    }
}

fn to_f64<T: Float>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Residuals of the eight `τ ↦ τ+1` and `τ ↦ −1/τ` laws, without judging them.
pub fn theta_law_residuals<T: Float + FloatConst>(
    v: Complex<T>,
    tau: Complex<T>,
    n: u32,
    tol: f64,
) -> Result<LawReport> {
    use ThetaKind::*;
    check_upper_half_plane(tau)?;
    let one = Complex::new(T::one(), T::zero());
    let i = Complex::new(T::zero(), T::one());
    let tau1 = tau + one;
    let s_tau = -one / tau;
    check_upper_half_plane(s_tau)?;
    let ev = |k: ThetaKind, v: Complex<T>, t: Complex<T>| theta_eval(k, v, t, n).map(|e| e.value);

    let eighth = (i * T::PI() / T::from(4).unwrap()).exp();
    // principal branch of (τ/i)^{1/2}
    let root = (tau / i).sqrt();
    let gauss = (i * T::PI() * tau * v * v).exp();
    let s = root * gauss;
    let tv = tau * v;

    let laws = vec![
        ("theta(v,tau+1) = e^{pi i/4} theta(v,tau)", ev(Theta, v, tau1)? - eighth * ev(Theta, v, tau)?),
        ("theta1(v,tau+1) = e^{pi i/4} theta1(v,tau)", ev(Theta1, v, tau1)? - eighth * ev(Theta1, v, tau)?),
        ("theta2(v,tau+1) = theta3(v,tau)", ev(Theta2, v, tau1)? - ev(Theta3, v, tau)?),
        ("theta3(v,tau+1) = theta2(v,tau)", ev(Theta3, v, tau1)? - ev(Theta2, v, tau)?),
        ("theta(v,-1/tau) = (1/i) (tau/i)^{1/2} e^{pi i tau v^2} theta(tau v,tau)", ev(Theta, v, s_tau)? - s / i * ev(Theta, tv, tau)?),
        ("theta1(v,-1/tau) = (tau/i)^{1/2} e^{pi i tau v^2} theta2(tau v,tau)", ev(Theta1, v, s_tau)? - s * ev(Theta2, tv, tau)?),
        ("theta2(v,-1/tau) = (tau/i)^{1/2} e^{pi i tau v^2} theta1(tau v,tau)", ev(Theta2, v, s_tau)? - s * ev(Theta1, tv, tau)?),
        ("theta3(v,-1/tau) = (tau/i)^{1/2} e^{pi i tau v^2} theta3(tau v,tau)", ev(Theta3, v, s_tau)? - s * ev(Theta3, tv, tau)?),
    ];
    Ok(LawReport::from_residuals(
        laws.into_iter().map(|(name, d)| (name, to_f64(d.norm()))).collect(),
        tol,
    ))
}

/// Checks all eight laws, failing with the name of the worst violated one.
pub fn verify_theta_transforms<T: Float + FloatConst>(
    v: Complex<T>,
    tau: Complex<T>,
    n: u32,
    tol: f64,
) -> Result<LawReport> {
    theta_law_residuals(v, tau, n, tol)?.into_result()
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn lp(terms: &[(i64, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn low_order_coefficients() {
        let t2 = theta_qexp(ThetaKind::Theta2, 3, 10);
        assert_eq!(t2.series.coeff_half(0), &lp(&[(0, 1)]));
        let t3 = theta_qexp(ThetaKind::Theta3, 3, 10);
        assert_eq!(t3.series.coeff(HalfInt::HALF), Some(&lp(&[(1, 1), (-1, 1)])));
        let t = theta_qexp(ThetaKind::Theta, 3, 10);
        assert_eq!(t.series.coeff(HalfInt::ONE), Some(&lp(&[(0, -1), (1, -1), (-1, -1)])));
        assert_eq!(t.q_shift, (1, 8));
        assert_eq!(t.prefactor, TrigPrefactor::Sin);
    }

    #[test]
    fn z_symmetry_and_clamp() {
        for k in ThetaKind::ALL {
            let e = theta_qexp(k, 6, 2);
            for (_, c) in e.series.grades() {
                assert_eq!(c, &c.conjugate());
                assert!(c.min_exponent().unwrap_or(0) >= -2 && c.max_exponent().unwrap_or(0) <= 2);
            }
        }
    }

    #[test]
    fn special_values() {
        let i = C::new(0.0, 1.0);
        let zero = C::new(0.0, 0.0);
        assert_eq!(theta_eval(ThetaKind::Theta, zero, i, 30).unwrap().value, zero);
        let t1 = theta_eval(ThetaKind::Theta1, zero, i, 30).unwrap().value;
        assert!(t1.re > 0.0 && t1.im.abs() < 1e-15);
        let t2 = theta_eval(ThetaKind::Theta2, zero, i, 30).unwrap().value;
        assert!((t1 - t2).norm() < 1e-12);
        assert!(theta_eval(ThetaKind::Theta, zero, C::new(0.0, -1.0), 3).is_err());
    }

    #[test]
    fn parity_in_v() {
        let v = C::new(0.17, -0.08);
        let tau = C::new(0.1, 0.95);
        for k in ThetaKind::ALL {
            let a = theta_eval(k, v, tau, 40).unwrap().value;
            let b = theta_eval(k, -v, tau, 40).unwrap().value;
            let expect = if k == ThetaKind::Theta { -a } else { a };
            assert!((b - expect).norm() < 1e-12, "{k}");
        }
    }

    #[test]
    fn product_matches_expansion() {
        for v in [C::new(0.0, 0.0), C::new(0.21, 0.03), C::new(-0.3, -0.05)] {
            for tau in [C::new(0.0, 1.0), C::new(0.2, 1.1), C::new(-0.35, 0.85)] {
                for k in ThetaKind::ALL {
                    let p = theta_eval(k, v, tau, 30).unwrap();
                    let e = theta_qexp(k, 14, 30).eval(v, tau).unwrap();
                    let bound = p.tail_bound + e.tail_bound + 1e-12;
                    assert!((p.value - e.value).norm() < bound, "{k} {v} {tau}");
                }
            }
        }
    }

    #[test]
    fn transformation_laws() {
        let r = verify_theta_transforms(C::new(0.1, 0.05), C::new(0.2, 1.1), 40, 1e-9).unwrap();
        assert_eq!(r.laws.len(), 8);
        let r = theta_law_residuals(C::new(0.0, 0.0), C::new(0.0, 1.0), 40, 1e-9).unwrap();
        assert_eq!(r.laws[4].residual, 0.0);
        assert!(r.all_passed);
    }

    #[test]
    fn failing_law_is_named() {
        // one factor is too few for the S-laws at this point
        let err = verify_theta_transforms(C::new(0.1, 0.05), C::new(0.2, 1.1), 1, 1e-12).unwrap_err();
        assert!(matches!(err, Error::LawFailed { .. }));
    }

    #[test]
    fn single_precision() {
        let r = theta_law_residuals(Complex::new(0.1f32, 0.05), Complex::new(0.2f32, 1.1), 20, 1e-4).unwrap();
        assert!(r.all_passed, "{r:?}");
    }
}
