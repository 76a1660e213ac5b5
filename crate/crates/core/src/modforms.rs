//! Level-2 modular forms `δ₁, ε₁` (on `Γ₀(2)`) and `δ₂, ε₂` (on `Γ⁰(2)`)
//! as exact divisor-sum q-expansions.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{Float, FloatConst};
use serde::Serialize;

use crate::algebra::{complex_eval, divisors, rat, ratio, HalfInt};
use crate::error::{Error, Result};
use crate::theta::LawReport;
use crate::{Rational, RationalSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ModForm {
    #[serde(rename = "delta1")]
    Delta1,
    #[serde(rename = "epsilon1")]
    Epsilon1,
    #[serde(rename = "delta2")]
    Delta2,
    #[serde(rename = "epsilon2")]
    Epsilon2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Level2Group {
    /// Lower-left entry even.
    #[serde(rename = "Gamma_0(2)")]
    Gamma0,
    /// Upper-right entry even.
    #[serde(rename = "Gamma^0(2)")]
    GammaUpper0,
}

impl ModForm {
    pub const ALL: [ModForm; 4] = [ModForm::Delta1, ModForm::Epsilon1, ModForm::Delta2, ModForm::Epsilon2];

    pub fn weight(self) -> u32 {
        match self {
            ModForm::Delta1 | ModForm::Delta2 => 2,
            ModForm::Epsilon1 | ModForm::Epsilon2 => 4,
        }
    }

    pub fn group(self) -> Level2Group {
        match self {
            ModForm::Delta1 | ModForm::Epsilon1 => Level2Group::Gamma0,
            ModForm::Delta2 | ModForm::Epsilon2 => Level2Group::GammaUpper0,
        }
    }

    /// The factor making the q-expansion integral: `4δ₁, 16ε₁, 8δ₂, ε₂`.
    pub fn integral_scale(self) -> i64 {
        match self {
            ModForm::Delta1 => 4,
            ModForm::Epsilon1 => 16,
            ModForm::Delta2 => 8,
            ModForm::Epsilon2 => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ModForm::Delta1 => "delta1",
            ModForm::Epsilon1 => "epsilon1",
            ModForm::Delta2 => "delta2",
            ModForm::Epsilon2 => "epsilon2",
        }
    }
}

impl fmt::Display for ModForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ModForm::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown modular form {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModFormSeries {
    pub name: ModForm,
    pub series: RationalSeries,
    pub weight: u32,
    pub group: Level2Group,
}

fn odd_divisor_sum(n: u64) -> i64 {
    divisors(n).into_iter().filter(|d| d % 2 == 1).sum::<u64>() as i64
}

/// `Σ_{d | n} (−1)^d d³`.
fn signed_cube_sum(n: u64) -> Rational {
    divisors(n).into_iter().fold(rat(0), |acc, d| {
        let c = rat(d as i64).pow(3);
        if d % 2 == 0 {
            acc + c
        } else {
            acc - c
        }
    })
}

/// `Σ_{d | n, n/d odd} d³`.
fn cofactor_odd_cube_sum(n: u64) -> Rational {
    divisors(n)
        .into_iter()
        .filter(|d| (n / d) % 2 == 1)
        .fold(rat(0), |acc, d| acc + rat(d as i64).pow(3))
}

/// Exact q-expansion through `q^n`.
pub fn modform_qexp(name: ModForm, n: u32) -> ModFormSeries {
    let series = match name {
        ModForm::Delta1 => RationalSeries::from_whole_fn(n, |k| {
            if k == 0 {
                ratio(1, 4)
            } else {
                rat(6 * odd_divisor_sum(k as u64))
            }
        }),
        ModForm::Epsilon1 => RationalSeries::from_whole_fn(n, |k| {
            if k == 0 {
                ratio(1, 16)
            } else {
                signed_cube_sum(k as u64)
            }
        }),
        ModForm::Delta2 => RationalSeries::from_half_fn(n, |i| {
            if i == 0 {
                ratio(-1, 8)
            } else {
                rat(-3 * odd_divisor_sum(i as u64))
            }
        }),
        ModForm::Epsilon2 => RationalSeries::from_half_fn(n, |i| {
            if i == 0 {
                rat(0)
            } else {
                cofactor_odd_cube_sum(i as u64)
            }
        }),
    };
    ModFormSeries {
        name,
        series,
        weight: name.weight(),
        group: name.group(),
    }
}

/// Residuals of `δ₂(−1/τ) = τ²δ₁(τ)`, `ε₂(−1/τ) = τ⁴ε₁(τ)` and their product
/// `8δ₂ε₂(−1/τ) = τ⁶·8δ₁ε₁(τ)`.
///
/// Both sides are summed from the q-expansions. The truncation must leave
/// every evaluation tail below `tol / 10`.
pub fn modform_law_residuals<T: Float + FloatConst>(tau: Complex<T>, n: u32, tol: f64) -> Result<LawReport> {
    let d1 = modform_qexp(ModForm::Delta1, n).series;
    let e1 = modform_qexp(ModForm::Epsilon1, n).series;
    let d2 = modform_qexp(ModForm::Delta2, n).series;
    let e2 = modform_qexp(ModForm::Epsilon2, n).series;
    let s = -Complex::new(T::one(), T::zero()) / tau;
    let d1t = complex_eval(&d1, tau)?;
    let e1t = complex_eval(&e1, tau)?;
    let d2s = complex_eval(&d2, s)?;
    let e2s = complex_eval(&e2, s)?;
    let eight = T::from(8).unwrap();
    let r = |x: Complex<T>| x.norm().to_f64().unwrap_or(f64::NAN);
    let delta = r(d2s.value - tau.powi(2) * d1t.value);
    let eps = r(e2s.value - tau.powi(4) * e1t.value);
    let prod = r(d2s.value * e2s.value * eight - tau.powi(6) * d1t.value * e1t.value * eight);
    let tails = [d1t, e1t, d2s, e2s].map(|e| e.tail_bound.to_f64().unwrap_or(f64::NAN));
    if tails.iter().any(|t| !(*t <= tol / 10.0)) {
        return Err(Error::InvalidArgument(format!(
            "truncation {n} leaves a tail above tol/10 at this tau"
        )));
    }
    Ok(LawReport::from_residuals(
        vec![
            ("delta2(-1/tau) = tau^2 delta1(tau)", delta),
            ("epsilon2(-1/tau) = tau^4 epsilon1(tau)", eps),
            ("8 delta2 epsilon2(-1/tau) = tau^6 8 delta1 epsilon1(tau)", prod),
        ],
        tol,
    ))
}

/// Checks the level-2 transformation laws, failing on the worst violation.
pub fn verify_modform_transforms<T: Float + FloatConst>(tau: Complex<T>, n: u32, tol: f64) -> Result<LawReport> {
    modform_law_residuals(tau, n, tol)?.into_result()
}

/// `q^{1/2} ↦ −q^{1/2}`: the action of `τ ↦ τ + 1` on a `q^{1/2}`-expansion.
pub fn t_translate(s: &RationalSeries) -> RationalSeries {
    s.flip_half_grades()
}

/// Coefficient at `grade`, for tests and reports.
pub fn coeff(s: &ModFormSeries, grade: HalfInt) -> Result<Rational> {
    s.series.checked_coeff(grade).cloned()
}
