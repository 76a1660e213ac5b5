//! The Dirac-induction trace `Π_{S¹}` for `S¹ ⊂ SL(2,ℝ)` and the averaged
//! genera of `SL(2,ℝ) ×_{S¹} ℂP^{2l−1}`, plus the generic formal-degree
//! product over a root datum.

use num_traits::{Signed, Zero};
use crate::algebra::{rat, HalfInt};
use crate::error::{Error, Result};
use crate::lambda_ring::{theta_bundle, ThetaVariant, VirtualChar};
use crate::lefschetz::{lefschetz_twisted, lefschetz_witten, p_series, Operator, SeriesKind, Twist, WeightVector};
use crate::{CharSeries, Laurent, Rational, RationalSeries};

/// `Π_{S¹}(ℂ[n]) = −|n−1|`.
pub fn pi_s1(n: i64) -> Rational {
    rat(-(n - 1).abs())
}

/// `Π_{S¹}` extended linearly to a character.
pub fn trace_char(c: &Laurent) -> Rational {
    c.terms().fold(Rational::zero(), |acc, (e, k)| acc + k * &pi_s1(e))
}

/// A rational q-series obtained by tracing an equivariant one.
#[derive(Clone, Debug, PartialEq)]
pub struct TracedSeries {
    pub source: SeriesKind,
    pub series: RationalSeries,
}

impl TracedSeries {
    pub fn is_zero(&self) -> bool {
        self.series.is_zero()
    }
}

/// Replaces each `λⁿ` by `−|n−1|`, grade by grade.
pub fn trace_series(s: &CharSeries, source: SeriesKind) -> TracedSeries {
    TracedSeries {
        source,
        series: s.map(trace_char),
    }
}

/// `𝔭_ℂ = ℂ[2] ⊕ ℂ[−2]`, the complexified complement of the circle in `sl(2,ℝ)`.
pub fn adjoint_complement() -> VirtualChar {
    VirtualChar::from_weights(&[2, -2])
}

/// Spinors of `𝔭`, `Δ⁺ ⊕ Δ⁻ = ℂ[1] ⊕ ℂ[−1]`.
pub fn adjoint_spinors() -> Laurent {
    Laurent::from_terms([(1, rat(1)), (-1, rat(1))])
}

/// `Π_{S¹}(P)`.
pub fn averaged_witten_genus(w: &WeightVector, n: u32) -> Result<TracedSeries> {
    Ok(trace_series(&p_series(w, n)?.series, SeriesKind::Witten))
}

/// `Π_{S¹}(Θ(𝔭̃_ℂ) ⊗ Ind(∂̸ ⊗ Θ(T_ℂ)))`, the same genus through the induction formula.
pub fn averaged_witten_genus_induced(w: &WeightVector, n: u32) -> Result<TracedSeries> {
    let l = lefschetz_witten(w, n)?;
    let theta = theta_bundle(&adjoint_complement(), ThetaVariant::Theta, n);
    Ok(trace_series(&(&theta * &l.series), SeriesKind::Witten))
}

/// `(φ₁, φ₂)`: traces of `Δ(𝔭)Θ₁(𝔭̃_ℂ) ⊗ Ind(ℬ ⊗ Θ₁)` and `Θ₂(𝔭̃_ℂ) ⊗ Ind(∂̸ ⊗ Θ₂)`.
pub fn averaged_elliptic_genera(w: &WeightVector, n: u32) -> Result<(TracedSeries, TracedSeries)> {
    let p = adjoint_complement();
    let l1 = lefschetz_twisted(w, Operator::Signature, Twist::Theta1, n)?;
    let t1 = theta_bundle(&p, ThetaVariant::Theta1, n).map(|c| c.clone() * &adjoint_spinors());
    let l2 = lefschetz_twisted(w, Operator::Dirac, Twist::Theta2, n)?;
    let t2 = theta_bundle(&p, ThetaVariant::Theta2, n);
    Ok((
        trace_series(&(&t1 * &l1.series), SeriesKind::Elliptic1),
        trace_series(&(&t2 * &l2.series), SeriesKind::Elliptic2),
    ))
}

/// Positive roots with an inner product given by a symmetric Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct RootDatum {
    /// `dim G/K`, even.
    pub d: usize,
    pub positive_roots: Vec<Vec<Rational>>,
    pub rho: Vec<Rational>,
    pub rho_c: Vec<Rational>,
    pub gram: Vec<Vec<Rational>>,
}

impl RootDatum {
    /// `S¹ ⊂ SL(2,ℝ)`: one noncompact positive root `α = 2`, `ρ = 1`, `ρ_c = 0`.
    pub fn sl2() -> Self {
        RootDatum {
            d: 2,
            positive_roots: vec![vec![rat(2)]],
            rho: vec![rat(1)],
            rho_c: vec![rat(0)],
            gram: vec![vec![rat(1)]],
        }
    }

    fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn inner(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                acc += x * &self.gram[i][j] * y;
            }
        }
        acc
    }

    /// Scales the inner product by `c`.
    pub fn rescaled(&self, c: &Rational) -> Self {
        let mut r = self.clone();
        for row in &mut r.gram {
            for x in row {
                *x = &*x * c;
            }
        }
        r
    }

    fn validate(&self) -> Result<()> {
        let n = self.rank();
        if !self.d.is_multiple_of(2) {
            return Err(Error::DegenerateRootDatum(format!("odd dimension {}", self.d)));
        }
        if self.gram.iter().any(|row| row.len() != n)
            || self.rho.len() != n
            || self.rho_c.len() != n
            || self.positive_roots.iter().any(|a| a.len() != n)
        {
            return Err(Error::DegenerateRootDatum("mismatched vector lengths".into()));
        }
        for a in &self.positive_roots {
            if self.inner(&self.rho, a).is_zero() {
                return Err(Error::DegenerateRootDatum(format!("rho is orthogonal to root {a:?}")));
            }
        }
        Ok(())
    }
}

/// `∏_{α∈Φ⁺} (μ+ρ_c, α)/(ρ, α)`.
pub fn formal_degree(rd: &RootDatum, mu: &[Rational]) -> Result<Rational> {
    rd.validate()?;
    if mu.len() != rd.rank() {
        return Err(Error::DegenerateRootDatum("weight has the wrong length".into()));
    }
    let shifted: Vec<Rational> = mu.iter().zip(&rd.rho_c).map(|(a, b)| a + b).collect();
    Ok(rd.positive_roots.iter().fold(rat(1), |acc, a| {
        acc * rd.inner(&shifted, a) / rd.inner(&rd.rho, a)
    }))
}

/// `Π_K([V_μ]) = (−1)^{d/2} ∏_{α∈Φ⁺} (μ+ρ_c, α)/(ρ, α)`.
pub fn pi_k(rd: &RootDatum, mu: &[Rational]) -> Result<Rational> {
    let f = formal_degree(rd, mu)?;
    Ok(if (rd.d / 2) % 2 == 1 { -f } else { f })
}

/// `Π_K` for `ℂ[n]` on the `SL(2,ℝ)` datum, at parameter `μ = n − 1`.
///
/// This agrees with [`pi_s1`] in absolute value for every `n`, and in sign
/// for `n ≥ 1`.
pub fn pi_sl2_rep(n: i64) -> Rational {
    pi_k(&RootDatum::sl2(), &[rat(n - 1)]).expect("the SL(2,R) datum is nondegenerate")
}

/// Grades at which a traced series is nonzero.
pub fn support(s: &TracedSeries) -> Vec<HalfInt> {
    s.series
        .grades()
        .filter(|(_, c)| !c.is_zero())
        .map(|(g, _)| g)
        .collect()
}

/// `|Π_K| = |Π_{S¹}|` on `ℂ[n]`.
pub fn sl2_matches_in_absolute_value(n: i64) -> bool {
    pi_sl2_rep(n).abs() == pi_s1(n).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn wv(a: &[i64]) -> WeightVector {
        WeightVector::new(a.to_vec()).unwrap()
    }

    #[test]
    fn trace_values() {
        assert_eq!((pi_s1(1), pi_s1(0), pi_s1(2), pi_s1(-3)), (rat(0), rat(-1), rat(-1), rat(-4)));
        assert_eq!(trace_char(&Laurent::constant(rat(5))), rat(-5));
        assert_eq!(trace_char(&Laurent::from_terms([(1, rat(1)), (-1, rat(1))])), rat(-2));
        assert_eq!(trace_char(&Laurent::zero()), rat(0));
    }

    #[test]
    fn projective_line_genus_vanishes() {
        let w = wv(&[0, 2]);
        assert!(averaged_witten_genus(&w, 6).unwrap().is_zero());
        let (a, b) = averaged_elliptic_genera(&w, 6).unwrap();
        assert!(a.is_zero() && b.is_zero());
    }

    #[test]
    fn routes_agree() {
        let w = wv(&[0, 1, 2, 3]);
        let a = averaged_witten_genus(&w, 6).unwrap();
        let b = averaged_witten_genus_induced(&w, 6).unwrap();
        assert_eq!(a, b);
        assert!(a.series.coeff_half(0).is_zero());
        let (p1, p2) = averaged_elliptic_genera(&w, 6).unwrap();
        assert!(p1.is_zero(), "{:?}", support(&p1));
        assert!(p2.is_zero(), "{:?}", support(&p2));
    }

    #[test]
    fn formal_degree_sl2() {
        for n in -5..=6 {
            assert!(sl2_matches_in_absolute_value(n), "{n}");
        }
        assert_eq!(pi_sl2_rep(3), pi_s1(3));
        assert_eq!(pi_sl2_rep(-2), -pi_s1(-2));
        let rd = RootDatum::sl2();
        assert_eq!(formal_degree(&rd, &[rat(0)]).unwrap(), rat(0));
        let scaled = rd.rescaled(&ratio(7, 3));
        assert_eq!(formal_degree(&scaled, &[ratio(5, 2)]).unwrap(), formal_degree(&rd, &[ratio(5, 2)]).unwrap());
    }

    #[test]
    fn degenerate_datum() {
        let mut rd = RootDatum::sl2();
        rd.rho = vec![rat(0)];
        assert!(matches!(formal_degree(&rd, &[rat(1)]), Err(Error::DegenerateRootDatum(_))));
        let mut rd = RootDatum::sl2();
        rd.d = 3;
        assert!(formal_degree(&rd, &[rat(1)]).is_err());
    }

    #[test]
    fn rank_two_datum() {
        // Sp(4,ℝ)-like datum in an orthonormal basis, compact root e1 − e2
        let rd = RootDatum {
            d: 6,
            positive_roots: vec![
                vec![rat(1), rat(-1)],
                vec![rat(2), rat(0)],
                vec![rat(0), rat(2)],
                vec![rat(1), rat(1)],
            ],
            rho: vec![rat(2), rat(1)],
            rho_c: vec![ratio(1, 2), ratio(-1, 2)],
            gram: vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]],
        };
        let mu = [rat(3), rat(1)];
        let direct = (rat(3) / rat(1)) * (rat(7) / rat(4)) * (rat(1) / rat(2)) * (rat(4) / rat(3));
        assert_eq!(formal_degree(&rd, &mu).unwrap(), direct);
        assert_eq!(pi_k(&rd, &mu).unwrap(), -direct);
        // (μ+ρ_c) orthogonal to e1 − e2
        assert_eq!(formal_degree(&rd, &[rat(1), rat(2)]).unwrap(), rat(0));
    }
}
