//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line with
//! its runtime against the budget; the process exits nonzero if any fails.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ellgen::algebra::{rat, ratio, HalfInt};
use ellgen::cancellation::solve_cancellation;
use ellgen::induction::{
    adjoint_complement, averaged_elliptic_genera, averaged_witten_genus, averaged_witten_genus_induced,
};
use ellgen::lambda_ring::{
    ext_total, is_integral_series, sym_total_with, theta_bundle, theta_bundle_with, Route, TVar, ThetaVariant,
    VirtualChar,
};
use ellgen::lefschetz::{lefschetz_twisted, lefschetz_witten, p_series, Operator, Twist, WeightVector};
use ellgen::modforms::{modform_qexp, verify_modform_transforms, ModForm};
use ellgen::theta::verify_theta_transforms;
use ellgen::{CharSeries, Laurent, Rational};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lp(terms: &[(i64, i64)]) -> Laurent {
    Laurent::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
}

fn wv(a: &[i64]) -> WeightVector {
    WeightVector::new(a.to_vec()).expect("valid weights")
}

fn coeff(s: &CharSeries, halves: i64) -> Laurent {
    s.coeff(HalfInt::from_halves(halves)).cloned().expect("grade in range")
}

fn adjoint_theta_coefficients() -> Check {
    // 𝔭_ℂ = λ² + λ⁻², d = 2
    let t1 = theta_bundle(&adjoint_complement(), ThetaVariant::Theta1, 2);
    let t2 = theta_bundle(&adjoint_complement(), ThetaVariant::Theta2, 1);
    let p = lp(&[(2, 1), (-2, 1)]);
    let pp = &p * &p;
    let expected1 = [
        lp(&[(0, 1)]),
        Laurent::zero(),
        (&p - &lp(&[(0, 2)])).scale(&rat(2)),
        Laurent::zero(),
        ((&pp - &p.scale(&rat(3))) + &lp(&[(0, 2)])).scale(&rat(2)),
    ];
    for (h, e) in expected1.iter().enumerate() {
        ensure(&coeff(&t1, h as i64) == e, || format!("Theta1(p) at half-grade {h}"))?;
    }
    // Λ²𝔭 − (d−1)𝔭 + ℂ^{d(d−1)/2}
    let expected2 = [lp(&[(0, 1)]), -(&p - &lp(&[(0, 2)])), (&lp(&[(0, 1)]) - &p) + &lp(&[(0, 1)])];
    for (h, e) in expected2.iter().enumerate() {
        ensure(&coeff(&t2, h as i64) == e, || format!("Theta2(p) at half-grade {h}"))?;
    }
    Ok("Theta1 through q^2, Theta2 through q^1".into())
}

fn modform_expansions() -> Check {
    let c = |m: ModForm, h: usize| modform_qexp(m, 2).series.coeff_half(h).clone();
    let table: [(ModForm, &[(usize, Rational)]); 4] = [
        (ModForm::Delta1, &[(0, ratio(1, 4)), (2, rat(6)), (4, rat(6))]),
        (ModForm::Epsilon1, &[(0, ratio(1, 16)), (2, rat(-1)), (4, rat(7))]),
        (ModForm::Delta2, &[(0, ratio(-1, 8)), (1, rat(-3)), (2, rat(-3))]),
        (ModForm::Epsilon2, &[(0, rat(0)), (1, rat(1)), (2, rat(8))]),
    ];
    for (m, rows) in table {
        for (h, v) in rows {
            ensure(&c(m, *h) == v, || format!("{m} at half-grade {h}: got {}", c(m, *h)))?;
        }
    }
    for m in ModForm::ALL {
        let s = modform_qexp(m, 40).series;
        let k = rat(m.integral_scale());
        ensure(s.grades().all(|(_, x)| (x * &k).is_integer()), || format!("{}·{m} not integral", m.integral_scale()))?;
    }
    Ok("displayed terms match; 4d1, 16e1, 8d2, e2 integral to q^40".into())
}

fn theta_laws() -> Check {
    let points = [
        (Complex64::new(0.1, 0.05), Complex64::new(0.2, 1.1)),
        (Complex64::new(0.3, 0.0), Complex64::new(0.1, 0.8)),
        (Complex64::new(-0.2, 0.1), Complex64::new(-0.3, 1.0)),
        (Complex64::new(0.05, -0.02), Complex64::new(0.45, 1.5)),
        (Complex64::new(0.25, 0.0), Complex64::new(0.0, 1.2)),
    ];
    let mut worst: f64 = 0.0;
    for (v, tau) in points {
        let r = verify_theta_transforms(v, tau, 40, 1e-9).map_err(|e| format!("v={v}, tau={tau}: {e}"))?;
        worst = r.laws.iter().map(|l| l.residual).fold(worst, f64::max);
    }
    Ok(format!("8 laws x 5 points, worst residual {worst:.2e} < 1e-9"))
}

fn modform_laws() -> Check {
    let mut worst: f64 = 0.0;
    for tau in [Complex64::new(0.0, 1.0), Complex64::new(0.3, 0.9), Complex64::new(-0.4, 1.2)] {
        let r = verify_modform_transforms(tau, 60, 1e-8).map_err(|e| format!("tau={tau}: {e}"))?;
        worst = r.laws.iter().map(|l| l.residual).fold(worst, f64::max);
    }
    Ok(format!("3 points, worst residual {worst:.2e} < 1e-8"))
}

fn example_pipeline() -> Check {
    let n = 10;
    for a in [&[0, 1, 2, 3][..], &[0, 2][..]] {
        let w = wv(a);
        let witten = lefschetz_witten(&w, n).map_err(|e| format!("{a:?}: {e}"))?;
        let p = p_series(&w, n).map_err(|e| e.to_string())?;
        let dirac = lefschetz_twisted(&w, Operator::Dirac, Twist::Theta2, n).map_err(|e| e.to_string())?;
        let sig = lefschetz_twisted(&w, Operator::Signature, Twist::Theta1, n).map_err(|e| e.to_string())?;
        for (name, s) in [("witten", &witten.series), ("P", &p.series), ("dirac", &dirac.series), ("signature", &sig.series)] {
            ensure(is_integral_series(s), || format!("{a:?}: {name} series has a non-integral grade"))?;
        }
        ensure(witten.series.coeff_half(0) == &Laurent::zero(), || format!("{a:?}: Witten grade 0 nonzero"))?;
        let theta = theta_bundle(&adjoint_complement(), ThetaVariant::Theta, n);
        ensure(p.series == &theta * &witten.series, || format!("{a:?}: P factorization differs"))?;
        let g1 = averaged_witten_genus(&w, n).map_err(|e| e.to_string())?;
        let g2 = averaged_witten_genus_induced(&w, n).map_err(|e| e.to_string())?;
        ensure(g1 == g2, || format!("{a:?}: averaged Witten genus routes differ"))?;
        let (phi1, phi2) = averaged_elliptic_genera(&w, 8).map_err(|e| e.to_string())?;
        ensure(phi1.is_zero() && phi2.is_zero(), || format!("{a:?}: phi1/phi2 nonzero"))?;
    }
    Ok("(0,1,2,3) and (0,2): integral, grade-0 zero, P factors, routes agree, phi1 = phi2 = 0".into())
}

fn rigidity() -> Check {
    let vectors: [&[i64]; 8] = [
        &[0, 2],
        &[-1, 1],
        &[1, 3],
        &[-3, 1],
        &[0, 1, 2, 3],
        &[-2, -1, 1, 2],
        &[0, 1, 2, 5],
        &[-5, -3, 1, 3],
    ];
    for a in vectors {
        let w = wv(a);
        for (op, tw) in [(Operator::Signature, Twist::Theta1), (Operator::Dirac, Twist::Theta2)] {
            let s = lefschetz_twisted(&w, op, tw, 8).map_err(|e| format!("{a:?}: {e}"))?;
            ensure(s.is_lambda_independent(), || format!("{a:?} {op:?}/{tw:?} depends on lambda"))?;
        }
    }
    Ok(format!("{} weight vectors, both twisted operators, grades <= 8", vectors.len()))
}

fn cancellation() -> Check {
    let mut schedule = Vec::new();
    for k in 1..=3 {
        let r = solve_cancellation(k, 4).map_err(|e| format!("k={k}: {e}"))?;
        ensure(r.residual == ellgen::cancellation::ChernRootSeries::constant(rat(0)), || {
            format!("k={k}: residual {}", r.residual)
        })?;
        ensure(r.p1_residual.is_zero(), || format!("k={k}: Gamma_0(2) side mismatch"))?;
        let exps: Vec<String> =
            r.exponents.iter().map(|e| e.map_or("not a power of 2".into(), |e| e.to_string())).collect();
        schedule.push(format!(
            "k={k}: 2^[{}] ({})",
            exps.join(","),
            if r.graded_schedule { "3k-6b" } else if r.uniform_schedule { "3k-6[k/2]" } else { "other" }
        ));
    }
    Ok(format!("residual 0; {}", schedule.join("; ")))
}

fn random_char(rng: &mut ChaCha8Rng, genuine: bool) -> VirtualChar {
    let terms = rng.gen_range(1..=3);
    let lo = if genuine { 1 } else { -2 };
    let c = Laurent::from_terms((0..terms).map(|_| (rng.gen_range(-4..=4), rat(rng.gen_range(lo..=2)))));
    VirtualChar::new(c)
}

fn random_t(rng: &mut ChaCha8Rng) -> TVar {
    TVar::new(rng.gen_bool(0.5), HalfInt::from_halves(rng.gen_range(1..=3)))
}

fn lambda_ring_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..100 {
        let n = rng.gen_range(1..=8);
        let e = random_char(&mut rng, false);
        let t = random_t(&mut rng);
        let prod = &sym_total_with(&e, t, n, Route::Adams) * &ext_total(&e, t.negate(), n);
        ensure(prod == CharSeries::one(n), || format!("instance {i}: S_t Λ_-t != 1 for {:?}", e.character()))?;
    }
    for i in 0..100 {
        let n = rng.gen_range(1..=6);
        let (e, f) = (random_char(&mut rng, false), random_char(&mut rng, false));
        for v in ThetaVariant::ALL {
            let lhs = theta_bundle(&(&e + &f), v, n);
            let rhs = &theta_bundle(&e, v, n) * &theta_bundle(&f, v, n);
            ensure(lhs == rhs, || format!("instance {i}: {v:?} not multiplicative"))?;
        }
    }
    for i in 0..100 {
        let n = rng.gen_range(1..=6);
        let e = random_char(&mut rng, true);
        let v = ThetaVariant::ALL[rng.gen_range(0..3)];
        let a = theta_bundle_with(&e, v, n, Route::Product);
        let b = theta_bundle_with(&e, v, n, Route::Adams);
        ensure(a == b, || format!("instance {i}: routes differ for {v:?}"))?;
    }
    for i in 0..100 {
        let n = rng.gen_range(1..=8);
        let e = random_char(&mut rng, false);
        let t = random_t(&mut rng);
        let v = ThetaVariant::ALL[rng.gen_range(0..3)];
        ensure(is_integral_series(&theta_bundle_with(&e, v, n, Route::Adams)), || {
            format!("instance {i}: Theta not integral")
        })?;
        ensure(is_integral_series(&sym_total_with(&e, t, n, Route::Adams)), || {
            format!("instance {i}: S_t not integral")
        })?;
    }
    Ok("4 properties x 100 seeded instances".into())
}

fn main() {
    let criteria: [(&str, &str, u64, fn() -> Check); 8] = [
        ("1", "adjoint theta coefficients", 1, adjoint_theta_coefficients),
        ("2", "modular form expansions", 1, modform_expansions),
        ("3", "theta transformation laws", 5, theta_laws),
        ("4", "level-2 modular form laws", 5, modform_laws),
        ("5", "SL(2,R) x CP^{2l-1} pipeline", 30, example_pipeline),
        ("6", "rigidity of twisted operators", 60, rigidity),
        ("7", "L-hat / A-hat cancellation", 60, cancellation),
        ("8", "lambda-ring properties", 30, lambda_ring_properties),
    ];
    let mut failed = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let (status, detail) = match (&result, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over the {budget}s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("[{status}] criterion {id} ({name}) {:.3}s/{budget}s: {detail}", elapsed.as_secs_f64());
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
