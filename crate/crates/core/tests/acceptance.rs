//! Acceptance gate. Runs every criterion at its pinned tolerance and prints
//! one PASS/FAIL line per criterion; exits non-zero if any fails.

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dha_core::geometry::*;
use dha_core::oracle::{lens_area_montecarlo, lens_area_quadrature};
use dha_core::solver::{dha_report, reference_digits_matched, DHA};
use dha_core::special_functions::*;
use dha_core::{SplitMix64, Tolerance};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn golden_constant() -> Outcome {
    let tol = Tolerance::default();
    dha_report(tol); // warm-up
    let start = Instant::now();
    let report = dha_report(tol);
    let elapsed = start.elapsed();
    let mut pass = report.all_succeeded() && elapsed < Duration::from_millis(10);
    let mut worst_dev: f64 = 0.0;
    let mut min_digits = usize::MAX;
    for (_, d) in report.values() {
        worst_dev = worst_dev.max((d - DHA).abs());
        min_digits = min_digits.min(reference_digits_matched(d));
    }
    pass &= worst_dev <= 5e-13 && min_digits >= 13;
    outcome(
        pass,
        format!("max |d - D| = {worst_dev:.2e} (<= 5e-13), min digits = {min_digits} (>= 13), runtime {elapsed:?} (< 10 ms)"),
    )
}

fn cross_method_agreement() -> Outcome {
    let report = dha_report(Tolerance::default());
    let delta = report.max_pairwise_delta;
    outcome(
        report.all_succeeded() && delta <= 5e-13,
        format!("max pairwise delta = {delta:.2e} (<= 5e-13)"),
    )
}

fn half_area() -> Outcome {
    let report = dha_report(Tolerance::default());
    let worst = report
        .values()
        .into_iter()
        .map(|(_, d)| (lens_area(LensConfig::unit(d).unwrap()) - FRAC_PI_2).abs())
        .fold(0.0, f64::max);
    outcome(
        report.all_succeeded() && worst <= 1e-12,
        format!("max |A(1, 1, d*) - pi/2| = {worst:.2e} (<= 1e-12)"),
    )
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let tol = Tolerance::default();
    let p = BetaParams::half_three_halves();
    let mut worst: f64 = 0.0;
    let mut track = |v: f64| worst = worst.max(v.abs());
    for i in 0..100 {
        // closed form vs continued fraction on x in [0, 1]
        let x = f64::from(i) / 99.0;
        track(beta_incomplete(x, p).unwrap() - beta_half_threehalves_closed(x).unwrap());
        // B(sin^2 z) = z + sin(2z)/2 on z in [0, π/2]
        let z = FRAC_PI_2 * f64::from(i) / 99.0;
        track(beta_incomplete(z.sin().powi(2), p).unwrap() - (z + (2.0 * z).sin() / 2.0));
        // z = E(-1, 2y)/2 inverts y = z + sin(2z)/2 on y in (0, π/2)
        let y = FRAC_PI_2 * f64::from(i + 1) / 101.0;
        let z = kepler_e_newton(KeplerQuery::new(-1.0, 2.0 * y).unwrap(), tol)
            .unwrap()
            .y
            / 2.0;
        track(z + (2.0 * z).sin() / 2.0 - y);
        // E(-1, 2y)/2 = arcsin(sqrt(I⁻¹_{2y/π}))
        let q = beta_regularized_inverse(2.0 * y / PI, p, tol).unwrap();
        track(z - q.sqrt().asin());
        // E(-1, x) = archav(I⁻¹_{x/π}) on x in (0, π)
        let x = PI * f64::from(i + 1) / 101.0;
        let e = kepler_e_newton(KeplerQuery::new(-1.0, x).unwrap(), tol)
            .unwrap()
            .y;
        let q = beta_regularized_inverse(x / PI, p, tol).unwrap();
        track(e - archav(q).unwrap());
        track(q - hav(e).unwrap());
    }
    let elapsed = start.elapsed();
    outcome(
        worst <= 1e-10 && elapsed < Duration::from_secs(1),
        format!("max identity error = {worst:.2e} (<= 1e-10), runtime {elapsed:?} (< 1 s)"),
    )
}

fn quantile_round_trip() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut failures = 0;
    for (a, b) in [(0.5, 1.5), (0.5, 0.5), (2.0, 3.0), (5.0, 1.0), (0.3, 0.7)] {
        let p = BetaParams::new(a, b).unwrap();
        for i in 1..=99 {
            let z = f64::from(i) / 100.0;
            match beta_regularized_inverse(z, p, Tolerance::default()) {
                Ok(x) => worst = worst.max((beta_regularized(x, p).unwrap() - z).abs()),
                Err(_) => failures += 1,
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures == 0 && worst <= 1e-10 && elapsed < Duration::from_secs(1),
        format!("max |I(I^-1(z)) - z| = {worst:.2e} (<= 1e-10) over 495 points, {failures} failures, runtime {elapsed:?} (< 1 s)"),
    )
}

fn kepler_residuals() -> Outcome {
    let tol = Tolerance::default();
    let mut worst_residual: f64 = 0.0;
    let mut a_values: Vec<f64> = (0..20).map(|i| -1.0 + 0.1 * f64::from(i)).collect();
    a_values.push(0.99);
    for &a in &a_values {
        for k in 0..=62 {
            let x = (-PI + 0.1 * f64::from(k)).min(PI);
            let s = kepler_e_newton(KeplerQuery::new(a, x).unwrap(), tol);
            worst_residual = worst_residual.max(s.map_or(f64::INFINITY, |s| s.residual));
        }
        let s = kepler_e_newton(KeplerQuery::new(a, PI).unwrap(), tol);
        worst_residual = worst_residual.max(s.map_or(f64::INFINITY, |s| s.residual));
    }
    let mut worst_series: f64 = 0.0;
    for ai in -5..=5 {
        let a = 0.1 * f64::from(ai);
        for xi in -30..=30 {
            let q = KeplerQuery::new(a, 0.1 * f64::from(xi)).unwrap();
            let n = kepler_e_newton(q, tol).unwrap().y;
            let s = kepler_e_series(q, 50).unwrap().y;
            worst_series = worst_series.max((n - s).abs());
        }
    }
    outcome(
        worst_residual <= 1e-13 && worst_series <= 1e-10,
        format!("max Newton residual = {worst_residual:.2e} (<= 1e-13), max |series - Newton| = {worst_series:.2e} (<= 1e-10)"),
    )
}

fn random_configs(count: usize, seed: u64) -> Vec<LensConfig> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let big_r = 0.2 + 4.8 * rng.next_f64();
            let r = 0.2 + 4.8 * rng.next_f64();
            let d = 1.1 * (big_r + r) * rng.next_f64();
            LensConfig::new(big_r, r, d).unwrap()
        })
        .collect()
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let configs = random_configs(50, 2024);
    let mut worst_quad: f64 = 0.0;
    let mut within = 0;
    for (i, &c) in configs.iter().enumerate() {
        let exact = lens_area(c);
        worst_quad = worst_quad.max((lens_area_quadrature(c, 4096).unwrap() - exact).abs());
        let mc = lens_area_montecarlo(c, 1_000_000, 7_000 + i as u64).unwrap();
        if (mc.value - exact).abs() <= 4.0 * mc.std_error {
            within += 1;
        }
    }
    let elapsed = start.elapsed();
    outcome(
        worst_quad <= 1e-8 && within >= 49 && elapsed < Duration::from_secs(60),
        format!("max |quadrature - analytic| = {worst_quad:.2e} (<= 1e-8), Monte Carlo within 4 sigma: {within}/50 (>= 49), runtime {elapsed:?} (< 60 s)"),
    )
}

fn geometry_properties() -> Outcome {
    let configs = random_configs(1000, 77);
    let mut decomposition: f64 = 0.0;
    let mut asymmetric = 0;
    let mut non_monotone = 0;
    let mut continuity: f64 = 0.0;
    for &c in &configs {
        let (big_r, r) = (c.radius_a(), c.radius_b());
        let swapped = LensConfig::new(r, big_r, c.separation()).unwrap();
        if lens_area(c).to_bits() != lens_area(swapped).to_bits() {
            asymmetric += 1;
        }
        if let Ok((d1, d2)) = intersection_abscissae(c) {
            let sum = segment_area(SegmentSpec::new(big_r, d1).unwrap())
                + segment_area(SegmentSpec::new(r, d2).unwrap());
            decomposition = decomposition.max((lens_area(c) - sum).abs());
        }
        let full = PI * big_r.min(r).powi(2);
        let inner = (big_r - r).abs();
        let at = |d: f64| lens_area(c.with_separation(d.max(0.0)).unwrap());
        continuity = continuity
            .max((at(inner + 1e-9) - full).abs())
            .max((at(inner - 1e-9) - full).abs())
            .max(at(big_r + r - 1e-9).abs())
            .max(at(big_r + r + 1e-9).abs());
    }
    for &c in &configs {
        let hi = c.radius_a() + c.radius_b();
        let mut last = f64::INFINITY;
        for i in 0..1000 {
            let a = lens_area(c.with_separation(hi * f64::from(i) / 999.0).unwrap());
            if a > last {
                non_monotone += 1;
            }
            last = a;
        }
    }
    outcome(
        decomposition <= 1e-12 && asymmetric == 0 && non_monotone == 0 && continuity <= 1e-7,
        format!("segment decomposition {decomposition:.2e} (<= 1e-12), asymmetric {asymmetric}, monotonicity violations {non_monotone}, branch jump {continuity:.2e} (<= 1e-7)"),
    )
}

fn precision_statement() -> Outcome {
    let report = dha_report(Tolerance::default());
    let best = report
        .values()
        .into_iter()
        .map(|(_, d)| reference_digits_matched(d))
        .max()
        .unwrap_or(0);
    // informational: a double carries ~16-17 significant digits, so the
    // 90-digit reference is never reproduced in full
    outcome(
        best < 18,
        format!("best digit match = {best}; digits beyond double precision are not reproduced and not gated"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 golden constant", golden_constant),
        ("2 cross-method agreement", cross_method_agreement),
        ("3 half-area verification", half_area),
        ("4 identity suite", identity_suite),
        ("5 quantile round trip", quantile_round_trip),
        ("6 Kepler residuals", kepler_residuals),
        ("7 oracle equivalence", oracle_equivalence),
        ("8 geometry properties", geometry_properties),
        ("9 precision statement", precision_statement),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let o = run();
        println!(
            "[{}] {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.pass {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
