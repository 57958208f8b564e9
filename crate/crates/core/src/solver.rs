//! Offset-for-area root finding and the closed forms of the half-area
//! offset `D_DHA`, the centre separation at which two unit disks overlap in
//! exactly half of each disk's area.
//!
//! `D_DHA` has three closed forms, all evaluated here next to a direct
//! numeric solve of the lens-area equation:
//!
//! * `2 sin(E(-1, π/2) / 2)` through the Kepler operator,
//! * `2 sin(archav(I⁻¹_{1/2}(1/2, 3/2)) / 2)`,
//! * `2 sqrt(I⁻¹_{1/2}(1/2, 3/2))`.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::geometry::{lens_area, LensConfig};
use crate::numeric::clamp_to_domain;
use crate::special_functions::{
    archav, beta_regularized_inverse, kepler_e_newton, BetaParams, KeplerQuery,
};
use crate::tolerance::Tolerance;

/// `D_DHA` to 89 decimal places.
pub const DHA_REFERENCE: &str =
    "0.80794550659903441863792348013263088580447192914819684450019520346774109994259070700248678";

/// `D_DHA` rounded to the nearest double.
pub const DHA: f64 = 0.807_945_506_599_034_4;

/// Overlap target for [`offset_for_area`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Target {
    /// Absolute overlap area.
    Area(f64),
    /// Fraction of the largest possible overlap `π min(R, r)^2`.
    Fraction(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveRequest {
    radius_a: f64,
    radius_b: f64,
    target_area: f64,
    pub tol: Tolerance,
}

impl SolveRequest {
    pub fn new(radius_a: f64, radius_b: f64, target: Target, tol: Tolerance) -> Result<Self> {
        // radius validation lives in LensConfig
        let config = LensConfig::new(radius_a, radius_b, 0.0)?;
        let max = config.max_overlap();
        let target_area = match target {
            Target::Area(area) => {
                clamp_to_domain(area, 0.0, max, "area", "an area in [0, pi min(R, r)^2]")?
            }
            Target::Fraction(f) => {
                clamp_to_domain(f, 0.0, 1.0, "fraction", "a fraction in [0, 1]")? * max
            }
        };
        Ok(SolveRequest {
            radius_a,
            radius_b,
            target_area,
            tol,
        })
    }

    pub fn target_area(&self) -> f64 {
        self.target_area
    }

    pub fn radii(&self) -> (f64, f64) {
        (self.radius_a, self.radius_b)
    }
}

/// Centre separation `d` at which the two disks overlap in `target_area`.
///
/// `lens_area` is continuous and non-increasing on `[|R - r|, R + r]`, so the
/// root is bracketed there and refined with Brent's method until
/// `|lens_area(d) - target| <= tol.abs_tol`.
pub fn offset_for_area(req: &SolveRequest) -> Result<f64> {
    let (ra, rb) = req.radii();
    let lo = (ra - rb).abs();
    let hi = ra + rb;
    let max = LensConfig::new(ra, rb, 0.0)?.max_overlap();
    if req.target_area == 0.0 {
        return Ok(hi);
    }
    if req.target_area == max {
        return Ok(lo);
    }
    let residual =
        |d: f64| -> Result<f64> { Ok(lens_area(LensConfig::new(ra, rb, d)?) - req.target_area) };
    brent(residual, lo, hi, req.tol, "lens offset solve")
}

/// [`offset_for_area`] with the target given as a fraction `f` of
/// `π min(R, r)^2`.
pub fn offset_for_fraction(radius_a: f64, radius_b: f64, f: f64, tol: Tolerance) -> Result<f64> {
    offset_for_area(&SolveRequest::new(
        radius_a,
        radius_b,
        Target::Fraction(f),
        tol,
    )?)
}

/// Brent-Dekker root finding on a sign-changing bracket.
fn brent<F>(mut f: F, lo: f64, hi: f64, tol: Tolerance, routine: &'static str) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a)?, f(b)?);
    if fa.abs() <= tol.abs_tol {
        return Ok(a);
    }
    if fb.abs() <= tol.abs_tol {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::domain(
            "bracket",
            lo,
            "an interval with a sign change",
        ));
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for _ in 0..tol.max_iterations {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        if fb.abs() <= tol.abs_tol {
            return Ok(b);
        }
        let resolution = 2.0 * f64::EPSILON * b.abs() + f64::MIN_POSITIVE;
        let half_width = 0.5 * (c - b);
        if half_width.abs() <= resolution {
            // no representable point left between b and c
            break;
        }
        if e.abs() >= resolution && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * half_width * s, 1.0 - s)
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * half_width * qa * (qa - r) - (b - a) * (r - 1.0)),
                    (qa - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let limit = (3.0 * half_width * q - (resolution * q).abs()).min((e * q).abs());
            if 2.0 * p < limit {
                e = d;
                d = p / q;
            } else {
                d = half_width;
                e = d;
            }
        } else {
            d = half_width;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > resolution {
            d
        } else {
            resolution.copysign(half_width)
        };
        fb = f(b)?;
    }
    Err(Error::NonConvergence {
        routine,
        iterations: tol.max_iterations,
        best: b,
        residual: fb.abs(),
        bracket: (b.min(c), b.max(c)),
    })
}

/// The four routes to `D_DHA`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DhaMethod {
    /// Numeric solve of `lens_area(1, 1, d) = π/2`.
    RootFind,
    /// `2 sin(E(-1, π/2) / 2)`.
    Kepler,
    /// `2 sin(archav(I⁻¹_{1/2}(1/2, 3/2)) / 2)`.
    Archav,
    /// `2 sqrt(I⁻¹_{1/2}(1/2, 3/2))`.
    InvBeta,
}

impl DhaMethod {
    pub const ALL: [DhaMethod; 4] = [
        DhaMethod::RootFind,
        DhaMethod::Kepler,
        DhaMethod::Archav,
        DhaMethod::InvBeta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DhaMethod::RootFind => "d_rootfind",
            DhaMethod::Kepler => "d_kepler",
            DhaMethod::Archav => "d_archav",
            DhaMethod::InvBeta => "d_invbeta",
        }
    }

    pub fn evaluate(self, tol: Tolerance) -> Result<f64> {
        match self {
            DhaMethod::RootFind => offset_for_fraction(1.0, 1.0, 0.5, tol),
            DhaMethod::Kepler => dha_closed_form_kepler_with(tol),
            DhaMethod::Archav => dha_closed_form_archav_with(tol),
            DhaMethod::InvBeta => dha_closed_form_invbeta_with(tol),
        }
    }
}

/// `2 sin(E(-1, π/2) / 2)` with default tolerances.
pub fn dha_closed_form_kepler() -> Result<f64> {
    dha_closed_form_kepler_with(Tolerance::default())
}

pub fn dha_closed_form_kepler_with(tol: Tolerance) -> Result<f64> {
    let e = kepler_e_newton(KeplerQuery::new(-1.0, FRAC_PI_2)?, tol)?;
    Ok(2.0 * (0.5 * e.y).sin())
}

/// `2 sin(archav(I⁻¹_{1/2}(1/2, 3/2)) / 2)` with default tolerances.
pub fn dha_closed_form_archav() -> Result<f64> {
    dha_closed_form_archav_with(Tolerance::default())
}

pub fn dha_closed_form_archav_with(tol: Tolerance) -> Result<f64> {
    let q = beta_regularized_inverse(0.5, BetaParams::half_three_halves(), tol)?;
    Ok(2.0 * (0.5 * archav(q)?).sin())
}

/// `2 sqrt(I⁻¹_{1/2}(1/2, 3/2))` with default tolerances.
pub fn dha_closed_form_invbeta() -> Result<f64> {
    dha_closed_form_invbeta_with(Tolerance::default())
}

pub fn dha_closed_form_invbeta_with(tol: Tolerance) -> Result<f64> {
    let q = beta_regularized_inverse(0.5, BetaParams::half_three_halves(), tol)?;
    Ok(2.0 * q.sqrt())
}

/// Number of leading significant digits of `value`'s exact decimal expansion
/// that agree with [`DHA_REFERENCE`].
pub fn reference_digits_matched(value: f64) -> usize {
    if !value.is_finite() {
        return 0;
    }
    let decimals = DHA_REFERENCE.len() - 2;
    let expanded = format!("{value:.decimals$}");
    let mut matched = 0;
    let mut significant = false;
    for (ours, theirs) in expanded.chars().zip(DHA_REFERENCE.chars()) {
        if ours != theirs {
            break;
        }
        if theirs.is_ascii_digit() {
            significant |= theirs != '0';
            if significant {
                matched += 1;
            }
        }
    }
    matched
}

#[derive(Debug, Clone, PartialEq)]
pub struct MethodFailure {
    pub method: DhaMethod,
    pub error: Error,
}

/// All four `D_DHA` evaluations side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodReport {
    pub d_rootfind: Option<f64>,
    pub d_kepler: Option<f64>,
    pub d_archav: Option<f64>,
    pub d_invbeta: Option<f64>,
    /// Largest `|d_i - d_j|` over all pairs of successful methods; NaN when
    /// fewer than two succeeded.
    pub max_pairwise_delta: f64,
    /// Smallest digit match against [`DHA_REFERENCE`] among the successful
    /// methods; 0 when none succeeded.
    pub reference_digits_matched: usize,
    pub failures: Vec<MethodFailure>,
}

impl MethodReport {
    pub fn value(&self, method: DhaMethod) -> Option<f64> {
        match method {
            DhaMethod::RootFind => self.d_rootfind,
            DhaMethod::Kepler => self.d_kepler,
            DhaMethod::Archav => self.d_archav,
            DhaMethod::InvBeta => self.d_invbeta,
        }
    }

    /// Successful `(method, value)` pairs in [`DhaMethod::ALL`] order.
    pub fn values(&self) -> Vec<(DhaMethod, f64)> {
        DhaMethod::ALL
            .iter()
            .filter_map(|&m| self.value(m).map(|v| (m, v)))
            .collect()
    }

    pub fn all_succeeded(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluate every route to `D_DHA` and compare them.
///
/// A failing method is recorded in `failures`; the others are still reported.
pub fn dha_report(tol: Tolerance) -> MethodReport {
    let mut report = MethodReport {
        d_rootfind: None,
        d_kepler: None,
        d_archav: None,
        d_invbeta: None,
        max_pairwise_delta: f64::NAN,
        reference_digits_matched: 0,
        failures: Vec::new(),
    };
    for method in DhaMethod::ALL {
        let slot = match method {
            DhaMethod::RootFind => &mut report.d_rootfind,
            DhaMethod::Kepler => &mut report.d_kepler,
            DhaMethod::Archav => &mut report.d_archav,
            DhaMethod::InvBeta => &mut report.d_invbeta,
        };
        match method.evaluate(tol) {
            Ok(v) => *slot = Some(v),
            Err(error) => report.failures.push(MethodFailure { method, error }),
        }
    }

    let values: Vec<f64> = report.values().into_iter().map(|(_, v)| v).collect();
    if values.len() >= 2 {
        let mut delta: f64 = 0.0;
        for (i, a) in values.iter().enumerate() {
            for b in &values[i + 1..] {
                delta = delta.max((a - b).abs());
            }
        }
        report.max_pairwise_delta = delta;
    }
    report.reference_digits_matched = values
        .iter()
        .map(|&v| reference_digits_matched(v))
        .min()
        .unwrap_or(0);
    report
}
