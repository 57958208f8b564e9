//! The Kepler solution operator `E(a, x)`: the `y` solving `x = y - a sin(y)`.

use std::f64::consts::PI;

use super::bessel::bessel_j;
use crate::error::{Error, Result};
use crate::numeric::{clamp_to_domain, require_finite};
use crate::tolerance::Tolerance;

/// Below this |1 - a cos y| a Newton step is replaced by bisection.
const MIN_DERIVATIVE: f64 = 1e-8;

/// Input `(a, x)` with `|a| <= 1` and `x` in `[-π, π]`.
///
/// In orbital language `x` is the mean anomaly M, `a` the eccentricity e and
/// the solution `y` the eccentric anomaly E.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeplerQuery {
    a: f64,
    x: f64,
}

impl KeplerQuery {
    pub fn new(a: f64, x: f64) -> Result<Self> {
        require_finite(a, "a")?;
        if a.abs() > 1.0 {
            return Err(Error::domain("a", a, "|a| <= 1"));
        }
        require_finite(x, "x")?;
        let x = clamp_to_domain(x, -PI, PI, "x", "a value in [-pi, pi]")?;
        Ok(KeplerQuery { a, x })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// `y - a sin(y) - x`.
    pub fn residual(&self, y: f64) -> f64 {
        y - self.a * y.sin() - self.x
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeplerMethod {
    Newton,
    Series,
}

impl KeplerMethod {
    pub fn name(self) -> &'static str {
        match self {
            KeplerMethod::Newton => "newton",
            KeplerMethod::Series => "series",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeplerSolution {
    pub y: f64,
    /// `|y - a sin(y) - x|` evaluated at the returned `y`.
    pub residual: f64,
    pub method: KeplerMethod,
    /// Newton iterations used, or series terms summed.
    pub iterations_or_terms: usize,
}

/// Safeguarded Newton iteration for `E(a, x)`.
///
/// Starts from `y0 = x + a sin(x)` and keeps a bracket, initially `[-π, π]`,
/// on which `y - a sin(y) - x` changes sign. The function is non-decreasing
/// for `|a| <= 1`, so the bracket always contains the root. A step is
/// replaced by bisection when the derivative `1 - a cos(y)` is nearly zero
/// (only possible near `y = 0` for `a = 1` and `y = ±π` for `a = -1`) or the
/// step leaves the bracket.
pub fn kepler_e_newton(q: KeplerQuery, tol: Tolerance) -> Result<KeplerSolution> {
    let (mut lo, mut hi) = (-PI, PI);
    let mut y = q.x + q.a * q.x.sin();
    if !(lo..=hi).contains(&y) {
        y = 0.5 * (lo + hi);
    }
    let mut best = (y, f64::INFINITY);

    for iteration in 1..=tol.max_iterations {
        let r = q.residual(y);
        if r.abs() < best.1 {
            best = (y, r.abs());
        }
        if r.abs() <= tol.abs_tol {
            return Ok(KeplerSolution {
                y,
                residual: r.abs(),
                method: KeplerMethod::Newton,
                iterations_or_terms: iteration,
            });
        }
        if r < 0.0 {
            lo = y;
        } else {
            hi = y;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let derivative = 1.0 - q.a * y.cos();
        let step = y - r / derivative;
        y = if derivative.abs() >= MIN_DERIVATIVE && step > lo && step < hi {
            step
        } else {
            mid
        };
    }
    Err(Error::NonConvergence {
        routine: "Kepler Newton",
        iterations: tol.max_iterations,
        best: best.0,
        residual: best.1,
        bracket: (lo, hi),
    })
}

/// Partial sum `x + Σ_{n=1..terms} (2/n) J_n(n a) sin(n x)` of the Kapteyn
/// series for `E(a, x)`.
///
/// The reported residual is the true residual of the partial sum. At
/// `|a| = 1` the terms decay only like `n^(-4/3)`, so the result is a slowly
/// converging approximation there; use [`kepler_e_newton`] when accuracy
/// matters.
pub fn kepler_e_series(q: KeplerQuery, terms: usize) -> Result<KeplerSolution> {
    if terms == 0 {
        return Err(Error::domain("terms", 0.0, "at least 1"));
    }
    let mut y = q.x;
    for n in 1..=terms {
        let order =
            u32::try_from(n).map_err(|_| Error::domain("terms", n as f64, "fewer terms"))?;
        let nf = n as f64;
        let coeff = bessel_j(order, nf * q.a)?;
        y += 2.0 / nf * coeff * (nf * q.x).sin();
    }
    Ok(KeplerSolution {
        y,
        residual: q.residual(y).abs(),
        method: KeplerMethod::Series,
        iterations_or_terms: terms,
    })
}
