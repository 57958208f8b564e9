//! Complete, incomplete and regularized beta functions and the beta quantile.

use super::gamma::ln_gamma;
use crate::error::{Error, Result};
use crate::numeric::clamp_to_domain;
use crate::tolerance::Tolerance;

/// Continued-fraction iteration cap. Convergence takes O(sqrt(max(a, b)))
/// terms, so this covers shapes far beyond the supported range.
const CF_MAX_TERMS: usize = 2_000;
const CF_TINY: f64 = 1e-300;

/// Shape pair `(a, b)` of a beta-family call; both strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaParams {
    a: f64,
    b: f64,
}

impl BetaParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::domain("a", a, "a positive finite shape"));
        }
        if !(b > 0.0 && b.is_finite()) {
            return Err(Error::domain("b", b, "a positive finite shape"));
        }
        Ok(BetaParams { a, b })
    }

    /// The `(1/2, 3/2)` pair behind the half-overlap closed forms.
    pub fn half_three_halves() -> Self {
        BetaParams { a: 0.5, b: 1.5 }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    fn swapped(self) -> Self {
        BetaParams {
            a: self.b,
            b: self.a,
        }
    }
}

fn ln_beta(p: BetaParams) -> Result<f64> {
    Ok(ln_gamma(p.a)? + ln_gamma(p.b)? - ln_gamma(p.a + p.b)?)
}

fn unit_interval(x: f64, name: &'static str) -> Result<f64> {
    clamp_to_domain(x, 0.0, 1.0, name, "a value in [0, 1]")
}

/// `B(a, b) = Γ(a) Γ(b) / Γ(a + b)`.
pub fn beta_complete(p: BetaParams) -> Result<f64> {
    Ok(ln_beta(p)?.exp())
}

/// Lower incomplete beta integral `B(x; a, b)`.
pub fn beta_incomplete(x: f64, p: BetaParams) -> Result<f64> {
    let x = unit_interval(x, "x")?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let complete = beta_complete(p)?;
    if x == 1.0 {
        return Ok(complete);
    }
    Ok(regularized_inner(x, p)? * complete)
}

/// Regularized incomplete beta `I_x(a, b)`, the Beta(a, b) CDF.
pub fn beta_regularized(x: f64, p: BetaParams) -> Result<f64> {
    let x = unit_interval(x, "x")?;
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(1.0);
    }
    regularized_inner(x, p)
}

/// `x` strictly inside (0, 1).
fn regularized_inner(x: f64, p: BetaParams) -> Result<f64> {
    let ln_b = ln_beta(p)?;
    let value = if x < (p.a + 1.0) / (p.a + p.b + 2.0) {
        front_factor(x, p, ln_b) * continued_fraction(x, p)? / p.a
    } else {
        let q = p.swapped();
        let y = 1.0 - x;
        1.0 - front_factor(y, q, ln_b) * continued_fraction(y, q)? / q.a
    };
    Ok(value.clamp(0.0, 1.0))
}

/// `x^a (1 - x)^b / B(a, b)`.
fn front_factor(x: f64, p: BetaParams, ln_b: f64) -> f64 {
    (p.a * x.ln() + p.b * (-x).ln_1p() - ln_b).exp()
}

/// Continued fraction for `I_x(a, b)` evaluated with the modified Lentz method.
fn continued_fraction(x: f64, p: BetaParams) -> Result<f64> {
    let (a, b) = (p.a, p.b);
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;

    let guard = |v: f64| if v.abs() < CF_TINY { CF_TINY } else { v };

    let mut c = 1.0;
    let mut d = 1.0 / guard(1.0 - qab * x / qap);
    let mut h = d;
    for m in 1..=CF_MAX_TERMS {
        let m = m as f64;
        let m2 = 2.0 * m;

        // even step
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 / guard(1.0 + aa * d);
        c = guard(1.0 + aa / c);
        h *= d * c;

        // odd step
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 / guard(1.0 + aa * d);
        c = guard(1.0 + aa / c);
        let delta = d * c;
        h *= delta;

        if (delta - 1.0).abs() <= f64::EPSILON {
            return Ok(h);
        }
    }
    Err(Error::NonConvergence {
        routine: "incomplete beta continued fraction",
        iterations: CF_MAX_TERMS,
        best: h,
        residual: f64::NAN,
        bracket: (x, x),
    })
}

/// Beta quantile: the `x` in `[0, 1]` with `I_x(a, b) = z`.
///
/// Newton on the CDF with the beta density as derivative, safeguarded by a
/// bracket that starts at `[0, 1]`. Any Newton step leaving the bracket is
/// replaced by bisection.
pub fn beta_regularized_inverse(z: f64, p: BetaParams, tol: Tolerance) -> Result<f64> {
    let z = unit_interval(z, "z")?;
    if z == 0.0 {
        return Ok(0.0);
    }
    if z == 1.0 {
        return Ok(1.0);
    }
    let ln_b = ln_beta(p)?;
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    let mut x = p.a / (p.a + p.b);
    let mut best = (x, f64::INFINITY);

    for _ in 0..tol.max_iterations {
        let residual = regularized_inner(x, p)? - z;
        if residual.abs() < best.1 {
            best = (x, residual.abs());
        }
        if residual.abs() <= tol.abs_tol {
            return Ok(x);
        }
        if residual < 0.0 {
            lo = x;
        } else {
            hi = x;
        }

        let density = ((p.a - 1.0) * x.ln() + (p.b - 1.0) * (-x).ln_1p() - ln_b).exp();
        let newton = x - residual / density;
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // bracket is down to adjacent doubles
            break;
        }
        x = if density.is_finite() && density > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            mid
        };
    }
    Err(Error::NonConvergence {
        routine: "inverse regularized beta",
        iterations: tol.max_iterations,
        best: best.0,
        residual: best.1,
        bracket: (lo, hi),
    })
}

/// Closed form of `B(x; 1/2, 3/2) = sqrt(x - x^2) + arcsin(sqrt(x))`.
pub fn beta_half_threehalves_closed(x: f64) -> Result<f64> {
    let x = unit_interval(x, "x")?;
    Ok((x * (1.0 - x)).sqrt() + x.sqrt().asin())
}
