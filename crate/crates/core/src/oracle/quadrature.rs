//! Composite Simpson quadrature oracles for the lens area and the
//! incomplete beta integral.

use crate::error::{Error, Result};
use crate::geometry::{intersection_abscissae, LensConfig};
use crate::special_functions::BetaParams;

/// Fraction of an interval handled by the `x = end ∓ s^2` substitution at
/// each square-root endpoint.
const ENDPOINT_MARGIN: f64 = 0.1;

fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let n = panels.max(2) + panels % 2;
    let h = (b - a) / n as f64;
    let mut odd = 0.0;
    let mut even = 0.0;
    for i in 1..n {
        let v = f(a + h * i as f64);
        if i % 2 == 1 {
            odd += v;
        } else {
            even += v;
        }
    }
    h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b))
}

/// Integral over `[a, b]` of a function with `sqrt(x - a)` and/or `sqrt(b - x)`
/// behaviour at the flagged ends.
fn integrate_sqrt_ends<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    left: bool,
    right: bool,
    panels: usize,
) -> f64 {
    if b <= a {
        return 0.0;
    }
    let margin = ENDPOINT_MARGIN * (b - a);
    let pieces = 1 + usize::from(left) + usize::from(right);
    let per_piece = (panels / pieces).max(2);
    let s_max = margin.sqrt();

    let mut total = 0.0;
    let mut lo = a;
    let mut hi = b;
    if left {
        total += simpson(|s| f(a + s * s) * 2.0 * s, 0.0, s_max, per_piece);
        lo = a + margin;
    }
    if right {
        total += simpson(|s| f(b - s * s) * 2.0 * s, 0.0, s_max, per_piece);
        hi = b - margin;
    }
    total + simpson(&f, lo, hi, per_piece)
}

/// Lens area as the integral of its vertical extent
/// `2 min(sqrt(R^2 - x^2), sqrt(r^2 - (x - d)^2))` over the overlap's x-range.
///
/// The range is split at the chord through the intersection points so each
/// piece is smooth apart from a square-root endpoint.
pub fn lens_area_quadrature(c: LensConfig, panels: usize) -> Result<f64> {
    if panels < 8 {
        return Err(Error::domain("panels", panels as f64, "at least 8"));
    }
    let (big_r, r, d) = (c.radius_a(), c.radius_b(), c.separation());
    if d >= big_r + r {
        return Ok(0.0);
    }
    let height = |x: f64| {
        let ya = ((big_r - x) * (big_r + x)).max(0.0).sqrt();
        let yb = ((r - (x - d)) * (r + (x - d))).max(0.0).sqrt();
        2.0 * ya.min(yb)
    };
    let x_lo = (-big_r).max(d - r);
    let x_hi = big_r.min(d + r);
    if c.intersects_twice() {
        let (chord, _) = intersection_abscissae(c)?;
        let half = panels / 2;
        Ok(integrate_sqrt_ends(height, x_lo, chord, true, false, half)
            + integrate_sqrt_ends(height, chord, x_hi, false, true, half))
    } else {
        Ok(integrate_sqrt_ends(height, x_lo, x_hi, true, true, panels))
    }
}

/// `∫_0^x t^(a-1) (1-t)^(b-1) dt` by composite Simpson.
///
/// For `a < 1` the substitution `t = u^(1/a)` turns the integrand into the
/// bounded `(1/a) (1 - u^(1/a))^(b-1)`. Non-integer `a > 1` uses `t = u^4`
/// so the integrand is at least three times differentiable at 0.
pub fn beta_incomplete_quadrature(x: f64, p: BetaParams, panels: usize) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain("x", x, "a value in (0, 1)"));
    }
    if panels < 8 {
        return Err(Error::domain("panels", panels as f64, "at least 8"));
    }
    let (a, b) = (p.a(), p.b());
    if a < 1.0 {
        let power = 1.0 / a;
        let integrand = |u: f64| (1.0 - u.powf(power)).powf(b - 1.0) / a;
        Ok(simpson(integrand, 0.0, x.powf(a), panels))
    } else if a.fract() == 0.0 {
        let integrand = |t: f64| t.powf(a - 1.0) * (1.0 - t).powf(b - 1.0);
        Ok(simpson(integrand, 0.0, x, panels))
    } else {
        let integrand = |u: f64| {
            let t = u.powi(4);
            4.0 * u.powf(4.0 * a - 1.0) * (1.0 - t).powf(b - 1.0)
        };
        Ok(simpson(integrand, 0.0, x.powf(0.25), panels))
    }
}
