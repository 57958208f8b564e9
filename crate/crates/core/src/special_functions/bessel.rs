//! Bessel functions of the first kind and integer order.
//!
//! Two regimes:
//! * ascending power series when `(x/2)^2 <= max(n + 1, 6.25)`: every term is
//!   then at most ~10x the result, so cancellation costs at most one digit;
//! * Miller's backward recurrence normalised by `J_0 + 2 Σ J_2k = 1`
//!   everywhere else.

use crate::error::Result;
use crate::numeric::{require_finite, CompensatedSum};

/// Rescale threshold for the backward recurrence.
const BIG: f64 = 1e250;
const BIG_INV: f64 = 1e-250;

/// `J_n(x)` for integer order `n >= 0` and finite `x`.
pub fn bessel_j(n: u32, x: f64) -> Result<f64> {
    require_finite(x, "x")?;
    if x == 0.0 {
        return Ok(if n == 0 { 1.0 } else { 0.0 });
    }
    // J_n(-x) = (-1)^n J_n(x)
    let sign = if x < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    let ax = x.abs();
    let half_sq = 0.25 * ax * ax;
    let value = if half_sq <= (f64::from(n) + 1.0).max(6.25) {
        ascending_series(n, ax)
    } else {
        miller(n, ax)
    };
    Ok(sign * value)
}

fn ascending_series(n: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    // (x/2)^n / n!, built multiplicatively; underflow to zero is the right answer.
    let mut term = 1.0;
    for k in 1..=n {
        term *= half / f64::from(k);
        if term == 0.0 {
            return 0.0;
        }
    }
    let q = -half * half;
    let nf = f64::from(n);
    let mut sum = CompensatedSum::default();
    sum.add(term);
    let mut k = 1.0;
    loop {
        term *= q / (k * (nf + k));
        sum.add(term);
        if term.abs() <= 1e-18 * sum.value().abs() || term == 0.0 {
            break;
        }
        k += 1.0;
    }
    sum.value()
}

fn miller(n: u32, x: f64) -> f64 {
    let order = f64::from(n).max(x.ceil());
    // Start well above both n and x so the dominant solution has decayed.
    let mut start = (order + (60.0 * order).sqrt() + 30.0) as u32;
    start += start % 2;

    let two_over_x = 2.0 / x;
    let mut j_next = 0.0; // J_{k+1}
    let mut j = 1.0; // J_k, arbitrary scale
    let mut norm = CompensatedSum::default();
    let mut result = if start == n { j } else { 0.0 };

    for k in (1..=start).rev() {
        let j_prev = f64::from(k) * two_over_x * j - j_next;
        j_next = j;
        j = j_prev;
        let m = k - 1;
        if m == n {
            result = j;
        }
        if m % 2 == 0 {
            norm.add(if m == 0 { j } else { 2.0 * j });
        }
        if j.abs() > BIG {
            j *= BIG_INV;
            j_next *= BIG_INV;
            result *= BIG_INV;
            let s = norm.value() * BIG_INV;
            norm = CompensatedSum::default();
            norm.add(s);
        }
    }
    result / norm.value()
}
