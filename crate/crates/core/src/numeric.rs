//! Shared floating-point helpers.

use crate::error::{Error, Result};

/// Window for treating an out-of-range value as rounding noise, in units of
/// machine epsilon scaled by the magnitude of the violated bound.
const CLAMP_EPSILONS: f64 = 4.0;

/// Clamp `value` into `[lo, hi]` if it misses the interval by at most four
/// machine epsilons (relative to the bound, floored at 1). Anything further
/// out, or NaN, is a domain error.
pub(crate) fn clamp_to_domain(
    value: f64,
    lo: f64,
    hi: f64,
    name: &'static str,
    expected: &'static str,
) -> Result<f64> {
    if value >= lo && value <= hi {
        return Ok(value);
    }
    let window = |bound: f64| CLAMP_EPSILONS * f64::EPSILON * bound.abs().max(1.0);
    if value < lo && lo - value <= window(lo) {
        Ok(lo)
    } else if value > hi && value - hi <= window(hi) {
        Ok(hi)
    } else {
        Err(Error::domain(name, value, expected))
    }
}

pub(crate) fn require_finite(value: f64, name: &'static str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::domain(name, value, "a finite number"))
    }
}

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.carry += (self.sum - t) + term;
        } else {
            self.carry += (term - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clamp_accepts_rounding_noise() {
        let just_over = 1.0 + 2.0 * f64::EPSILON;
        assert_eq!(
            clamp_to_domain(just_over, -1.0, 1.0, "c", "[-1, 1]"),
            Ok(1.0)
        );
        assert_eq!(
            clamp_to_domain(-1.0 - 4.0 * f64::EPSILON, -1.0, 1.0, "c", "[-1, 1]"),
            Ok(-1.0)
        );
        assert_eq!(clamp_to_domain(0.25, 0.0, 1.0, "c", "[0, 1]"), Ok(0.25));
    }

    #[test]
    fn clamp_rejects_real_violations() {
        assert!(clamp_to_domain(1.0 + 1e-12, -1.0, 1.0, "c", "[-1, 1]").is_err());
        assert!(clamp_to_domain(-1e-10, 0.0, 1.0, "c", "[0, 1]").is_err());
        assert!(clamp_to_domain(f64::NAN, 0.0, 1.0, "c", "[0, 1]").is_err());
    }

    #[test]
    fn compensated_sum_recovers_lost_bits() {
        let mut s = CompensatedSum::default();
        s.add(1.0);
        for _ in 0..10 {
            s.add(1e-16);
        }
        s.add(-1.0);
        assert!((s.value() - 1e-15).abs() < 1e-30);
    }
}
