use crate::error::{Error, Result};

/// Stopping rule shared by every iterative routine in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub max_iterations: usize,
}

impl Tolerance {
    pub const DEFAULT_ABS_TOL: f64 = 1e-14;
    pub const DEFAULT_MAX_ITERATIONS: usize = 200;

    pub fn new(abs_tol: f64, max_iterations: usize) -> Result<Self> {
        if !(abs_tol > 0.0 && abs_tol.is_finite()) {
            return Err(Error::domain(
                "abs_tol",
                abs_tol,
                "a positive finite number",
            ));
        }
        if max_iterations == 0 {
            return Err(Error::domain(
                "max_iterations",
                max_iterations as f64,
                "at least 1",
            ));
        }
        Ok(Tolerance {
            abs_tol,
            max_iterations,
        })
    }

    /// Default iteration budget with a custom absolute tolerance.
    pub fn with_abs_tol(abs_tol: f64) -> Result<Self> {
        Self::new(abs_tol, Self::DEFAULT_MAX_ITERATIONS)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_tol: Self::DEFAULT_ABS_TOL,
            max_iterations: Self::DEFAULT_MAX_ITERATIONS,
        }
    }
}
