//! Slow, independent estimators used to validate the analytic paths.
//!
//! Nothing here calls the formulas it is meant to check: the Monte Carlo
//! estimator only tests point membership and the quadratures integrate the
//! raw integrands.

mod montecarlo;
mod quadrature;
mod rng;

pub use montecarlo::{lens_area_montecarlo, lens_area_montecarlo_chunked, MCEstimate};
pub use quadrature::{beta_incomplete_quadrature, lens_area_quadrature};
pub use rng::SplitMix64;
