//! Special functions: Bessel `J_n`, log-gamma, the beta family with its
//! quantile inverse, the Kepler operator `E(a, x)` and haversines.
//!
//! Every function here is pure and returns [`crate::Result`]; arguments that
//! miss a closed domain by rounding noise (at most four machine epsilons) are
//! clamped onto it, larger violations are domain errors.

mod bessel;
mod beta;
mod gamma;
mod haversine;
mod kepler;

pub use bessel::bessel_j;
pub use beta::{
    beta_complete, beta_half_threehalves_closed, beta_incomplete, beta_regularized,
    beta_regularized_inverse, BetaParams,
};
pub use gamma::ln_gamma;
pub use haversine::{archav, hav};
pub use kepler::{kepler_e_newton, kepler_e_series, KeplerMethod, KeplerQuery, KeplerSolution};
