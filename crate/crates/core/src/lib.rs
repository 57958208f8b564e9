//! Numerical building blocks for the two-disk half-overlap problem.
//!
//! The crate is split into four layers:
//!
//! * [`special_functions`]: Bessel `J_n`, log-gamma, the beta family and its
//!   quantile inverse, the Kepler solution operator `E(a, x)` and
//!   haversine/archaversine.
//! * [`geometry`]: circular segment and two-circle lens areas.
//! * [`solver`]: offset-for-area root finding and the three closed forms of
//!   the half-area offset `D_DHA`, cross-checked in a [`MethodReport`].
//! * [`oracle`]: slow, independent estimators (Monte Carlo, quadrature) used
//!   to validate the analytic paths.
//!
//! ```
//! use dha_core::solver::dha_closed_form_invbeta;
//!
//! let d = dha_closed_form_invbeta().unwrap();
//! assert!((d - 0.807_945_506_599_034_4).abs() < 1e-13);
//! ```

pub mod error;
pub mod geometry;
pub mod oracle;
pub mod solver;
pub mod special_functions;

mod numeric;
mod tolerance;

pub use error::{Error, Result};
pub use geometry::{LensConfig, SegmentSpec};
pub use oracle::{MCEstimate, SplitMix64};
pub use solver::{DhaMethod, MethodReport, SolveRequest, Target};
pub use special_functions::{BetaParams, KeplerMethod, KeplerQuery, KeplerSolution};
pub use tolerance::Tolerance;
