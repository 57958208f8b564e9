use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{name} = {value} is out of domain: expected {expected}")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },
    /// An iterative method ran out of iterations before meeting its tolerance.
    ///
    /// `best` is the best iterate found, `residual` its residual and
    /// `bracket` the last interval known to contain the root.
    #[error(
        "{routine} did not converge after {iterations} iterations \
         (best {best}, residual {residual:e}, bracket [{}, {}])",
        bracket.0, bracket.1
    )]
    NonConvergence {
        routine: &'static str,
        iterations: usize,
        best: f64,
        residual: f64,
        bracket: (f64, f64),
    },
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            expected,
        }
    }

    /// True for [`Error::NonConvergence`].
    pub fn is_non_convergence(&self) -> bool {
        matches!(self, Error::NonConvergence { .. })
    }
}
