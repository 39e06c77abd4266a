use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("quadrature did not converge: achieved error {achieved:.3e}, requested {requested:.3e}")]
    QuadratureNonConvergence { achieved: f64, requested: f64 },

    #[error("s = 1 is the pole of zeta")]
    Pole,

    #[error("height |t| = {t} exceeds the supported range {max}")]
    HeightOutOfRange { t: f64, max: f64 },

    #[error("|zeta(s)| = {modulus:.3e} is below the zero-proximity threshold")]
    NearZero { modulus: f64 },

    #[error("t = {t} lies within {distance:.3e} of a zero ordinate")]
    NearOrdinate { t: f64, distance: f64 },

    #[error("certified tail {bound:.3e} exceeds tolerance {tol:.3e}")]
    TailBudget { bound: f64, tol: f64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: ordinates are not strictly increasing")]
    NonMonotone { line: usize },

    #[error("zero table is empty")]
    EmptyTable,

    #[error("i/o error: {0}")]
    Io(String),

    #[error("zero coverage ends at {available}, but {needed} is required")]
    Coverage { needed: f64, available: f64 },

    #[error("numeric minimum disagrees with the closed form: {what} differs by {difference:.3e}")]
    OptimizerMismatch { what: &'static str, difference: f64 },

    #[error("identity check failed: {what} differs by {difference:.3e}")]
    IdentityMismatch { what: &'static str, difference: f64 },

    #[error("budget {budget:.3e} exceeds limit {limit:.3e}; dominant term: {term}")]
    Budget { term: &'static str, budget: f64, limit: f64 },
}
