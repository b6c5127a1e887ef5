use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the volume functions and the sweeps built on them.
///
/// Numerical payloads are stored as `f64` regardless of the scalar type the
/// computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the named function.
    #[error("{op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// Adaptive quadrature exhausted its panel budget or stalled on round-off.
    #[error(
        "quadrature on [{a}, {b}] did not converge: value {value:e}, error estimate {error_estimate:e} after {subdivisions} panels"
    )]
    Convergence {
        a: f64,
        b: f64,
        value: f64,
        error_estimate: f64,
        subdivisions: usize,
    },

    /// The root finder was handed an interval without a sign change.
    #[error("root not bracketed: g({lo}) = {g_lo:e}, g({hi}) = {g_hi:e}")]
    Bracket { lo: f64, hi: f64, g_lo: f64, g_hi: f64 },

    /// A geometric invariant that should hold by construction was violated.
    #[error("internal consistency: {0}")]
    Consistency(String),

    /// An error raised while evaluating one cell of a verification sweep.
    #[error("cell {index} {cell}: {source}")]
    Cell {
        index: usize,
        cell: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    /// The innermost error, looking through [`Error::Cell`] wrappers.
    pub fn root_cause(&self) -> &Error {
        match self {
            Error::Cell { source, .. } => source.root_cause(),
            other => other,
        }
    }

    pub fn is_convergence(&self) -> bool {
        matches!(self.root_cause(), Error::Convergence { .. })
    }

    pub fn is_domain(&self) -> bool {
        matches!(self.root_cause(), Error::Domain { .. })
    }
}
