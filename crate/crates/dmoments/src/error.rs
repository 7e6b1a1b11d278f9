use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument was non-finite, negative where positivity is required, or
    /// otherwise outside the accepted range.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A special-function argument outside the mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A magnetic field that must be strictly positive was not.
    #[error("invalid field: B = {0} T (must be > 0)")]
    InvalidField(f64),

    /// The Kummer series did not converge within the term cap.
    #[error("series did not converge after {terms} terms")]
    SeriesNonconvergence { terms: usize },

    /// Adaptive quadrature did not converge; the last two estimates are attached.
    #[error("quadrature did not converge: last estimate {last:e}, previous {previous:e}")]
    QuadratureNonconvergence { last: f64, previous: f64 },

    /// An asymptotic form was requested outside its validity regime.
    #[error("regime violation: epsilon/scale = {ratio:e}, required {required}")]
    RegimeViolation { ratio: f64, required: String },

    /// A sweep configuration violated the schema; names the offending field.
    #[error("schema violation in field `{field}`: {reason}")]
    Schema { field: String, reason: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn schema(field: &str, reason: impl Into<String>) -> Self {
        Error::Schema {
            field: field.to_string(),
            reason: reason.into(),
        }
    }

    /// Process exit code for the CLI: 2 for bad input, 3 for i/o.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 3,
            _ => 2,
        }
    }
}
