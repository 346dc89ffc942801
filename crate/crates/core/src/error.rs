use thiserror::Error;

/// Errors produced by parameter validation and the numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input failed validation; names the offending field.
    #[error("invalid {field} = {value}: {reason}")]
    InvalidParameter {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// The transverse mode q = 0 is excluded from the mode domain.
    #[error("singular mode q = 0: the reflection denominator vanishes at contact")]
    SingularMode,

    /// Adaptive quadrature ran out of subdivisions before meeting the tolerance.
    /// Carries the best estimate and its error bound.
    #[error(
        "quadrature did not converge within {subdivisions} subdivisions: \
         best estimate {value:e} with error bound {error_estimate:e}"
    )]
    QuadratureDidNotConverge {
        value: f64,
        error_estimate: f64,
        subdivisions: usize,
    },

    /// Series summation hit the iteration cap before its tail bound met the tolerance.
    #[error(
        "series did not converge within {terms} terms: \
         partial sum {value:e} with tail bound {tail_bound:e}"
    )]
    SeriesDidNotConverge {
        value: f64,
        tail_bound: f64,
        terms: u64,
    },

    /// The boundary-value solver cannot reach the requested accuracy on the
    /// truncated domain.
    #[error("domain truncation insufficient: {detail}")]
    InsufficientTruncation { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_positive(field: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::InvalidParameter {
            field,
            value,
            reason: "must be finite",
        });
    }
    if value <= 0.0 {
        return Err(Error::InvalidParameter {
            field,
            value,
            reason: "must be > 0",
        });
    }
    Ok(value)
}

pub(crate) fn require_non_negative(field: &'static str, value: f64) -> Result<f64> {
    if value.is_nan() {
        return Err(Error::InvalidParameter {
            field,
            value,
            reason: "must not be NaN",
        });
    }
    if value < 0.0 {
        return Err(Error::InvalidParameter {
            field,
            value,
            reason: "must be >= 0",
        });
    }
    Ok(value)
}
