use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    Domain(&'static str),
    /// Exact division left a nonzero remainder.
    InexactDivision,
    /// The form's shape is not handled by the requested operation.
    UnsupportedForm(&'static str),
    /// A numerically derived integer was not close enough to an integer.
    Precision { residual: f64 },
    /// Quadrature did not reach the requested tolerance.
    Accuracy { value: f64, abs_error_estimate: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::InexactDivision => write!(f, "polynomial division is not exact"),
            Error::UnsupportedForm(what) => write!(f, "unsupported form: {what}"),
            Error::Precision { residual } => {
                write!(f, "rounding residual {residual:e} exceeds tolerance")
            }
            Error::Accuracy {
                value,
                abs_error_estimate,
            } => write!(
                f,
                "quadrature did not converge: best value {value} with error estimate {abs_error_estimate:e}"
            ),
        }
    }
}

impl core::error::Error for Error {}
