use thiserror::Error;

/// Errors reported by every fallible operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrgError {
    /// Malformed or out-of-range input (bad index, shape mismatch, bad parameter).
    #[error("invalid input: {0}")]
    Input(String),
    /// Text that could not be parsed, with a location.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    /// The instance is well-formed but violates a problem precondition
    /// (for example a CGRO goal set that is not successful for the coalition).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A finite quantity does not fit the supported integer range.
    #[error("quantity overflow: {0}")]
    Overflow(String),
    /// The brute-force oracle refuses instances beyond desk scale.
    #[error("instance too large: {0}")]
    TooLarge(String),
}

impl CrgError {
    pub fn input(msg: impl Into<String>) -> Self {
        CrgError::Input(msg.into())
    }

    pub fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        CrgError::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    /// True for errors caused by a problem precondition rather than bad input.
    pub fn is_precondition(&self) -> bool {
        matches!(self, CrgError::Precondition(_))
    }
}

pub type Result<T> = std::result::Result<T, CrgError>;
