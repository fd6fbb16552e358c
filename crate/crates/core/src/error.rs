use thiserror::Error;

/// Errors raised by the algebra, the operators and the file formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("expected a pure grade-1 element")]
    NonVector,

    #[error("variable index {index} out of range for m = {m}")]
    IndexOutOfRange { index: usize, m: usize },

    #[error("polynomial is not divisible by the linear form (nonzero remainder)")]
    NonzeroRemainder,

    #[error("expected scalar-valued coefficients")]
    NonScalar,

    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),

    #[error("singularity of kappa cannot be decided for this root system: {0}")]
    UnsupportedGroup(String),

    #[error("kappa lies in the singular set: {0}")]
    SingularKappa(String),

    #[error("polynomial is not slice")]
    NotSlice,

    #[error("polynomial is not slice regular")]
    NotSliceRegular,

    #[error("gamma_kappa = {found} but (1 - m)/2 = {expected} is required")]
    BadGamma { found: String, expected: String },

    #[error("odd dimension m required, got m = {0}")]
    OddDimensionRequired(usize),

    #[error("dimension m = {0} is too small for this operation")]
    DimensionTooSmall(usize),

    #[error("polynomial depends on x_0")]
    DependsOnX0,

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },
}

impl Error {
    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
