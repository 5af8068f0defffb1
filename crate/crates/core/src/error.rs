use thiserror::Error;

/// Errors raised by the library. Every variant is an input or precondition
/// violation; none of the algorithms fail on valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type {label}{rank}")]
    InvalidRootSystem { label: String, rank: usize },

    #[error("{what} is capped at {cap}, got {got}")]
    CapExceeded { what: &'static str, cap: usize, got: usize },

    #[error("invalid torus element: {0}")]
    InvalidTorusElement(String),

    #[error("invalid subsystem: {0}")]
    InvalidSubsystem(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("characteristic polynomial does not split over the coefficient field")]
    NonSplitSpectrum,

    #[error("matrix is not in the ambient {0}")]
    AmbientMismatch(String),

    #[error("matrix is not in the group: {0}")]
    NotInGroup(String),

    #[error("characteristic constraint violated: {0}")]
    Characteristic(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid class datum: {0}")]
    InvalidClass(String),

    #[error("pattern is not in the closure of the class")]
    NotInClosure,

    #[error("point is outside the etale locus: {0}")]
    OutsideEtaleLocus(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidRootSystem { .. } => "invalid_root_system",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::InvalidTorusElement(_) => "invalid_torus_element",
            Error::InvalidSubsystem(_) => "invalid_subsystem",
            Error::NotPrime(_) => "not_prime",
            Error::FieldMismatch(_) => "field_mismatch",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::NonSplitSpectrum => "non_split_spectrum",
            Error::AmbientMismatch(_) => "ambient_mismatch",
            Error::NotInGroup(_) => "not_in_group",
            Error::Characteristic(_) => "characteristic",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::InvalidClass(_) => "invalid_class",
            Error::NotInClosure => "not_in_closure",
            Error::OutsideEtaleLocus(_) => "outside_etale_locus",
            Error::Parse(_) => "parse",
        }
    }
}
