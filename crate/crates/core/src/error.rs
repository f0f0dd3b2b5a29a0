use thiserror::Error;

/// Errors raised by the numeric, ensemble and formula layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A denominator vanishes (or comes within the pole threshold of vanishing).
    #[error("pole: {0}")]
    Pole(String),

    /// Shifts that must be distinct are numerically coincident and confluent
    /// evaluation was not requested.
    #[error("conditioning error: {0}")]
    Conditioning(String),

    #[error("enumeration of ACUE({n}) exceeds the cap {cap}; raise --enumeration-cap to allow it")]
    Capacity { n: usize, cap: usize },

    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature contour passes within the pole threshold of a singularity.
    #[error("contour error: {0}")]
    Contour(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precision of {0} bits is below the 64-bit minimum")]
    Precision(u32),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
