//! Error type shared across the workbench.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building presentations, rewrite
/// systems, gradings, or while decoding configuration files.
#[derive(Debug, Error)]
pub enum Error {
    /// A word referenced a letter index outside its alphabet.
    #[error("letter index {index} out of range for alphabet of size {size}")]
    LetterOutOfRange { index: usize, size: usize },

    /// A scalar string could not be parsed as `p` or `p/q`.
    #[error("invalid rational literal {0:?}")]
    BadScalar(String),

    /// Division by zero or a zero denominator in a rational literal.
    #[error("zero denominator")]
    ZeroDenominator,

    /// An operation that needs a nonzero polynomial received zero.
    #[error("polynomial is zero")]
    ZeroPolynomial,

    /// A relation or rule candidate was not homogeneous for the
    /// weight grading.
    #[error("polynomial is not homogeneous: degrees {0} and {1} both occur")]
    Inhomogeneous(usize, usize),

    /// The down-up parameter beta vanished; those algebras are outside
    /// the supported family.
    #[error("beta must be nonzero")]
    BetaZero,

    /// A generator name was not found in the alphabet.
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    /// A group element name was not found in the group.
    #[error("unknown group element {0:?}")]
    UnknownElement(String),

    /// A multiplication table failed the group axioms.
    #[error("invalid group table: {0}")]
    BadGroupTable(String),

    /// A grading assignment failed to make every relation homogeneous.
    #[error("grading is not admissible: {0}")]
    InadmissibleGrading(String),

    /// A generator substitution was not an invertible linear change.
    #[error("substitution is not an invertible linear change of generators")]
    NonInvertibleSubstitution,

    /// A substitution image had the wrong degree or shape.
    #[error("substitution image for {0:?} is not homogeneous of the expected degree")]
    BadSubstitutionImage(String),

    /// A degree bound was too small for the requested computation.
    #[error("degree bound {bound} is below the required minimum {needed}")]
    BoundTooSmall { bound: usize, needed: usize },

    /// Bad check/CLI configuration (maps to exit code 2).
    #[error("config error: {0}")]
    Config(String),

    /// I/O while reading configuration files.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed JSON in a configuration file.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True when the error should surface as a configuration error
    /// (CLI exit code 2) rather than a failed check.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::Config(_) | Error::Io(_) | Error::Json(_) | Error::UnknownGenerator(_)
                | Error::UnknownElement(_) | Error::BadScalar(_)
        )
    }
}
