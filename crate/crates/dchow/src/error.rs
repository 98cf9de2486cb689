use thiserror::Error;

/// Errors reported by the engine.
#[derive(Debug, Error)]
pub enum Error {
    /// Operands live in different ring contexts, or an operation was asked to
    /// run in a context it does not support.
    #[error("context error: {0}")]
    Context(String),

    /// A substitution map is missing the image of a variable.
    #[error("substitution error: {0}")]
    Substitution(String),

    /// A non-homogeneous polynomial was passed where a homogeneous one is required.
    #[error("grading error: {0}")]
    Grading(String),

    /// Malformed series expression.
    #[error("expression error: {0}")]
    Expression(String),

    /// The image ideal is not contained in the kernel ideal.
    #[error("containment error: {0}")]
    Containment(String),

    /// Unknown case id or scenario, or inconsistent case data.
    #[error("catalog error: {0}")]
    Catalog(String),

    /// The two Hilbert-function methods disagree; always a hard failure.
    #[error(
        "method disagreement at degree {degree}: staircase gives {staircase}, linear algebra gives {linalg}"
    )]
    MethodDisagreement {
        degree: u32,
        staircase: u64,
        linalg: u64,
    },

    /// A computation was asked for a slice beyond the configured size caps.
    #[error("size error: {0}")]
    Size(String),

    /// Parse failure in the polynomial or series grammar.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
