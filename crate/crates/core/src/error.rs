use thiserror::Error;

use crate::system::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    /// Shapes of matrices, vectors or polynomial variable counts disagree.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Input lies outside the domain of an operation (zero polynomial,
    /// zero direction, parameter out of range).
    #[error("domain error: {0}")]
    Domain(String),

    /// An operation was called on data that does not satisfy its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The matrix system fails the symmetry or regularity checks.
    #[error("invalid matrix system: {}", .0.summary())]
    Invalid(Box<ValidationReport>),

    #[error("no regular point found after {0} trials")]
    NoRegularPoint(usize),

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("ambiguous gauss rank: {0}")]
    AmbiguousRank(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
