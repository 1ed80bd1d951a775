use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("column `{column}` has {found} values, expected {expected}")]
    LengthMismatch {
        column: String,
        expected: usize,
        found: usize,
    },

    #[error("{n} observations cannot support {p} predictors (need n >= p + 2)")]
    InsufficientObservations { n: usize, p: usize },

    #[error("non-finite value in column `{column}` at row {row}")]
    NonFiniteValue { column: String, row: usize },

    #[error("duplicate column name `{0}`")]
    DuplicateName(String),

    #[error("column `{0}` is constant (standard deviation is zero)")]
    ConstantColumn(String),

    #[error("unknown column `{0}`")]
    UnknownName(String),

    #[error("predictor subset is empty")]
    EmptySubset,

    #[error("`{target}` cannot be residualized against itself")]
    TargetInConditioningSet { target: String },

    #[error("singular design for [{}] (reciprocal condition number {rcond:e})", subset.join(", "))]
    SingularDesign { subset: Vec<String>, rcond: f64 },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("{p} predictors give {p}! orderings; exhaustive enumeration is capped at p <= {cap}")]
    TooManyOrderings { p: usize, cap: usize },

    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),

    #[error("parse error at row {row}, column {column}: {message}")]
    ParseError {
        row: usize,
        column: usize,
        message: String,
    },

    #[error("non-numeric cell {value:?} at row {row}, column `{column}`")]
    NonNumericCell {
        row: usize,
        column: String,
        value: String,
    },

    #[error("missing column `{0}` in header")]
    MissingColumn(String),

    #[error("no data rows")]
    EmptyData,

    #[error("correlation matrix is not positive semidefinite (smallest eigenvalue {min_eigenvalue:e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
