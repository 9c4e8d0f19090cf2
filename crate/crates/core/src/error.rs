use thiserror::Error;

/// Errors raised by the geometry, numerics, scenario, indicator and I/O layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("empty input")]
    EmptyInput,

    #[error("singular matrix: pivot {pivot:e} in column {column}")]
    SingularMatrix { column: usize, pivot: f64 },

    #[error("duplicate or near-duplicate points make {0} undefined")]
    DuplicatePoints(&'static str),

    #[error("weight vector {0} has zero norm")]
    DegenerateWeight(usize),

    #[error("parse error at line {line}{}: {message}", column.map(|c| format!(", column {c}")).unwrap_or_default())]
    Parse {
        line: usize,
        column: Option<usize>,
        message: String,
    },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },

    #[error("unsupported front: {0}")]
    UnsupportedFront(String),

    #[error("dense set too small: need {needed}, have {available}")]
    InsufficientDense { needed: usize, available: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("reference set is empty")]
    EmptyReference,

    #[error("results belong to more than one indicator")]
    MixedIndicators,

    #[error("grading scale expects {expected} variants, got {found}")]
    ScaleMismatch { expected: usize, found: usize },

    #[error("grade table is empty")]
    EmptyTable,

    #[error("{label}: {source}")]
    Instance { label: String, source: Box<Error> },
}

impl Error {
    /// Short stable code written to the results file on indicator failure.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "DimensionError",
            Error::InvalidPoint(_) => "InvalidPoint",
            Error::EmptyInput => "EmptyInput",
            Error::SingularMatrix { .. } => "SingularMatrix",
            Error::DuplicatePoints(_) => "DuplicatePoints",
            Error::DegenerateWeight(_) => "DegenerateWeight",
            Error::Parse { .. } => "ParseError",
            Error::Io { .. } => "IoError",
            Error::UnsupportedFront(_) => "UnsupportedFront",
            Error::InsufficientDense { .. } => "InsufficientDense",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::EmptyReference => "EmptyReference",
            Error::MixedIndicators => "MixedIndicators",
            Error::ScaleMismatch { .. } => "ScaleMismatch",
            Error::EmptyTable => "EmptyTable",
            Error::Instance { source, .. } => source.code(),
        }
    }

    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }

    pub(crate) fn in_instance(self, label: impl Into<String>) -> Self {
        Error::Instance {
            label: label.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
