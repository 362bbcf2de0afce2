use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("no value for parameter `{0}`")]
    MissingVariable(String),
    #[error("operation needs numeric coefficients; structure still depends on {0}")]
    ParametricUnsupported(String),
    #[error("a cosymplectic structure needs odd dimension, got {0}")]
    EvenDimension(usize),
    #[error("Φ is singular: alpha ∧ omega^n vanishes")]
    SingularPhi,
    #[error("omega is degenerate on the kernel")]
    DegenerateOmega,
    #[error("map is not a derivation")]
    NotDerivation,
    #[error("map is not an infinitesimal symplectic transformation")]
    NotIst,
    #[error("bracket fails the Jacobi identity at ({0}, {1}, {2})")]
    NotLie(usize, usize, usize),
    #[error("not a cosymplectic structure: {0}")]
    NotCosymplectic(String),
    #[error("conditions fail: {}", .0.join(", "))]
    ConditionsFail(Vec<String>),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("missing parameter `{0}`")]
    MissingParam(String),
    #[error("parameters make the structure degenerate")]
    DegenerateParams,
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("bracket [e{0}, e{1}] given twice")]
    DuplicateBracket(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
