use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("composition sums to {got}, expected {expected}")]
    CompositionMismatch { expected: usize, got: usize },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("negative coefficient at degree {0}")]
    NegativeCoefficient(usize),

    #[error("shape has {cells} cells, enumeration cap is {cap}")]
    CapExceeded { cells: usize, cap: usize },

    #[error("cumulant order must be at least 2, got {0}")]
    CumulantOrder(usize),

    #[error("variance is zero; the normalized distribution is undefined")]
    ZeroVariance,

    #[error("contradictory limit declaration: {0}")]
    ContradictoryLimits(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
