use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    NetworkParse { line: usize, message: String },

    #[error("state vector has {got} coordinates but the network has {expected} arcs")]
    LengthMismatch { got: usize, expected: usize },

    #[error("supervector width {delta} exceeds arc count {m}")]
    DeltaTooLarge { delta: usize, m: usize },

    #[error("enumeration width must be at least 1")]
    ZeroWidth,

    #[error("{m} arcs is beyond the exhaustive-enumeration limit of {max}")]
    TooManyArcs { m: usize, max: usize },

    #[error("simulation budget must be at least 1")]
    ZeroBudget,

    #[error("{name} must be positive (got {value})")]
    NonPositive { name: &'static str, value: f64 },

    #[error("probability {value} at position {index} is outside [0, 1]")]
    ProbabilityRange { index: usize, value: f64 },

    #[error("time horizon {horizon} is too short; at least {min} steps are required")]
    HorizonTooShort { horizon: usize, min: usize },

    #[error("dataset with {rows} rows is too short for window {window}")]
    DatasetTooShort { rows: usize, window: usize },

    #[error("input has {got} features but the model expects {expected}")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("window must contain at least one row")]
    EmptyWindow,

    #[error("block set must not be empty")]
    EmptyBlocks,

    #[error("non-finite value in {place}")]
    NonFinite { place: String },

    #[error("malformed {what}: {message}")]
    Format { what: &'static str, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
