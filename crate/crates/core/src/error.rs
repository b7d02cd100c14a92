use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("tuple must have at least 3 entries, got {0}")]
    TooShort(usize),

    #[error("expected a tuple of length {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },

    #[error("entry {index} is not a probability in [0, 1]: {value}")]
    OutOfRange { index: usize, value: String },

    #[error("cannot parse {0:?} as a number")]
    Parse(String),

    #[error("n = {n} is out of range, need n >= {min}")]
    BadDimension { n: usize, min: usize },

    #[error("abscissa {0} is outside [0, 1]")]
    BadAbscissa(f64),

    #[error("up-down hypothesis fails at index {0}")]
    HypothesisNotMet(usize),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("supports of distributions {0} and {1} overlap")]
    OverlappingSupports(usize, usize),

    #[error("invalid estimator spec: {0}")]
    InvalidSpec(String),

    #[error("malformed witness JSON: {0}")]
    WitnessJson(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
