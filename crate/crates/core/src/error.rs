use thiserror::Error;

use crate::ts_format::FormatError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid dataset: {0}")]
    InvalidDataset(String),

    #[error("dimension {dimension} is entirely missing")]
    AllMissingDimension { dimension: usize },

    #[error("dimension {dimension} contains missing values; interpolate first")]
    MissingValuesPresent { dimension: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("k = {k} exceeds the {available} available")]
    KTooLarge { k: usize, available: usize },

    #[error("series of length {length} is too short (need at least {required})")]
    SeriesTooShort { length: usize, required: usize },

    #[error("degenerate system: {0}")]
    DegenerateSystem(String),

    #[error("non-finite input: {0}")]
    NonFinite(String),

    #[error("invalid basis size: {0}")]
    InvalidBasisSize(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("too few algorithms: {0} (need at least 3)")]
    TooFewAlgorithms(usize),

    #[error("too few datasets: {0} (need at least 2)")]
    TooFewDatasets(usize),

    #[error("no critical value tabulated for k = {0}")]
    UnsupportedK(usize),

    #[error("no critical value tabulated for alpha = {0}")]
    UnsupportedAlpha(f64),

    #[error("model persistence: {0}")]
    Persistence(String),

    #[error(transparent)]
    Format(#[from] FormatError),
}
