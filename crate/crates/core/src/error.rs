//! Error types for the whole crate, grouped by pipeline stage.

use thiserror::Error;

/// Errors raised while parsing, validating, or featurizing market data.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("malformed header: expected `date,open,high,low,close,volume`, found `{found}`")]
    MalformedHeader { found: String },
    #[error("line {line}, column `{column}`: {message}")]
    RowParse {
        line: usize,
        column: &'static str,
        message: String,
    },
    #[error("input has a header but no data rows")]
    EmptyFile,
    #[error("smoothing weight must lie in (0, 1], got {alpha}")]
    InvalidAlpha { alpha: f64 },
    #[error("series is empty")]
    EmptySeries,
    #[error("series too short: need more than {needed} values, got {got}")]
    SeriesTooShort { needed: usize, got: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("invalid periods: fast {fast} must be positive and less than slow {slow}")]
    InvalidPeriods { fast: usize, slow: usize },
    #[error("prediction horizon must be at least 1")]
    InvalidHorizon,
    #[error("no dataset rows remain after warm-up and horizon trimming")]
    EmptyDataset,
    #[error("invalid synthetic spec: {0}")]
    InvalidSpec(String),
}

/// Errors raised while fitting or applying classifiers.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("cannot compute impurity of an empty node")]
    EmptyNode,
    #[error("training set is empty")]
    EmptyTrainingSet,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("model has no trained state")]
    UntrainedModel,
    #[error("feature count mismatch: model expects {expected}, row has {got}")]
    FeatureCountMismatch { expected: usize, got: usize },
    #[error("no row is out-of-bag for any tree; grow the forest")]
    NoOobCoverage,
    #[error("training data contains a single class")]
    SingleClassData,
    #[error("too few samples per class: need at least {needed}, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("covariance matrix is not positive definite")]
    DegenerateCovariance,
}

/// Errors raised by the evaluation protocol and report rendering.
#[derive(Debug, Error)]
pub enum EvalError {
    #[error("train fraction must lie strictly between 0 and 1, got {0}")]
    InvalidFraction(f64),
    #[error("split leaves an empty side: n = {n}, fraction = {fraction}")]
    SplitTooSmall { n: usize, fraction: f64 },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("empty input")]
    Empty,
    #[error("labels contain a single class")]
    SingleClassLabels,
    #[error("need at least {needed} points per class, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("unsupported output format: {0}")]
    UnsupportedFormat(String),
}

/// Errors raised while encoding or decoding model documents.
#[derive(Debug, Error)]
pub enum PersistError {
    #[error("unsupported schema version {found}; this build reads version {expected}")]
    VersionMismatch { found: u64, expected: u32 },
    #[error("model document malformed: {0}")]
    Json(#[from] serde_json::Error),
    #[error("model document invalid: {0}")]
    Invalid(String),
}

/// Crate-wide error, wrapping the stage-specific kinds.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Data(#[from] DataError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Persist(#[from] PersistError),
}

pub type Result<T> = std::result::Result<T, Error>;
