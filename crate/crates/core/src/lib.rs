//! Stock trend classification over daily OHLCV bars.
//!
//! The pipeline: parse and validate a price series, exponentially smooth the
//! close column, derive six technical indicators (RSI, stochastic %K,
//! Williams %R, MACD histogram, price rate of change, on-balance volume),
//! label each row with the sign of the close change `d` trading rows ahead,
//! train a bagged CART random forest on the indicator matrix, and evaluate it
//! (out-of-bag error, accuracy, ROC/AUC) against logistic regression,
//! Gaussian/quadratic discriminant analysis, and a linear SVM.
//!
//! Everything is deterministic: all randomness flows from a single 64-bit
//! seed through [`rng::SplitMix64`] substreams, so identical inputs produce
//! byte-identical models and reports.

pub mod baselines;
pub mod error;
pub mod evaluation;
pub mod forest;
pub mod indicators;
pub mod linalg;
pub mod market_data;
pub mod model_io;
pub mod rng;

pub use error::{DataError, Error, EvalError, ModelError, PersistError, Result};
pub use indicators::{Dataset, IndicatorParams, IndicatorVector, LabelPolicy, FEATURE_NAMES};
pub use market_data::{OhlcvBar, OhlcvSeries, SmoothedSeries, ValidationReport};
pub use forest::{ForestParams, RandomForest};
