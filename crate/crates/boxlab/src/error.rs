//! Crate-wide error type.

use thiserror::Error;

use crate::boxes::{AliceSetting, BobSetting};

#[derive(Debug, Error)]
pub enum Error {
    /// A table entry is negative.
    #[error("box block ({x},{y}) has negative entry p({i},{j}) = {value}")]
    NegativeEntry {
        x: AliceSetting,
        y: BobSetting,
        i: i8,
        j: i8,
        value: f64,
    },

    /// A setting-pair block does not sum to one within tolerance.
    #[error("box block ({x},{y}) sums to {total}, not 1")]
    BlockNotNormalized {
        x: AliceSetting,
        y: BobSetting,
        total: f64,
    },

    /// A parameter is outside its admissible interval.
    #[error("{name} = {value} outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// An outcome assignment other than +1 / -1.
    #[error("{name} = {value} is not an outcome (expected +1 or -1)")]
    NotAnOutcome { name: &'static str, value: i64 },

    /// A count parameter that must be at least one.
    #[error("{name} must be >= 1")]
    ZeroCount { name: &'static str },

    /// Exact computation requested beyond the configured pair cap.
    #[error("{n_pairs} pairs exceeds the cap of {cap} for {what}")]
    PairCapExceeded {
        what: &'static str,
        n_pairs: usize,
        cap: usize,
    },

    /// Malformed box JSON.
    #[error("box JSON parse error at line {line}, column {column}: {message}")]
    BoxJson {
        line: usize,
        column: usize,
        message: String,
    },
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::BoxJson {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
