use thiserror::Error;

use crate::stream::StreamModel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A stream update violates the stream invariants. `position` is 1-based.
    #[error("malformed update at position {position}: {reason}")]
    MalformedUpdate { position: usize, reason: String },

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("ledger underflow: releasing {requested} words with only {current} retained")]
    LedgerUnderflow { current: u64, requested: u64 },

    #[error("element {element} is outside the universe [0, {universe})")]
    OutOfUniverse { element: u64, universe: u64 },

    #[error("{algorithm} requires a {expected} stream, got {actual}")]
    ModelMismatch {
        algorithm: &'static str,
        expected: StreamModel,
        actual: StreamModel,
    },

    /// Exact oracles refuse instances beyond their configured desk bound.
    #[error("{oracle} refuses instance of size {size} (desk bound {limit})")]
    DeskBound {
        oracle: &'static str,
        size: u64,
        limit: u64,
    },

    #[error("edge budget overflows for k={k}: {detail}")]
    BudgetOverflow { k: u64, detail: String },

    /// The sketch could not decode although the exact net counter says it should.
    #[error("sparse recovery failed with net count {net} <= capacity {capacity}")]
    SketchContradiction { net: i64, capacity: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
