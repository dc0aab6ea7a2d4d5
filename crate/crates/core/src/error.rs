//! Error type shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("axis systems differ: {left} vs {right}")]
    AxisMismatch { left: String, right: String },

    #[error("unknown axis `{0}`")]
    UnknownAxis(String),

    #[error("duplicate axis `{0}`")]
    DuplicateAxis(String),

    #[error("degree has arity {found}, expected {expected}")]
    Arity { expected: usize, found: usize },

    #[error("generator at degree ({degree}) is even and no bounded axis truncates its powers")]
    Divergent { degree: String },

    #[error("invalid truncation window: {0}")]
    InvalidWindow(String),

    #[error("missing table: {0}")]
    MissingTable(String),

    #[error("Serre duality fails at (p,q,m)=({p},{q},{m}): {left} vs {right}")]
    DualityViolation { p: i64, q: i64, m: i64, left: String, right: String },

    #[error("table entry outside the Hodge box at (p,q)=({p},{q}) in {table}")]
    OutsideBox { p: i64, q: i64, table: String },

    #[error("omega tables are not {order}-periodic at m={m}")]
    Periodicity { order: usize, m: i64 },

    #[error("invalid variety data: {0}")]
    InvalidVariety(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("weight {0} is not dominant")]
    NonDominant(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("size guard `{what}` exceeded: {value} > {limit}")]
    SizeGuard { what: &'static str, value: u128, limit: u128 },

    #[error("signed trace sum {sum} at degree ({degree}) is not divisible by group order {order}")]
    NonIntegralAverage { degree: String, sum: String, order: usize },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
