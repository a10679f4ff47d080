use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ground size mismatch: {left} vs {right}")]
    GroundSizeMismatch { left: usize, right: usize },

    #[error("subset mask {mask:#x} out of range for ground size {ground}")]
    MaskOutOfRange { mask: u64, ground: usize },

    #[error("ground size {requested} exceeds the cap of {cap} for {what}")]
    GroundTooLarge {
        requested: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("enumeration budget exceeded for {what}: {required} points > bound {bound}")]
    BudgetExceeded {
        what: String,
        required: u128,
        bound: u64,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("quotient sets have mismatched k: {left} vs {right}")]
    KMismatch { left: usize, right: usize },

    #[error("quotient set is empty")]
    EmptySet,
}

pub type Result<T> = std::result::Result<T, Error>;
