use thiserror::Error;

/// Errors raised at the boundaries of the library: parsing, validation
/// against a dimension, and census limits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension must be at least 1, got {0}")]
    InvalidDimension(u32),

    #[error("element ({row},{col}) is out of range for B_{n}: indices must lie in 1..={n}")]
    IndexOutOfRange { row: u32, col: u32, n: u32 },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("empty term")]
    EmptyTerm,

    #[error(
        "brute-force census refused for n = {n} (cap is {cap}); use symbolic mode or raise the cap"
    )]
    BruteCapExceeded { n: u32, cap: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
