use alloc::string::String;
use core::fmt;

/// Errors reported by the learning and planning primitives.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Mismatched vector or matrix dimensions.
    DimensionMismatch { expected: usize, got: usize },
    /// A precondition on an input value failed.
    InvalidInput(String),
    /// A numerical guarantee was violated (non-finite values, loss of
    /// positive-definiteness, variance below the roundoff floor).
    Numeric(String),
    /// The trajectory optimizer found no sequence with a finite objective.
    Infeasible(String),
    /// A campaign record is too short for the requested verification.
    InsufficientEpisodes { needed: usize, got: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Numeric(msg) => write!(f, "numeric error: {msg}"),
            Error::Infeasible(msg) => write!(f, "infeasible: {msg}"),
            Error::InsufficientEpisodes { needed, got } => {
                write!(f, "insufficient episodes: needed {needed}, campaign has {got}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
