use thiserror::Error;

use crate::geometry::Tie;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("points {first} and {second} coincide")]
    Duplicate { first: usize, second: usize },
    #[error("not in general position: {0}")]
    GeneralPosition(Tie),
    #[error("radius {r} out of range for {n} points (need 1 <= r <= n - 1)")]
    InvalidRadius { r: usize, n: usize },
    #[error("index {index} out of range for {n} points")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{n} points exceed the exhaustive-search limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("nearest-neighbor graph contains a cycle through vertex {0}")]
    NotAForest(usize),
    #[error("{n} points given, at least {need} required")]
    TooFewPoints { n: usize, need: usize },
    #[error("no general-position perturbation found after {attempts} attempts")]
    RetriesExhausted { attempts: u64 },
    #[error("incompatible request: {0}")]
    Incompatible(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
