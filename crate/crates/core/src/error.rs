use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed alist input. `line` is 1-based.
    #[error("alist line {line}: {msg}")]
    Alist { line: usize, msg: String },

    #[error("circulant shift {shift} at block ({row}, {col}) is outside [0, {p})")]
    ShiftOutOfRange {
        row: usize,
        col: usize,
        shift: usize,
        p: usize,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph has girth 4; expansion requires girth > 4")]
    UnsupportedGirth,

    #[error("trapping-set store exceeded its cap of {cap} sets")]
    StoreOverflow { cap: usize },

    #[error("enumeration budget of {budget} subsets exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{0}")]
    NotApplicable(String),
}
