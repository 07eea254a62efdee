use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("infinite ring: {0} cannot be enumerated")]
    InfiniteRing(String),

    #[error("ring {ring} has {required} elements, above the budget of {budget}")]
    BudgetExceeded {
        ring: String,
        required: String,
        budget: usize,
    },

    #[error("element {element} does not belong to {ring}")]
    NotAnElement { element: String, ring: String },

    #[error("matrix is not full: entries generate the ideal ({gcd}), not the whole ring")]
    NotFull { gcd: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("classification invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
