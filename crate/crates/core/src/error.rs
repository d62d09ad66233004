use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown group `{name}`; catalog entries: {known}")]
    UnknownGroup { name: String, known: String },

    #[error("group order {order} exceeds the configured bound {bound}")]
    OrderBound { order: usize, bound: usize },

    #[error("invalid multiplication table for {name}: {reason}")]
    InvalidTable { name: String, reason: String },

    #[error("factor mismatch: {0}")]
    AmbientMismatch(String),

    #[error("no catalog coverage for groups of order {order}: need {expected} isomorphism types, have {found}")]
    CatalogIncomplete { order: usize, expected: usize, found: usize },

    #[error("subgroup {0} satisfies the generator conditions but is missing from the class list")]
    GenLookup(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("thread pool: {0}")]
    ThreadPool(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
