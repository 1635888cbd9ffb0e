use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("non-integral result while {context}")]
    Integrality { context: String },

    #[error("plethysm is undefined: the inner argument has a degree-0 component")]
    PlethysmConstantTerm,

    #[error("remainder is not antipalindromic at t^{exponent} (d = {degree})")]
    NotAntipalindromic { degree: i32, exponent: i32 },

    #[error("remainder has support t^{exponent} outside [0, {degree}]")]
    RemainderOutOfRange { degree: i32, exponent: i32 },

    #[error("{what} limit exceeded: {value} > {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("{0:?} is not a flat")]
    NotAFlat(Vec<usize>),

    #[error("malformed shape: {0}")]
    MalformedShape(String),

    #[error("unsupported arguments: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
