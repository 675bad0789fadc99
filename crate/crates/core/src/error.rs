use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("evaluation point must be >= 0, got {0}")]
    NegativeAbscissa(f64),
    #[error("operator index n must be >= 1")]
    ZeroOperatorIndex,
    #[error("difference order {order} needs at least {} samples, got {available}", order + 1)]
    DifferenceOrderTooHigh { order: usize, available: usize },
    #[error("truncation N = {truncation} needs samples f_0..f_N, only {available} available")]
    InsufficientSamples { truncation: usize, available: usize },
    #[error("QI order r = {order} exceeds truncation N = {truncation}")]
    OrderExceedsTruncation { order: usize, truncation: usize },
    #[error("coefficient table for n = {table_n} used with n = {config_n}")]
    MismatchedTable { table_n: u32, config_n: u32 },
    #[error("coefficient table covers r <= {available}, order {requested} requested")]
    TableTooShort { requested: usize, available: usize },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("malformed sample data: {0}")]
    MalformedSamples(String),
}

pub type Result<T> = std::result::Result<T, Error>;
