use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A prefix did not come from a series with the requested numerator bound.
    #[error("prefix is not the expansion of a series with numerator degree <= {lambda_bound}: coefficient {index} of the refitted numerator is {value}")]
    Consistency {
        lambda_bound: usize,
        index: usize,
        value: BigInt,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("enumeration budget of {budget} faces exceeded")]
    BudgetExceeded { budget: usize },

    #[error("not an f-vector: {0}")]
    NotAnFVector(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
