use thiserror::Error;

use crate::poly::Variable;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rational intermediate that must be an integer was not.
    #[error("non-integral value {value} in {context}")]
    NonIntegral {
        context: &'static str,
        value: String,
    },

    #[error("no value assigned to variable {0}")]
    MissingVariable(Variable),

    #[error("sequence has {len} terms but index {index} was requested")]
    SequenceTooShort { index: usize, len: usize },

    #[error("need at least {needed} cumulants, got {len}")]
    CumulantsTooShort { needed: usize, len: usize },

    #[error("exponential of a series with nonzero constant term")]
    NonzeroConstantTerm,

    #[error("coefficient {requested} requested from a series truncated at order {order}")]
    OrderExceeded { requested: usize, order: usize },

    #[error("cannot differentiate a series of order 0")]
    ZeroOrder,

    #[error("generating function {family} requires parameter `{param}`")]
    MissingParameter {
        family: &'static str,
        param: &'static str,
    },

    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
