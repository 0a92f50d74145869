use thiserror::Error;

use crate::rings::RingId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingId, right: RingId },

    #[error("bad encoding: {0}")]
    BadEncoding(String),

    #[error("bad shape: {0}")]
    BadShape(String),

    #[error("lambda {0} is not a unit")]
    BadLambda(String),

    #[error("self-duality condition fails: {0}")]
    NotSelfDualCondition(String),

    #[error("entry outside the ring: {0}")]
    BadRing(String),

    #[error("extension vector X has <X,X> = {0}, expected 1")]
    BadExtensionVector(String),

    #[error("extension scalar c = {0} does not satisfy c^2 = 1")]
    BadUnit(String),

    #[error("neighbor seed lies in the code")]
    NotANeighborSeed,

    #[error("neighbor seed has odd weight {0}")]
    NotSelfOrthogonal(u32),

    #[error("enumeration of 2^{k} codewords exceeds the budget 2^{budget}")]
    BudgetExceeded { k: usize, budget: usize },

    #[error("no weight-enumerator family matches: {0}")]
    UnknownEnumerator(String),

    #[error("invalid configuration: {0}")]
    BadConfig(String),

    #[error("internal error: {0}")]
    InternalError(String),
}
