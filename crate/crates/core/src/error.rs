use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: {0}")]
    Pole(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cutoff {cutoff} too small, need at least {needed}")]
    CutoffTooSmall { cutoff: i64, needed: i64 },
    #[error("group of order {order} exceeds the bound {bound}")]
    GroupTooLarge { order: u64, bound: u64 },
    #[error("infinite product ratio does not terminate: {0}")]
    NonTerminating(String),
    #[error("not expressible in the P basis, leftover exponent {0:?}")]
    NotExpressible(Vec<i64>),
    #[error("input is not symmetric")]
    NotSymmetric,
    #[error("chain rejected: {0}")]
    RejectedChain(String),
}

impl Error {
    /// Errors caused by a size or cutoff limit rather than by bad input.
    pub fn is_resource_bound(&self) -> bool {
        matches!(self, Error::CutoffTooSmall { .. } | Error::GroupTooLarge { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
