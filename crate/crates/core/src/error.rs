use thiserror::Error;

use crate::linquot::LinQuotFailure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is neither 0 nor a prime")]
    InvalidCharacteristic(u64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("at most {max} variables are supported, got {found}")]
    TooManyVariables { max: usize, found: usize },
    #[error("variable index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("empty variable set")]
    EmptyVarSet,
    #[error("not a permutation of 1..={n}")]
    InvalidPermutation { n: usize },
    #[error("index {index} is not a member of {set}")]
    NotAMember { index: usize, set: String },
    #[error("subset sizes differ: {left} vs {right}")]
    SubsetSizeMismatch { left: usize, right: usize },
    #[error("homological degree p={p} out of range for n={n}")]
    DegreeOutOfRange { n: usize, p: usize },
    #[error("instance too large: {what} has size {size}, cap is {cap}")]
    InstanceTooLarge { what: &'static str, size: usize, cap: usize },
    #[error("{0} is not a cycle")]
    NotACycle(String),
    #[error("chain is not multihomogeneous")]
    NotHomogeneous,
    #[error("generator {0} has degree below two")]
    DegreeTooLow(String),
    #[error("expected {expected} variables, found {found}")]
    WrongVariableCount { expected: usize, found: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition {0} is redundant given the others")]
    RedundantPartition(String),
    #[error("symmetric inclusion path and partition path disagree at p={p}")]
    PathDisagreement { p: usize },
    #[error("linear-quotient hypothesis failed: {0}")]
    Hypothesis(LinQuotFailure),
    #[error("generator order is not degree-increasing")]
    NotDegreeIncreasing,
    #[error("decomposition function is not regular")]
    NotRegular,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
