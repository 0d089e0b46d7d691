use std::fmt;

use thiserror::Error;

/// Which resource ran out during an evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Resource {
    Steps,
    Bits,
    TermSize,
}

impl fmt::Display for Resource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Resource::Steps => "step",
            Resource::Bits => "bit-length",
            Resource::TermSize => "term-size",
        })
    }
}

/// An evaluation gave up because a budget was exhausted. The verdict is unknown,
/// not false.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{resource} budget of {limit} exceeded")]
pub struct BudgetExceeded {
    pub resource: Resource,
    pub limit: u64,
}

impl BudgetExceeded {
    pub fn steps(limit: u64) -> Self {
        BudgetExceeded { resource: Resource::Steps, limit }
    }

    pub fn bits(limit: u64) -> Self {
        BudgetExceeded { resource: Resource::Bits, limit }
    }

    pub fn term_size(limit: u64) -> Self {
        BudgetExceeded { resource: Resource::TermSize, limit }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {message} (near `{token}`)")]
pub struct ParseError {
    pub offset: usize,
    pub token: String,
    pub message: String,
}

/// An operation was applied outside the set of arguments it is defined on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("chop is undefined on a worm starting with the limit ordinal {0}")]
    ChopLimit(String),
    #[error("entry {0} is transfinite; only natural-number worms are translated")]
    TransfiniteEntry(String),
    #[error("{0}")]
    Other(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
