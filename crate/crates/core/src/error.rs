use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("pile value {pile} exceeds table bound {bound}")]
    OutOfBound { pile: u32, bound: u32 },

    #[error("rank {rank} outside [0, {total})")]
    RankOutOfRange { rank: u64, total: u64 },

    #[error("expected {expected} piles, got {got}")]
    PileCount { expected: usize, got: usize },

    #[error("invalid game rule: {0}")]
    InvalidRule(String),

    #[error("no winning move exists from a P-position")]
    NoWinningMove,

    #[error("closed form only covers positions with an empty pile")]
    ClosedFormDomain,

    #[error("position is terminal, no move available")]
    Terminal,

    #[error("table needs {needed} bytes, budget is {budget} bytes")]
    Resource { needed: u128, budget: u128 },

    #[error("bound {0} is above the supported maximum of 65535")]
    BoundTooLarge(u64),

    #[error("brute force refused: {total} stones exceeds guard {guard}")]
    GuardExceeded { total: u64, guard: u64 },

    #[error("remoteness overflow at {0}")]
    RemotenessOverflow(String),

    #[error("table has no remoteness data")]
    MissingRemoteness,

    #[error("insufficient bound {bound}: cannot verify {}", missing.join("; "))]
    InsufficientBound { bound: u32, missing: Vec<String> },

    #[error("corrupt table file: {0}")]
    Corrupt(String),

    #[error("unsupported table file version {0}")]
    UnsupportedVersion(u8),

    #[error("tables do not describe the expected games: {0}")]
    TableMismatch(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
