use alloc::string::String;

/// Errors raised by the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("only odd primes are supported, got {0}")]
    EvenPrime(u32),
    #[error("point index {index} out of range for a space of {size} points")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("values over different primes: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("dimension {n} gives a space too large to tabulate for p = {p}")]
    SpaceTooLarge { p: u32, n: u32 },
    #[error("invalid function table: {0}")]
    InvalidTable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("f(0) = {0}, but this analysis requires f(0) = 0")]
    NonzeroAtOrigin(u32),
    #[error("function is not even: f({witness}) != f(-{witness}) (point indices)")]
    NotEven { witness: usize },
    #[error("number of variables n = {0} is odd, but an even n is required")]
    OddDimension(u32),
    #[error("function is not bent (witness point index {witness})")]
    NotBent { witness: usize },
    #[error("function is not of feasible Latin or negative Latin square type")]
    NotFeasible,
    #[error("level sets do not form an association scheme")]
    NotAScheme,
    #[error("fusion enumeration refused for p = {0} (limit is 7)")]
    FusionRefused(u32),
    #[error("invalid row partition: {0}")]
    InvalidPartition(String),
    #[error("invalid orthogonal array: {0}")]
    InvalidArray(String),
    #[error("index {index} out of range 1..={max}")]
    ClassOutOfRange { index: usize, max: usize },
    #[error("independent methods disagree: {0}")]
    Inconsistency(String),
}

pub type Result<T> = core::result::Result<T, Error>;
