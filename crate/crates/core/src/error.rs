use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("bond between a generator and itself ({0})")]
    SelfBond(usize),
    #[error("bond ({0}, {1}) declared more than once")]
    DuplicatePair(usize, usize),
    #[error("bond strength {0} is below 2")]
    BondTooSmall(u32),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown system family `{0}`")]
    UnknownFamily(String),
    #[error("unknown generator label `{0}`")]
    UnknownGenerator(String),
    #[error("field order must be at least 2, got {0}")]
    FieldOrder(u64),
    #[error("bond strength {bond} is not representable in the field of order {order}")]
    BondNotInField { bond: u32, order: u64 },
    #[error("{what} exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
