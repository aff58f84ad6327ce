use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{mark} is not a part of ({shape})")]
    NotAPart { shape: String, mark: usize },

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("{what}: n = {n} exceeds the enumeration guard {limit}")]
    GuardExceeded {
        what: &'static str,
        n: u64,
        limit: u64,
    },

    #[error("no closed form for {0}")]
    UnsupportedPattern(String),

    #[error("expected an integer but got {0}")]
    NonIntegral(String),

    #[error("element is not in Z1(n): {0}")]
    NotNearCentral(String),

    #[error("series order {order} is too small for coefficient {needed}")]
    OrderExceeded { order: usize, needed: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Domain errors are the caller's fault; guard errors are resource limits.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}
