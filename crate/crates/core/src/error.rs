use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("ideal is not squarefree")]
    NonSquarefree,

    #[error("zero ideal")]
    ZeroIdeal,

    #[error("unit ideal")]
    UnitIdeal,

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u64,
        cap: u64,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn cap(what: &'static str, size: impl TryInto<u64>, cap: impl TryInto<u64>) -> Self {
        Error::CapExceeded {
            what,
            size: size.try_into().unwrap_or(u64::MAX),
            cap: cap.try_into().unwrap_or(u64::MAX),
        }
    }
}
