use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument must be a positive integer, got {0}")]
    NonPositive(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("partition sizes differ: |{lambda}| vs |{mu}|")]
    SizeMismatch { lambda: String, mu: String },
    #[error("shape {shape} exceeds the tableau enumeration bound {bound}")]
    OracleBound { shape: String, bound: usize },
    #[error("series has nonzero constant term")]
    NonzeroConstant,
    #[error("series has no unit linear term p[1]")]
    NotInvertible,
    #[error("series truncated at degree {have}, need degree {need}")]
    Truncation { have: usize, need: usize },
    #[error("duplicate factor part value {0}")]
    DuplicateFactor(u64),
    #[error("foulkes index r={r} out of range 1..={n}")]
    FoulkesRange { n: u64, r: u64 },
    #[error("unknown identity id '{0}'")]
    UnknownIdentity(String),
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("malformed set descriptor '{0}'")]
    BadSet(String),
    #[error("malformed partition '{0}'")]
    BadPartition(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("degree {requested} exceeds compute budget {budget}")]
    Budget { requested: usize, budget: usize },
}
