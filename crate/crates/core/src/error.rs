use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("undeclared variable `{name}` at position {pos}")]
    UndeclaredVariable { name: String, pos: usize },
    #[error("ring mismatch: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("empty support")]
    EmptySupport,
    #[error("unsupported dimension {0}; polyhedral operations need 1 <= n <= 3")]
    UnsupportedDimension(usize),
    #[error("zero ideal or module")]
    ZeroInput,
    #[error("infinite colength")]
    InfiniteColength,
    #[error("infinite covolume")]
    InfiniteCovolume,
    #[error("no stabilization of truncated colength below cap {cap}")]
    NoStabilization { cap: u32 },
    #[error("containment failed: {0}")]
    Containment(String),
    #[error("not certified: {0}")]
    NotCertified(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
