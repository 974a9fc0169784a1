use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported prime {0}: expected an odd prime")]
    UnsupportedPrime(u64),

    #[error("ring context mismatch: conductor {left} vs {right}")]
    ContextMismatch { left: u64, right: u64 },

    #[error("element is not integral (p-denominator p^{0})")]
    NotIntegral(u32),

    #[error("element is not invertible in K_p")]
    NotInvertible,

    #[error("value {value} out of range: {what}")]
    OutOfRange { what: &'static str, value: i64 },

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("strand cap exceeded: color {color} needs {needed} boundary points, cap is {cap}")]
    CapExceeded {
        color: usize,
        needed: usize,
        cap: usize,
    },

    #[error("coefficient overflow during skein contraction")]
    Overflow,

    #[error("omega validation failed: {0}")]
    OmegaValidation(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid lagrangian: {0}")]
    InvalidLagrangian(String),

    #[error("gluing mismatch: {0}")]
    GluingMismatch(String),

    #[error("word does not realize the monodromy: {0}")]
    WordMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported cover family: {0}")]
    UnsupportedCover(String),

    #[error("i/o: {0}")]
    Io(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
