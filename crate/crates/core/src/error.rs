use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term")]
    ZeroConstantTerm,

    #[error("coefficient index {index} outside truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("{0} is not a supported prime power")]
    NotPrimePower(u32),

    #[error("polynomial has zero constant term")]
    ZeroConstantPolynomial,

    #[error("parameters out of range: {0}")]
    OutOfRange(String),

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("{what} is not an integer: {value}")]
    NonIntegral { what: String, value: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("parity mismatch: {0}")]
    ParityMismatch(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("closure stalled at {reached} elements, expected {target}")]
    ClosureStalled { reached: usize, target: usize },

    #[error("matrix does not preserve the form")]
    NotInGroup,

    #[error("invalid coset selector for {0}")]
    InvalidCoset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
