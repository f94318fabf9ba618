use thiserror::Error;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at q = {point}: denominator {denominator} vanishes there")]
    Pole { point: String, denominator: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a braiding: {0}")]
    NotBraiding(String),

    #[error("malformed group table: {0}")]
    MalformedGroup(String),

    #[error("Yetter-Drinfeld condition violated: {0}")]
    NotYetterDrinfeld(String),
}

pub type Result<T> = std::result::Result<T, Error>;
