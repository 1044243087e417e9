use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed partition text or an otherwise invalid argument.
    #[error("invalid input: {0}")]
    Parse(String),

    /// An argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// The requested computation exceeds the configured work ceiling.
    #[error("resource guard: {what} needs about {estimate} units, ceiling is {ceiling}")]
    Resource {
        what: String,
        estimate: String,
        ceiling: String,
    },

    /// A value that must be exact came out inexact. Always a bug.
    #[error("internal consistency fault: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
