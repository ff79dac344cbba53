use thiserror::Error;

/// Every failure the kernel can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("enumeration too large: {what} would produce {size} items (cap {cap})")]
    EnumerationTooLarge { what: String, size: u128, cap: u128 },

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("malformed code: {0}")]
    MalformedCode(String),

    #[error("index types differ: {0}")]
    IndexTypeMismatch(String),

    #[error("parse error at {line}:{col}: {msg}")]
    ParseError { line: usize, col: usize, msg: String },

    #[error("duplicate name `{0}`")]
    DuplicateName(String),

    #[error("unknown former `{0}`")]
    UnknownFormer(String),

    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("element {elem} out of range for a set of size {size}")]
    ElementOutOfRange { elem: usize, size: usize },
}

pub type Result<T, E = KernelError> = std::result::Result<T, E>;

impl KernelError {
    pub(crate) fn too_large(what: impl Into<String>, size: u128, cap: u128) -> Self {
        KernelError::EnumerationTooLarge {
            what: what.into(),
            size,
            cap,
        }
    }

    /// A parse error in a one-line argument, located at its start.
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        KernelError::ParseError { line: 1, col: 1, msg: msg.into() }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        KernelError::PreconditionViolated(msg.into())
    }
}
