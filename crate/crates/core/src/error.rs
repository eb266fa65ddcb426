use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input data (bad shape, dangling reference, bad parameter).
    Invalid(String),
    /// A search or construction exceeded its configured limit.
    ResourceLimit(String),
    /// The requested dimension bound is too small or too large.
    Bound { requested: usize, reason: &'static str },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Invalid(msg) => write!(f, "invalid input: {msg}"),
            Error::ResourceLimit(msg) => write!(f, "resource limit exceeded: {msg}"),
            Error::Bound { requested, reason } => {
                write!(f, "dimension bound {requested} rejected: {reason}")
            }
        }
    }
}

impl core::error::Error for Error {}
