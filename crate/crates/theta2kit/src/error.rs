use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] theta2kit_core::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("cannot parse object spec {spec:?}: {reason}")]
    Spec { spec: String, reason: String },
    #[error("{which} hash mismatch: map pins {expected}, document hashes to {found}")]
    HashMismatch {
        which: &'static str,
        expected: String,
        found: String,
    },
}

impl Error {
    /// Process exit code: 3 for exhausted resources, 2 for everything the
    /// caller can fix by changing the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Core(theta2kit_core::Error::ResourceLimit(_)) => 3,
            _ => 2,
        }
    }
}
