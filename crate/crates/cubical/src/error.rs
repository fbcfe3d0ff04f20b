use thiserror::Error;

/// Errors raised by constructions, validators, and the harness.
///
/// The CLI maps these to exit codes: anything here is an input or contract
/// problem (exit 2) except `Falsified`, which reports a violated law and is
/// treated like a failed check (exit 1).
#[derive(Debug, Error)]
pub enum Error {
    /// A size cap was exceeded (caps exist because downstream enumeration is
    /// exponential in the instance size).
    #[error("size cap exceeded: {0}")]
    Size(String),

    /// An operation table is malformed (ragged, out-of-range ids, or a delta
    /// entry on an incomparable pair).
    #[error("malformed structure: {0}")]
    Structure(String),

    /// A precondition of an operation was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A candidate element set is not a filter; the message names the failed
    /// invariant and a witness.
    #[error("invalid filter: {0}")]
    InvalidFilter(String),

    /// A construction that the theory guarantees to succeed did not; this is
    /// a falsification of the law named in `law`, never silently absorbed.
    #[error("falsified {law}: {detail}")]
    Falsified { law: String, detail: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn falsified(law: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Falsified {
            law: law.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
