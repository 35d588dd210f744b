use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed edge-list or document text.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A contract violation by the caller: bad parameters, mismatched inputs.
    #[error("invalid input: {0}")]
    Input(String),

    /// The instance exceeds the configured limit of an exact procedure.
    #[error("{what}: size {size} exceeds exact-mode limit {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// A piece left by a shifting step exceeds the exact solver's limit.
    #[error("shift {shift}: piece of size {size} exceeds exact-mode limit {limit}")]
    ShiftPiece {
        shift: usize,
        size: usize,
        limit: usize,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
