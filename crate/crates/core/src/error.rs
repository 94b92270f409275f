use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("divergent: {0}")]
    Divergent(String),

    #[error("branch conflict: {0}")]
    BranchConflict(String),

    #[error("ill-conditioned: {0}")]
    IllConditioned(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("nonconvergent: {0}")]
    Nonconvergent(String),

    #[error("invalid dimension {0}")]
    InvalidDim(usize),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("engine failure in {plan}: {source}")]
    EngineFailure { plan: String, source: Box<Error> },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
