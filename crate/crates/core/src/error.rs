use thiserror::Error;

/// Errors raised by graph construction, pattern parsing and the search engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex capacity exceeded: {requested} vertices requested, cap is {cap}")]
    CapacityExceeded { requested: usize, cap: usize },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ResourceLimit(_) | Error::CapacityExceeded { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
