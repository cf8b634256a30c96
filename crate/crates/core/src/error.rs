use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported base: {0}")]
    UnsupportedBase(String),
    #[error("no root by case {0}")]
    NoRootByCase(String),
    #[error("not found within bounds: {0}")]
    NotFoundWithinBounds(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
