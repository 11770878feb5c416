use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {degree} exceeds the truncation bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("undefined product of units: {0}")]
    UnitProduct(&'static str),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with a degree-bound error when `degree > bound`.
pub fn check_bound(degree: usize, bound: usize) -> Result<()> {
    if degree > bound {
        Err(Error::DegreeBound { degree, bound })
    } else {
        Ok(())
    }
}
