use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("invalid shortcut: {0}")]
    InvalidShortcut(String),

    #[error("edges {0:?} and {1:?} do not form a crossing pair")]
    NotCrossing(crate::graph::Edge, crate::graph::Edge),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("size guard exceeded: n = {n} but {what} requires n <= {max}")]
    GuardExceeded {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error(
        "expansion failure: set {set:?} has {outside} outside neighbors, needs at least {required}"
    )]
    ExpansionFailure {
        set: Vec<usize>,
        outside: usize,
        required: usize,
    },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
