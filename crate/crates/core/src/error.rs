use thiserror::Error;

/// Errors raised by the workbench. Each variant maps onto one CLI exit class.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("weight {0} is not dominant integral")]
    NotDominant(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("window not closed; missing weights: {}", .0.join(", "))]
    Window(Vec<String>),
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cocycle is a coboundary; the extension splits")]
    TrivialExtension,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
