use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid group: {0}")]
    Group(String),
    #[error("invalid quiver: {0}")]
    Quiver(String),
    #[error("relation is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("invalid Hopf algebra: {0}")]
    Hopf(String),
    #[error("invalid action: {0}")]
    Action(String),
    #[error("invalid module: {0}")]
    Module(String),
    #[error("invalid dg algebra: {0}")]
    Dg(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("degree {0} is beyond the computed bound {1}")]
    OutOfRange(usize, usize),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("lifting system is inconsistent: {0}")]
    Lifting(String),
    #[error("superpotential: {0}")]
    Superpotential(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("format: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
