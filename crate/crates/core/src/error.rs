use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown element name `{0}`")]
    UnknownName(String),
    #[error("element is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("element does not lie in g_0")]
    NotInG0,
    #[error("invalid module coordinates: {0}")]
    InvalidModule(String),
    #[error("morphism not defined: {0}")]
    InvalidMorphism(String),
    #[error("composition of adjacent maps is nonzero at {0}")]
    NonzeroComposition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
