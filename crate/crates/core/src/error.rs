use thiserror::Error;

/// Errors raised when constructing or combining values.
///
/// Axiom violations found by the checkers are data (see [`crate::fincat::AxiomReport`]),
/// not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition mismatch: {0}")]
    Composition(String),

    #[error("invalid ordinal map: {0}")]
    InvalidOrdinalMap(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid object: {0}")]
    InvalidObject(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("index {index} out of range (len {len})")]
    OutOfRange { index: usize, len: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
