use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("module is not finitely generated projective: {0}")]
    NotProjective(String),
    #[error("search space too large to enumerate ({size} > {bound})")]
    TooLargeToEnumerate { size: u128, bound: u128 },
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("axiom violated: {0}")]
    Axiom(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
