use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TwistError {
    #[error("unknown generator `{0}` for presentation `{1}`")]
    UnknownGenerator(String, String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("zero generator: {0}")]
    ZeroGenerator(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("presentation mismatch: {0}")]
    Mismatch(String),
    #[error("series does not terminate under the truncation policy: {0}")]
    NonTerminating(String),
    #[error("missing table entry: {0}")]
    MissingEntry(String),
    #[error("divergent limit in {entry}: {terms}")]
    DivergentLimit { entry: String, terms: String },
    #[error("positive powers of a mass parameter survive: {0}")]
    PositiveMassPower(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("registry: {0}")]
    Registry(String),
}

pub type Result<T> = std::result::Result<T, TwistError>;
