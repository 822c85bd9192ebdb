use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("index {index} out of range (valid range {min}..={max})")]
    IndexOutOfRange { index: usize, min: usize, max: usize },
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("invalid rewriting rule: {0}")]
    InvalidRule(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("sequence {0} is not right-most and reduced")]
    NotRightmostReduced(String),
    #[error("cell is essential; the matching is undefined there")]
    EssentialCell,
    #[error("matching is not Z-compatible at {0}")]
    NotZCompatible(String),
    #[error("no stabilisation within budget of {0} steps")]
    BudgetExhausted(usize),
    #[error("chain complex is not a complex: {0}")]
    NotAComplex(String),
    #[error("Coxeter group is infinite or larger than {0} elements")]
    GroupTooLarge(usize),
    #[error("not a Garside element: {0}")]
    NotGarside(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("monoid is not finite")]
    NotFinite,
    #[error("spec file: {0}")]
    Spec(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
