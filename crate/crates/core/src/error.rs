use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be greater than 1, got {0}")]
    InvalidModulus(u32),

    #[error("term {value} at index {index} is out of range for modulus {modulus}")]
    TermOutOfRange { index: usize, value: u32, modulus: u32 },

    #[error("sequence must have at least one term")]
    EmptySequence,

    #[error("window length must be at least {min}, got {got}")]
    WindowTooShort { min: usize, got: usize },

    #[error("moduli differ: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("input precondition failed: {0}")]
    Precondition(String),

    #[error("enumeration of {requested} tuples exceeds the limit of {limit}")]
    ResourceGuard { requested: u128, limit: u128 },

    #[error("no perfect matching avoids the forbidden edges (blocked at {blocking:?})")]
    MatchingInfeasible { blocking: (u32, u32) },

    #[error("no Eulerian completion exists: {0}")]
    NoCircuit(String),

    #[error("no valid insertion position for symbol {symbol}")]
    NoValidInsertion { symbol: u32 },

    #[error("certification failed for {stage}: {detail}")]
    Certification { stage: String, detail: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
