use thiserror::Error;

use crate::regex::Symbol;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("symbol '{0}' is not in the alphabet")]
    SymbolNotInAlphabet(Symbol),
    #[error("alphabet must not be empty")]
    EmptyAlphabet,
    #[error("'{0}' cannot be used as an alphabet symbol")]
    InvalidSymbol(char),
    #[error("length bound {requested} exceeds the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("construction does not support operator '{0}'")]
    UnsupportedOperator(char),
    #[error("malformed automaton: {0}")]
    Schema(String),
    #[error("automata have different alphabets")]
    AlphabetMismatch,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
