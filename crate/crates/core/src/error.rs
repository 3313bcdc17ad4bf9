use std::fmt;

use thiserror::Error;

use crate::poly::VarName;
use crate::term::Term;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid variable name {0:?}")]
    InvalidVarName(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("variable {0} is not assigned")]
    Unassigned(VarName),
    #[error("variable {0} is not in the variable list")]
    MissingVariable(VarName),
    #[error("sigma has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("enumeration over {count} variables exceeds the cap of {cap}")]
    TooManyVariables { count: usize, cap: usize },
    #[error("variable list must be strictly ascending")]
    UnsortedVariables,
    #[error("invalid sigma {0:?}")]
    InvalidSigma(String),
    #[error("equation system is empty")]
    EmptySystem,
    #[error("not totally interpretable: subterm {0}")]
    NotTotallyInterpretable(Box<Term>),
    #[error("universe of {0} elements exceeds the limit of {max}", max = crate::models::MAX_UNIVERSE)]
    UniverseTooLarge(usize),
    #[error("universe mismatch: expected {expected} elements, got {got}")]
    UniverseMismatch { expected: usize, got: usize },
    #[error("subset {mask:#b} is not contained in a universe of {size} elements")]
    SubsetOutOfUniverse { mask: u32, size: usize },
}

/// A parse failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Lexical error.
    BadCharacter(char),
    Unexpected {
        found: String,
        expected: &'static str,
    },
    ZeroExponent,
    ExponentTooLarge,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::BadCharacter(c) => {
                write!(
                    f,
                    "lexical error at byte {}: unexpected character {c:?}",
                    self.offset
                )
            }
            ParseErrorKind::Unexpected { found, expected } => write!(
                f,
                "syntax error at byte {}: expected {expected}, found {found}",
                self.offset
            ),
            ParseErrorKind::ZeroExponent => {
                write!(
                    f,
                    "syntax error at byte {}: exponent must be at least 1",
                    self.offset
                )
            }
            ParseErrorKind::ExponentTooLarge => {
                write!(
                    f,
                    "syntax error at byte {}: exponent too large",
                    self.offset
                )
            }
        }
    }
}

impl std::error::Error for ParseError {}
