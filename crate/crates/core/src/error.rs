use alloc::string::String;
use core::fmt;

use crate::Letter;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    EmptyWord,
    EmptyFactor,
    LetterOutOfRange { letter: Letter, alphabet_size: usize },
    AlphabetTooLarge(usize),
    InsufficientOccurrences { found: usize },
    InvalidContinuedFraction(String),
    MOutOfRange { m: u64, limit: u64 },
    IndexOutOfRange(String),
    NonConstantGap { letter: Letter, first: usize, second: usize },
    NotBinary { letter: Letter },
    AlphabetsNotDisjoint,
    UnclassifiedLetter(Letter),
    UnknownLetter(String),
    UnknownPreset(String),
    DeltaTooSmall(usize),
    UnsupportedShape(String),
    Parse(String),
    InvalidTolerance,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyWord => write!(f, "empty word has no period"),
            Error::InvalidTolerance => write!(f, "tolerance must be positive"),
            Error::EmptyFactor => write!(f, "factor must be non-empty"),
            Error::LetterOutOfRange { letter, alphabet_size } => {
                write!(f, "letter {letter} outside alphabet of size {alphabet_size}")
            }
            Error::AlphabetTooLarge(n) => write!(f, "alphabet of {n} letters exceeds 256"),
            Error::InsufficientOccurrences { found } => {
                write!(f, "insufficient occurrences: need 2, found {found}")
            }
            Error::InvalidContinuedFraction(msg) => write!(f, "invalid continued fraction: {msg}"),
            Error::MOutOfRange { m, limit } => {
                write!(f, "m out of range: m = {m} but a_(N+1) = {limit}")
            }
            Error::IndexOutOfRange(msg) => write!(f, "index out of range: {msg}"),
            Error::NonConstantGap { letter, first, second } => {
                write!(f, "letter {letter} is not at constant gap: distances {first} and {second}")
            }
            Error::NotBinary { letter } => write!(f, "word is not binary: letter {letter}"),
            Error::AlphabetsNotDisjoint => write!(f, "alphabets of y and y' must be disjoint"),
            Error::UnclassifiedLetter(l) => write!(f, "letter {l} is in neither colour alphabet"),
            Error::UnknownLetter(name) => write!(f, "unknown letter {name:?}"),
            Error::UnknownPreset(name) => write!(f, "unknown preset {name:?}"),
            Error::DeltaTooSmall(d) => write!(f, "x2delta needs delta >= 6, got {d}"),
            Error::UnsupportedShape(msg) => write!(f, "unsupported spec shape: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
