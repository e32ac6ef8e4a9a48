use alloc::string::String;
use core::fmt;

/// Errors produced by the analysis pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Array text or catalog text could not be parsed.
    Parse { input: String, reason: String },
    /// An array with no entries.
    EmptyArray,
    /// The `b` and `c` halves of an array have different lengths.
    LengthMismatch { b: usize, c: usize },
    /// An entry that must be strictly positive is not.
    NonPositiveEntry { side: char, index: usize },
    /// An entry of a generalized array is zero.
    ZeroEntry { side: char, index: usize },
    /// An operation was called outside its domain (wrong diameter, bad index set, ...).
    Precondition(String),
    /// Two independent computation routes disagree beyond tolerance.
    Consistency { what: String, deviation: f64, bound: f64 },
    /// Root isolation could not separate the eigenvalues.
    RootIsolation(String),
    /// A generalized array whose matrix has non-real eigenvalues.
    NonRealEigenvalues { max_imaginary: f64 },
    /// Unknown catalog entry or graph name.
    UnknownName(String),
    /// A graph that cannot be analysed (disconnected, not distance-regular, too large).
    Graph(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse { input: input.into(), reason: reason.into() }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn consistency(what: impl Into<String>, deviation: f64, bound: f64) -> Self {
        Error::Consistency { what: what.into(), deviation, bound }
    }

    /// True for errors caused by malformed user input rather than numerical trouble.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::EmptyArray
                | Error::LengthMismatch { .. }
                | Error::NonPositiveEntry { .. }
                | Error::ZeroEntry { .. }
                | Error::UnknownName(_)
                | Error::Precondition(_)
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { input, reason } => write!(f, "cannot parse {input:?}: {reason}"),
            Error::EmptyArray => f.write_str("intersection array is empty (diameter 0)"),
            Error::LengthMismatch { b, c } => {
                write!(f, "array halves differ in length: {b} b-entries, {c} c-entries")
            }
            Error::NonPositiveEntry { side, index } => {
                write!(f, "entry {side}{index} must be positive (use a generalized array for signed entries)")
            }
            Error::ZeroEntry { side, index } => write!(f, "entry {side}{index} is zero"),
            Error::Precondition(msg) => f.write_str(msg),
            Error::Consistency { what, deviation, bound } => {
                write!(f, "internal consistency failure in {what}: deviation {deviation:e} exceeds {bound:e}")
            }
            Error::RootIsolation(msg) => write!(f, "root isolation failed: {msg}"),
            Error::NonRealEigenvalues { max_imaginary } => {
                write!(f, "array has non-real eigenvalues (|Im| up to {max_imaginary:e})")
            }
            Error::UnknownName(name) => write!(f, "unknown name {name:?}"),
            Error::Graph(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
