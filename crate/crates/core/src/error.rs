use core::fmt;

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    EmptyDigraph,
    Loop(usize),
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    NotStronglyConnected,
    Unreachable {
        from: usize,
        to: usize,
    },
    /// The colouring does not belong to the digraph it was checked against.
    SizeMismatch {
        expected: usize,
        found: usize,
    },
    ColourOutOfRange {
        colour: u32,
        palette: usize,
    },
    /// Masks are 64 bits wide; larger palettes are not supported.
    PaletteTooLarge(usize),
    OracleGuard {
        elements: usize,
        limit: usize,
    },
    InvalidParameter(String),
    NotACycleSubdigraph,
    NotATournament,
    SearchBudgetExhausted(String),
    /// A witness failed re-verification. Always a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyDigraph => write!(f, "digraph must have at least one vertex"),
            Error::Loop(u) => write!(f, "loop at vertex {u}"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            Error::NotStronglyConnected => write!(f, "digraph is not strongly connected"),
            Error::Unreachable { from, to } => write!(f, "vertex {to} unreachable from {from}"),
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            Error::ColourOutOfRange { colour, palette } => {
                write!(f, "colour {colour} outside palette of {palette}")
            }
            Error::PaletteTooLarge(k) => write!(f, "palette of {k} colours exceeds 64"),
            Error::OracleGuard { elements, limit } => {
                write!(f, "oracle guard: {elements} elements exceeds limit {limit}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NotACycleSubdigraph => {
                write!(
                    f,
                    "not a spanning strongly connected subdigraph of a bioriented cycle"
                )
            }
            Error::NotATournament => write!(f, "not a tournament"),
            Error::SearchBudgetExhausted(msg) => write!(f, "search budget exhausted: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
