use alloc::string::String;
use core::fmt;

use crate::words::Letter;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation that needs at least one letter got an empty word.
    EmptyWord,
    /// Pattern counting is only defined for two distinct letters.
    SameLetter(Letter),
    SplitOutOfRange {
        split: usize,
        len: usize,
    },
    /// Text that is not a valid word.
    Parse(String),
    /// The alphabet of the word is not exactly `{1, ..., n}`.
    AlphabetNotStandard,
    AlphabetMismatch {
        word: usize,
        graph: usize,
    },
    LetterNotInAlphabet(Letter),
    /// A new vertex must take the next free id.
    NotFresh {
        letter: Letter,
        expected: Letter,
    },
    VertexOutOfRange {
        vertex: u32,
        n: usize,
    },
    Loop(Letter),
    DuplicateEdge(Letter, Letter),
    GraphTooSmall {
        n: usize,
        min: usize,
    },
    NotUniform,
    NotPermutational,
    NotAnEdge(Letter, Letter),
    NotANeighbor {
        center: Letter,
        other: Letter,
    },
    Disconnected,
    NotComparability,
    BlockIndex {
        index: usize,
        blocks: usize,
    },
    CapExceeded {
        n: usize,
        cap: usize,
    },
    InvalidParameter(&'static str),
    InvalidInterval(Letter),
    DuplicateEndpoint,
    InvalidColoring(&'static str),
    /// An input word does not represent the graph it was paired with.
    InputMismatch {
        part: usize,
        violations: usize,
    },
    /// A construction produced a word that failed its own certificate.
    /// This is a bug, never an input problem.
    Internal {
        what: &'static str,
        violations: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyWord => write!(f, "empty word"),
            Error::SameLetter(x) => write!(f, "pattern counting needs two distinct letters, got {x} twice"),
            Error::SplitOutOfRange { split, len } => {
                write!(f, "split index {split} out of range for word of length {len}")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::AlphabetNotStandard => write!(f, "alphabet is not of the form {{1..n}}"),
            Error::AlphabetMismatch { word, graph } => {
                write!(f, "word alphabet has {word} letters but graph has {graph} vertices")
            }
            Error::LetterNotInAlphabet(x) => write!(f, "letter {x} does not occur in the word"),
            Error::NotFresh { letter, expected } => {
                write!(f, "new letter {letter} is not fresh, expected {expected}")
            }
            Error::VertexOutOfRange { vertex, n } => write!(f, "vertex {vertex} out of range 1..={n}"),
            Error::Loop(x) => write!(f, "loop at vertex {x}"),
            Error::DuplicateEdge(x, y) => write!(f, "duplicate edge {x} {y}"),
            Error::GraphTooSmall { n, min } => write!(f, "graph size {n} below minimum {min}"),
            Error::NotUniform => write!(f, "word is not uniform"),
            Error::NotPermutational => write!(f, "word is not a concatenation of permutations"),
            Error::NotAnEdge(x, y) => write!(f, "{x}{y} is not an edge"),
            Error::NotANeighbor { center, other } => write!(f, "{other} is not a neighbour of {center}"),
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::NotComparability => write!(f, "graph has no transitive orientation"),
            Error::BlockIndex { index, blocks } => write!(f, "block index {index} out of range ({blocks} blocks)"),
            Error::CapExceeded { n, cap } => write!(f, "graph has {n} vertices, search cap is {cap}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::InvalidInterval(v) => write!(f, "interval of vertex {v} is empty or reversed"),
            Error::DuplicateEndpoint => write!(f, "interval endpoints are not pairwise distinct"),
            Error::InvalidColoring(msg) => write!(f, "invalid coloring: {msg}"),
            Error::InputMismatch { part, violations } => {
                write!(f, "input {part} does not represent its graph ({violations} violating pairs)")
            }
            Error::Internal { what, violations } => {
                write!(f, "internal error: {what} produced a word with {violations} violating pairs")
            }
        }
    }
}

impl core::error::Error for Error {}
