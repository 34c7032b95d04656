use core::fmt;

use crate::freealg::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An index outside `1..=n`.
    IndexOutOfRange { index: usize, n: usize },
    /// A tuple whose length does not match what the operation needs.
    TupleLength { expected: usize, got: usize },
    /// Row and column index sets of different sizes, or empty.
    MismatchedIndexSets { rows: usize, cols: usize },
    /// An index set that is not strictly increasing.
    NotIncreasing,
    /// A rule right-hand side contains a word not below its left-hand side.
    OrderViolation { lhs: Word, offending: Word },
    /// Two rules with the same left-hand side.
    DuplicateRule(Word),
    /// A map defined on the irreducible basis was given a reducible word.
    Reducible(Word),
    /// The coaction is only implemented up to degree `n`.
    UnsupportedDegree { degree: usize, n: usize },
    /// `n` below the supported minimum of 2.
    SizeTooSmall(usize),
    /// No witness was found among the searched candidates.
    ExhaustedSearch { n: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { index, n } => {
                write!(f, "index {index} out of range 1..={n}")
            }
            Error::TupleLength { expected, got } => {
                write!(f, "expected a tuple of length {expected}, got {got}")
            }
            Error::MismatchedIndexSets { rows, cols } => {
                write!(f, "row set of size {rows} does not match column set of size {cols}")
            }
            Error::NotIncreasing => f.write_str("index set must be strictly increasing"),
            Error::OrderViolation { lhs, offending } => write!(
                f,
                "rule for {lhs} is not order-decreasing: right side contains {offending}"
            ),
            Error::DuplicateRule(w) => write!(f, "duplicate rule for {w}"),
            Error::Reducible(w) => write!(f, "{w} is reducible; expected a basis word"),
            Error::UnsupportedDegree { degree, n } => {
                write!(f, "degree {degree} exceeds the supported bound n = {n}")
            }
            Error::SizeTooSmall(n) => write!(f, "n must be at least 2, got {n}"),
            Error::ExhaustedSearch { n } => {
                write!(f, "no witness found among generator pairs for n = {n}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
