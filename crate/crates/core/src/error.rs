use alloc::string::String;
use core::fmt;

use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    GroundTooLarge {
        size: usize,
        max: usize,
    },
    DuplicateLabel(String),
    UnknownLabel(String),
    LabelClash(String),
    ElementOutOfRange {
        element: usize,
        size: usize,
    },
    SubsetOutOfRange(Subset),
    /// The feasible family is empty.
    Improper,
    /// Symmetric exchange fails for `(x, y, u)`: no `v` in `x Δ y` puts
    /// `x Δ {u, v}` back in the family.
    ExchangeViolation {
        x: Subset,
        y: Subset,
        u: usize,
    },
    /// Two bases of different size.
    NotEquicardinal {
        a: Subset,
        b: Subset,
    },
    /// Base exchange fails: `b1 - x + y` is not a base for any `y` in `b2 - b1`.
    BaseExchangeViolation {
        b1: Subset,
        b2: Subset,
        x: usize,
    },
    /// Deletion and contraction sets of a minor intersect.
    OverlappingMinor(Subset),
    /// The empty set is not feasible.
    NotNormal,
    NotSymmetric {
        row: usize,
        col: usize,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    Disconnected,
    MalformedRibbon(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GroundTooLarge { size, max } => {
                write!(
                    f,
                    "ground set of {size} elements exceeds the limit of {max}"
                )
            }
            Error::DuplicateLabel(l) => write!(f, "duplicate label `{l}`"),
            Error::UnknownLabel(l) => write!(f, "unknown label `{l}`"),
            Error::LabelClash(l) => write!(f, "label `{l}` occurs in both ground sets"),
            Error::ElementOutOfRange { element, size } => {
                write!(f, "element {element} outside ground set of size {size}")
            }
            Error::SubsetOutOfRange(s) => write!(f, "subset {s:?} outside the ground set"),
            Error::Improper => f.write_str("set system has no feasible sets"),
            Error::ExchangeViolation { x, y, u } => {
                write!(f, "symmetric exchange fails for X={x:?}, Y={y:?}, u={u}")
            }
            Error::NotEquicardinal { a, b } => {
                write!(f, "bases {a:?} and {b:?} have different sizes")
            }
            Error::BaseExchangeViolation { b1, b2, x } => {
                write!(f, "base exchange fails for B1={b1:?}, B2={b2:?}, x={x}")
            }
            Error::OverlappingMinor(s) => {
                write!(f, "deletion and contraction sets overlap in {s:?}")
            }
            Error::NotNormal => f.write_str("the empty set is not feasible"),
            Error::NotSymmetric { row, col } => {
                write!(f, "matrix is not symmetric at ({row}, {col})")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected dimension {expected}, found {found}")
            }
            Error::Disconnected => f.write_str("ribbon graph is not connected"),
            Error::MalformedRibbon(msg) => write!(f, "malformed ribbon graph: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
