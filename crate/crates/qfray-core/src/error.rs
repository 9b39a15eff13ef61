//! Error type shared by all core operations.

use alloc::string::String;
use core::fmt;

/// Errors produced by shape construction, parsing, and the expansion engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A token in a shape or word string did not parse as an integer or letter.
    Parse(String),
    /// Partition parts are not strictly decreasing positive integers.
    NotStrict(String),
    /// The inner partition is not contained in the outer one.
    NotNested,
    /// The requested cell set is not realizable as a shifted skew shape.
    NotRealizable,
    /// The operation requires a nonempty shape.
    EmptyShape,
    /// The operation is only defined for frayed ribbons.
    NotFrayedRibbon,
    /// The shape has the wrong number of turns for this operation.
    TurnCount { expected: u32, found: u32 },
    /// A frayed-ribbon code must have a bottom ribbon row of length at least 2.
    ShortCodeRow,
    /// Content vector does not sum to the shape size.
    ContentMismatch,
    /// A Littlewood-Richardson triple violates its preconditions.
    BadTriple(String),
    /// The target partition of a closed-form query is not strict.
    NonStrictTarget(String),
    /// Parameters outside the domain of a closed-form family.
    BadParams(String),
    /// Operands of a difference have different degrees.
    DegreeMismatch { left: u32, right: u32 },
    /// Checked 64-bit arithmetic overflowed.
    Overflow,
    /// A power of 2 with negative exponent appeared in a Schur-Q product.
    NegativePowerOfTwo,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::NotStrict(s) => write!(f, "not a strict partition: {s}"),
            Error::NotNested => write!(f, "inner partition is not nested in the outer one"),
            Error::NotRealizable => write!(f, "cell set is not a valid shifted skew shape"),
            Error::EmptyShape => write!(f, "operation requires a nonempty shape"),
            Error::NotFrayedRibbon => write!(f, "shape is not a frayed ribbon"),
            Error::TurnCount { expected, found } => {
                write!(f, "expected a shape with {expected} turn(s), found {found}")
            }
            Error::ShortCodeRow => {
                write!(f, "frayed-ribbon code needs a bottom row of length >= 2")
            }
            Error::ContentMismatch => write!(f, "content does not sum to the shape size"),
            Error::BadTriple(s) => write!(f, "invalid coefficient triple: {s}"),
            Error::NonStrictTarget(s) => write!(f, "target partition is not strict: {s}"),
            Error::BadParams(s) => write!(f, "invalid parameters: {s}"),
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::Overflow => write!(f, "integer overflow in exact arithmetic"),
            Error::NegativePowerOfTwo => {
                write!(f, "negative power of 2 in Schur-Q product (engine bug)")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
