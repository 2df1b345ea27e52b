//! Error types shared across the crate.

use alloc::string::String;
use core::fmt;

/// Failure of a field, ring, ideal, or catalog operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreError {
    /// The modulus is not a prime in the supported range.
    BadModulus(u64),
    /// The requested root order does not divide p - 1.
    NoRoots { p: u64, order: u64 },
    /// Operands live in different polynomial rings.
    RingMismatch,
    /// The S-pair budget was exhausted before the basis stabilized.
    BudgetExceeded { spairs: u64 },
    /// An operation that needs a proper ideal received the unit ideal.
    UnitIdeal,
    /// Exact division left a nonzero remainder.
    InexactDivision,
    /// A size guard tripped (matrix or graph grew past its cap).
    TooLarge(String),
    /// Invalid parameters for a catalog family.
    BadParams(String),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::BadModulus(p) => write!(f, "{p} is not a usable prime modulus"),
            CoreError::NoRoots { p, order } => {
                write!(f, "F_{p} has no elements of multiplicative order {order}")
            }
            CoreError::RingMismatch => write!(f, "operands belong to different rings"),
            CoreError::BudgetExceeded { spairs } => {
                write!(f, "S-pair budget exhausted after {spairs} pairs")
            }
            CoreError::UnitIdeal => write!(f, "the unit ideal has no height"),
            CoreError::InexactDivision => write!(f, "division left a remainder"),
            CoreError::TooLarge(what) => write!(f, "size guard exceeded: {what}"),
            CoreError::BadParams(what) => write!(f, "invalid parameters: {what}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CoreError {}

/// Syntax error from the polynomial or ideal-file parser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where parsing failed.
    pub at: usize,
    /// Human-readable description of what was expected.
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.at, self.msg)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseError {}
