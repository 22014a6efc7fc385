//! Crate-wide error type.

use std::fmt;

/// Errors reported by the library.
///
/// All operations are total on well-formed inputs; errors signal contract
/// violations (dimension mismatches, degenerate data, invalid descriptors)
/// rather than numerical failure, since all arithmetic here is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two vectors (or a vector and a context) disagree on the dimension `n`.
    DimensionMismatch { expected: usize, got: usize },
    /// A half-space normal or similar datum was identically zero.
    DegenerateInput(String),
    /// An integer matrix expected to be unimodular has determinant != +-1.
    NotUnimodular(String),
    /// A stated precondition does not hold for the given arguments.
    Precondition(String),
    /// A family descriptor or serialized report is malformed.
    InvalidDescriptor(String),
    /// A window request exceeds the region where a truncated construction
    /// reports exact or flagged dimensions.
    WindowOutOfRange(String),
    /// Failure parsing a scalar, vector, or report from text.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::DegenerateInput(msg) => write!(f, "degenerate input: {msg}"),
            Error::NotUnimodular(msg) => write!(f, "matrix is not unimodular: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::InvalidDescriptor(msg) => write!(f, "invalid descriptor: {msg}"),
            Error::WindowOutOfRange(msg) => write!(f, "window out of range: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
