//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by the library.
///
/// Variants are grouped by how the CLI reports them: syntactic problems in
/// an input ([`Error::Parse`], [`Error::InvalidScalar`]), semantically
/// invalid data ([`Error::Validation`]), requests the build does not support
/// ([`Error::UnsupportedFormat`], [`Error::UnsupportedField`]), and contract
/// violations that indicate a bug rather than bad input
/// ([`Error::InvariantViolation`]).
#[derive(Debug, Error)]
pub enum Error {
    /// Division by a zero scalar.
    #[error("division by zero")]
    DivisionByZero,

    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    ZeroPolynomialDivisor,

    /// Malformed input text.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A scalar token that does not conform to the textual scalar format.
    #[error("invalid scalar '{text}': {reason}")]
    InvalidScalar { text: String, reason: String },

    /// Well-formed input that violates a semantic constraint.
    #[error("validation error: {0}")]
    Validation(String),

    /// Input format variant the parser does not handle.
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    /// Field (or field/operation combination) the library does not support.
    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    /// A documented precondition of an operation was violated by the caller.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal consistency check failed; this is a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    /// Underlying I/O failure while reading input.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
