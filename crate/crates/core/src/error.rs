use thiserror::Error;

/// Errors raised by the ring, form, map and number-theory routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A grade, index or parameter lies outside its admissible range.
    #[error("out of range: {0}")]
    Range(String),
    /// The input is well-formed but outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Two operands belong to different Grassmannians.
    #[error("context mismatch: element of G({found_n},{found_k}) used with G({n},{k})")]
    ContextMismatch {
        n: u32,
        k: u32,
        found_n: u32,
        found_k: u32,
    },
    /// The request is valid mathematics that this toolkit does not handle.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Malformed textual input (partitions, index sets, pairs).
    #[error("parse error: {0}")]
    Parse(String),
    /// An invariant that must hold failed; indicates a bug or a genuine counterexample.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
