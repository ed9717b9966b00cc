//! Crate error type.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parts must be weakly decreasing and positive")]
    NotWeaklyDecreasing,

    #[error("parts must be strictly decreasing and positive")]
    NotStrictlyDecreasing,

    #[error("part {0} has the wrong parity (expected {1})")]
    Parity(u64, &'static str),

    #[error("truncation orders differ: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("index {0} is out of range (expected 1..={1})")]
    OutOfRange(u64, u64),

    #[error("pentagonal index must be positive")]
    ZeroPentagonalIndex,

    #[error("operation requires a nonempty partition")]
    EmptyPartition,

    #[error("malformed concatenation diagram: {0}")]
    MalformedDiagram(String),

    #[error("invalid count table data: {0}")]
    CorruptTable(String),
}
