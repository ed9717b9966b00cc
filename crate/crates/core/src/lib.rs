//! Exact combinatorics of two-colored partitions and overpartitions into odd
//! parts.
//!
//! The crate provides, over arbitrary-precision integers:
//!
//! - [`partition`]: ordinary and strict partition enumeration, the partition
//!   function `p(n)` via the pentagonal-number recurrence (with a brute-force
//!   oracle), and generalized pentagonal numbers.
//! - [`qseries`]: truncated formal power series, q-Pochhammer-style product
//!   expansion, and the named generating functions used by the verifier.
//! - [`colored`]: enumeration and classification of the two-colored partitions
//!   counted by `E(n)` (distinct parts per color, even parts blue only).
//! - [`overpartition`]: overpartitions into odd parts, the independent
//!   counting oracle for `E(n)`.
//! - [`franklin`]: Franklin's involution on the halved blue even parts, with
//!   exact pentagonal fixed-point classification.
//! - [`bipartition`]: parallel bi-partition systems, the concatenation
//!   diagram, and the bijection onto unrestricted partitions of
//!   `d - c(c+1)/2`.
//! - [`verify`]: identity-level verification sweeps by enumeration and by
//!   series, with machine-readable reports.

pub mod bipartition;
pub mod colored;
pub mod error;
pub mod franklin;
pub mod overpartition;
pub mod partition;
pub mod qseries;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Returns true when `n` is a perfect square.
pub fn is_square(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}
