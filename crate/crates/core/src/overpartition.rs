//! Overpartitions into odd parts: partitions into odd parts in which the
//! first occurrence of each distinct part may be overlined.
//!
//! This enumeration is the independent oracle for the `E(n)` counts: it never
//! touches colors, series, or the bijection machinery. The count of
//! overpartitions of `n` into odd parts is `sum 2^(distinct values)` over the
//! plain partitions of `n` into odd parts.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

/// One part of an overpartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OverPart {
    pub value: u64,
    pub overlined: bool,
}

/// An overpartition into odd parts, parts in canonical order: values
/// descending, the overlined copy first among equal values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct OddOverpartition {
    parts: Vec<OverPart>,
}

impl OddOverpartition {
    pub fn parts(&self) -> &[OverPart] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.value).sum()
    }

    fn canonical_key(&self) -> Vec<(std::cmp::Reverse<u64>, bool)> {
        // overlined ranks above plain: false < true, so negate
        self.parts
            .iter()
            .map(|p| (std::cmp::Reverse(p.value), !p.overlined))
            .collect()
    }
}

impl std::fmt::Display for OddOverpartition {
    /// e.g. `5~+3+1` with `~` marking an overline; empty prints as `0`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self
            .parts
            .iter()
            .map(|p| format!("{}{}", p.value, if p.overlined { "~" } else { "" }))
            .collect();
        write!(f, "{}", s.join("+"))
    }
}

fn odd_multiset_partitions(n: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        let top = max_part.min(remaining);
        let start = if top % 2 == 0 { top - 1 } else { top };
        let mut k = start;
        loop {
            current.push(k);
            rec(remaining - k, k, current, out);
            current.pop();
            if k == 1 {
                break;
            }
            k -= 2;
        }
    }
    if n == 0 {
        out.push(Vec::new());
    } else {
        rec(n, n, &mut current, &mut out);
    }
    out
}

/// All overpartitions of `n` into odd parts, canonically ordered.
pub fn enumerate_odd_overpartitions(n: u64) -> Vec<OddOverpartition> {
    let mut out = Vec::new();
    for multiset in odd_multiset_partitions(n) {
        let mut distinct: Vec<u64> = multiset.clone();
        distinct.dedup();
        let d = distinct.len();
        for mask in 0..(1u32 << d) {
            let mut parts = Vec::with_capacity(multiset.len());
            let mut seen_first = vec![false; d];
            for &v in &multiset {
                let idx = distinct.iter().position(|&x| x == v).unwrap();
                let overlined = !seen_first[idx] && (mask >> idx) & 1 == 1;
                seen_first[idx] = true;
                parts.push(OverPart {
                    value: v,
                    overlined,
                });
            }
            out.push(OddOverpartition { parts });
        }
    }
    out.sort_by_key(OddOverpartition::canonical_key);
    out
}

/// The number of overpartitions of `n` into odd parts, without
/// materializing them.
pub fn count_odd_overpartitions(n: u64) -> BigUint {
    let mut total = BigUint::zero();
    for multiset in odd_multiset_partitions(n) {
        let mut distinct = multiset.clone();
        distinct.dedup();
        total += BigUint::one() << distinct.len();
    }
    total
}
