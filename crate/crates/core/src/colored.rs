//! Two-colored partitions with distinct parts per color and even parts
//! confined to blue, the class counted by `E(n)`.
//!
//! Every such partition decomposes uniquely into blue even parts, blue odd
//! parts, and green odd parts; [`decompose`]/[`recompose`] move between the
//! flat form and that triple. [`counts`] classifies by the parity of the
//! even-part count (`E0`/`E1`) and of the total part count (`E2`/`E3`).

use std::cmp::Ordering;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::Error;
use crate::partition::{enumerate_strict_partitions, ParityFilter, StrictPartition};
use crate::Result;

/// Part color. Green parts are always odd; blue parts may be anything.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Color {
    #[serde(rename = "b")]
    Blue,
    #[serde(rename = "g")]
    Green,
}

/// A single colored part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ColoredPart {
    pub value: u64,
    pub color: Color,
}

impl ColoredPart {
    /// Sort key: value descending, blue before green at equal value.
    fn canonical_key(&self) -> (std::cmp::Reverse<u64>, u8) {
        let c = match self.color {
            Color::Blue => 0,
            Color::Green => 1,
        };
        (std::cmp::Reverse(self.value), c)
    }
}

/// A two-colored partition in canonical order: values descending, blue
/// before green at equal value. Values are distinct within each color and
/// even values are blue.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct TwoColoredPartition {
    parts: Vec<ColoredPart>,
}

impl TwoColoredPartition {
    /// Sorts `parts` canonically and validates the class invariants.
    pub fn new(mut parts: Vec<ColoredPart>) -> Result<Self> {
        parts.sort_by_key(ColoredPart::canonical_key);
        for pair in parts.windows(2) {
            if pair[0].value == pair[1].value && pair[0].color == pair[1].color {
                return Err(Error::NotStrictlyDecreasing);
            }
        }
        for p in &parts {
            if p.value == 0 {
                return Err(Error::NotWeaklyDecreasing);
            }
            if p.color == Color::Green && p.value % 2 == 0 {
                return Err(Error::Parity(p.value, "odd (green parts)"));
            }
        }
        Ok(TwoColoredPartition { parts })
    }

    pub fn empty() -> Self {
        TwoColoredPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| p.value).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Canonical comparison: value sequences lexicographically, larger parts
    /// first; ties broken by colors with blue before green.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let values = |p: &Self| {
            p.parts
                .iter()
                .map(|q| std::cmp::Reverse(q.value))
                .collect::<Vec<_>>()
        };
        values(self).cmp(&values(other)).then_with(|| {
            let colors = |p: &Self| {
                p.parts
                    .iter()
                    .map(|q| matches!(q.color, Color::Green) as u8)
                    .collect::<Vec<_>>()
            };
            colors(self).cmp(&colors(other))
        })
    }
}

impl std::fmt::Display for TwoColoredPartition {
    /// e.g. `5_b+3_g+2_b`; the empty partition prints as `0`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                let c = match p.color {
                    Color::Blue => "b",
                    Color::Green => "g",
                };
                format!("{}_{}", p.value, c)
            })
            .collect();
        write!(f, "{}", s.join("+"))
    }
}

/// The (blue even, green odd, blue odd) decomposition of an `E`-class
/// partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddTriple {
    pub lambda_even: StrictPartition,
    pub alpha_odd: StrictPartition,
    pub beta_odd: StrictPartition,
}

/// The five class counts at one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCounts {
    pub e: BigUint,
    pub e0: BigUint,
    pub e1: BigUint,
    pub e2: BigUint,
    pub e3: BigUint,
}

fn strict_parts_by_weight(n: u64, filter: ParityFilter) -> Vec<Vec<StrictPartition>> {
    (0..=n)
        .map(|w| enumerate_strict_partitions(w, filter))
        .collect()
}

/// All `E`-class partitions of `n`, canonically ordered, exactly once.
pub fn enumerate_e(n: u64) -> Vec<TwoColoredPartition> {
    let evens = strict_parts_by_weight(n, ParityFilter::EvenOnly);
    let odds = strict_parts_by_weight(n, ParityFilter::OddOnly);
    let mut out = Vec::new();
    for we in 0..=n {
        for wb in 0..=n - we {
            let wa = n - we - wb;
            for lambda in &evens[we as usize] {
                for beta in &odds[wb as usize] {
                    for alpha in &odds[wa as usize] {
                        let triple = OddTriple {
                            lambda_even: lambda.clone(),
                            alpha_odd: alpha.clone(),
                            beta_odd: beta.clone(),
                        };
                        out.push(recompose(&triple).expect("enumerated triples are valid"));
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// `(number of even-valued parts, total number of parts)`.
pub fn classify(p: &TwoColoredPartition) -> (usize, usize) {
    let evens = p.parts.iter().filter(|q| q.value % 2 == 0).count();
    (evens, p.parts.len())
}

/// The counts `(E, E0, E1, E2, E3)` at weight `n`, by exhaustive enumeration
/// of every (blue even, blue odd, green odd) combination.
pub fn counts(n: u64) -> ClassCounts {
    let evens = strict_parts_by_weight(n, ParityFilter::EvenOnly);
    let odds = strict_parts_by_weight(n, ParityFilter::OddOnly);
    // buckets[even-count parity][total-count parity]
    let mut buckets = [[0u64; 2]; 2];
    for we in 0..=n {
        for wb in 0..=n - we {
            let wa = n - we - wb;
            for lambda in &evens[we as usize] {
                for beta in &odds[wb as usize] {
                    for alpha in &odds[wa as usize] {
                        let m = lambda.len();
                        let total = m + beta.len() + alpha.len();
                        buckets[m % 2][total % 2] += 1;
                    }
                }
            }
        }
    }
    let e0 = buckets[0][0] + buckets[0][1];
    let e1 = buckets[1][0] + buckets[1][1];
    let e2 = buckets[0][0] + buckets[1][0];
    let e3 = buckets[0][1] + buckets[1][1];
    ClassCounts {
        e: BigUint::from(e0 + e1),
        e0: BigUint::from(e0),
        e1: BigUint::from(e1),
        e2: BigUint::from(e2),
        e3: BigUint::from(e3),
    }
}

/// Splits an `E`-class partition into its three strictly decreasing part
/// families: blue even, green odd, blue odd.
pub fn decompose(p: &TwoColoredPartition) -> OddTriple {
    let mut lambda = Vec::new();
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for part in &p.parts {
        match (part.color, part.value % 2) {
            (Color::Blue, 0) => lambda.push(part.value),
            (Color::Blue, _) => beta.push(part.value),
            (Color::Green, _) => alpha.push(part.value),
        }
    }
    OddTriple {
        lambda_even: StrictPartition::new(lambda).expect("subsequence of canonical order"),
        alpha_odd: StrictPartition::new(alpha).expect("subsequence of canonical order"),
        beta_odd: StrictPartition::new(beta).expect("subsequence of canonical order"),
    }
}

/// Rebuilds the canonical partition from a triple; inverse of [`decompose`].
pub fn recompose(t: &OddTriple) -> Result<TwoColoredPartition> {
    for &v in t.lambda_even.parts() {
        if v % 2 != 0 {
            return Err(Error::Parity(v, "even (lambda_even)"));
        }
    }
    for &v in t.alpha_odd.parts() {
        if v % 2 != 1 {
            return Err(Error::Parity(v, "odd (alpha_odd)"));
        }
    }
    for &v in t.beta_odd.parts() {
        if v % 2 != 1 {
            return Err(Error::Parity(v, "odd (beta_odd)"));
        }
    }
    let mut parts: Vec<ColoredPart> = Vec::with_capacity(
        t.lambda_even.len() + t.alpha_odd.len() + t.beta_odd.len(),
    );
    for &v in t.lambda_even.parts().iter().chain(t.beta_odd.parts()) {
        parts.push(ColoredPart {
            value: v,
            color: Color::Blue,
        });
    }
    for &v in t.alpha_odd.parts() {
        parts.push(ColoredPart {
            value: v,
            color: Color::Green,
        });
    }
    TwoColoredPartition::new(parts)
}
