//! Franklin's involution on the halved blue even parts.
//!
//! A strictly decreasing even partition halves to a strict partition `mu`
//! ("circles of 2"). With `s` the smallest part and `sigma` the length of the
//! maximal initial run of consecutive integers below the largest part, the
//! involution either
//!
//! - moves the smallest part onto the top `s` rows (Case 1, `s <= sigma`), or
//! - peels one unit off the top `sigma` rows into a new smallest part
//!   (Case 2, `s > sigma`),
//!
//! flipping the part-count parity while preserving the circle sum. The only
//! unpaired partitions are the staircases `(2m-1, ..., m)` and
//! `(2m, ..., m+1)`, whose circle sums are the generalized pentagonal
//! numbers `m(3m∓1)/2`.
//!
//! The fixed-point condition implemented is `sigma = k` and (`s = sigma` or
//! `s = sigma + 1`), i.e. the run must reach the smallest part: partitions
//! like `(6,5,2)` have `s = sigma = 2` with no overlap, and Case 1 applies
//! reversibly there.

use serde::Serialize;

use crate::error::Error;
use crate::partition::StrictPartition;
use crate::Result;

/// A strict partition in which every part stands for a circle of 2; the
/// halved form of a strictly decreasing even partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalvedEvenPartition {
    mu: StrictPartition,
}

impl HalvedEvenPartition {
    pub fn new(mu: StrictPartition) -> Self {
        HalvedEvenPartition { mu }
    }

    pub fn parts(&self) -> &[u64] {
        self.mu.parts()
    }

    /// Total number of circles, i.e. half the originating even weight.
    pub fn circle_sum(&self) -> u64 {
        self.mu.weight()
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }

    /// The even partition this halved form came from.
    pub fn to_even(&self) -> StrictPartition {
        StrictPartition::new(self.parts().iter().map(|&p| 2 * p).collect())
            .expect("doubling preserves strictness")
    }
}

/// Which pentagonal family a fixed staircase belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PentagonalSign {
    /// circle sum `m(3m-1)/2`, staircase `(2m-1, ..., m)`
    #[serde(rename = "minus")]
    Minus,
    /// circle sum `m(3m+1)/2`, staircase `(2m, ..., m+1)`
    #[serde(rename = "plus")]
    Plus,
}

impl std::fmt::Display for PentagonalSign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PentagonalSign::Minus => write!(f, "minus"),
            PentagonalSign::Plus => write!(f, "plus"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FranklinCase {
    #[serde(rename = "case1")]
    Case1,
    #[serde(rename = "case2")]
    Case2,
}

impl std::fmt::Display for FranklinCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FranklinCase::Case1 => write!(f, "case1"),
            FranklinCase::Case2 => write!(f, "case2"),
        }
    }
}

/// Result of one application of the involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FranklinOutcome {
    Moved {
        case: FranklinCase,
        image: HalvedEvenPartition,
    },
    Fixed {
        m: u64,
        sign: PentagonalSign,
    },
}

/// `s`, `sigma`, and the part count of a nonempty halved partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FranklinStats {
    /// smallest part
    pub s: u64,
    /// length of the maximal initial run of consecutive integers
    pub sigma: usize,
    /// number of parts
    pub k: usize,
}

/// Halves a strictly decreasing partition of even values >= 2.
pub fn halve_even(lambda_even: &StrictPartition) -> Result<HalvedEvenPartition> {
    for &p in lambda_even.parts() {
        if p % 2 != 0 {
            return Err(Error::Parity(p, "even"));
        }
    }
    let mu = StrictPartition::new(lambda_even.parts().iter().map(|&p| p / 2).collect())
        .expect("halving even strict parts preserves strictness");
    Ok(HalvedEvenPartition { mu })
}

/// Computes `(s, sigma, k)` for a nonempty halved partition.
pub fn franklin_stats(mu: &HalvedEvenPartition) -> Result<FranklinStats> {
    let parts = mu.parts();
    if parts.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let s = *parts.last().unwrap();
    let mut sigma = 1;
    while sigma < parts.len() && parts[sigma] == parts[0] - sigma as u64 {
        sigma += 1;
    }
    Ok(FranklinStats {
        s,
        sigma,
        k: parts.len(),
    })
}

/// One application of the involution on a nonempty halved partition.
///
/// Fixed exactly when the initial run reaches the smallest part
/// (`sigma = k`) and `s` equals `sigma` or `sigma + 1`; every other input
/// moves by Case 1 or Case 2 with the circle sum preserved and the part
/// count changed by one.
pub fn franklin_step(mu: &HalvedEvenPartition) -> Result<FranklinOutcome> {
    let FranklinStats { s, sigma, k } = franklin_stats(mu)?;
    if sigma == k && (s == sigma as u64 || s == sigma as u64 + 1) {
        let sign = if s == sigma as u64 {
            PentagonalSign::Minus
        } else {
            PentagonalSign::Plus
        };
        return Ok(FranklinOutcome::Fixed { m: k as u64, sign });
    }
    let mut parts = mu.parts().to_vec();
    let case;
    if s <= sigma as u64 {
        // move the smallest part onto the top s parts
        case = FranklinCase::Case1;
        parts.pop();
        for p in parts.iter_mut().take(s as usize) {
            *p += 1;
        }
    } else {
        // peel one unit off the top sigma parts into a new smallest part
        case = FranklinCase::Case2;
        for p in parts.iter_mut().take(sigma) {
            *p -= 1;
        }
        parts.push(sigma as u64);
    }
    let image = HalvedEvenPartition {
        mu: StrictPartition::new(parts).expect("both cases preserve strictness"),
    };
    Ok(FranklinOutcome::Moved { case, image })
}

/// Recognizes the pentagonal staircases: `Some((m, Minus))` for
/// `(2m-1, ..., m)`, `Some((m, Plus))` for `(2m, ..., m+1)`, and
/// `Some((0, Minus))` for the empty partition (both pentagonal values are 0
/// at m = 0). `None` for everything else.
pub fn classify_staircase(mu: &HalvedEvenPartition) -> Option<(u64, PentagonalSign)> {
    let parts = mu.parts();
    if parts.is_empty() {
        return Some((0, PentagonalSign::Minus));
    }
    let m = parts.len() as u64;
    let consecutive = parts
        .iter()
        .enumerate()
        .all(|(i, &p)| p == parts[0] - i as u64);
    if !consecutive {
        return None;
    }
    if parts[0] == 2 * m - 1 {
        Some((m, PentagonalSign::Minus))
    } else if parts[0] == 2 * m {
        Some((m, PentagonalSign::Plus))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_strict_partitions, ParityFilter};

    fn halved(parts: &[u64]) -> HalvedEvenPartition {
        HalvedEvenPartition::new(StrictPartition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn halving_examples() {
        let evens = StrictPartition::new(vec![10, 8, 4, 2]).unwrap();
        assert_eq!(halve_even(&evens).unwrap().parts(), &[5, 4, 2, 1]);
        let single = StrictPartition::new(vec![2]).unwrap();
        assert_eq!(halve_even(&single).unwrap().parts(), &[1]);
        let case2 = StrictPartition::new(vec![12, 10, 6]).unwrap();
        assert_eq!(halve_even(&case2).unwrap().parts(), &[6, 5, 3]);
        let odd = StrictPartition::new(vec![5, 2]).unwrap();
        assert!(halve_even(&odd).is_err());
    }

    #[test]
    fn stats_examples() {
        let stats_of = |parts: &[u64]| {
            let got = franklin_stats(&halved(parts)).unwrap();
            (got.s, got.sigma, got.k)
        };
        assert_eq!(stats_of(&[5, 4, 2, 1]), (1, 2, 4));
        assert_eq!(stats_of(&[6, 5, 3]), (3, 2, 3));
        assert_eq!(stats_of(&[5, 4, 3]), (3, 3, 3));
    }

    #[test]
    fn step_case1_example() {
        // evens (10,8,4,2) <-> (12,8,4)
        match franklin_step(&halved(&[5, 4, 2, 1])).unwrap() {
            FranklinOutcome::Moved { case, image } => {
                assert_eq!(case, FranklinCase::Case1);
                assert_eq!(image.parts(), &[6, 4, 2]);
                assert_eq!(image.to_even().parts(), &[12, 8, 4]);
            }
            other => panic!("expected a move, got {other:?}"),
        }
    }

    #[test]
    fn step_case2_example() {
        // evens (12,10,6) <-> (10,8,6,4)
        match franklin_step(&halved(&[6, 5, 3])).unwrap() {
            FranklinOutcome::Moved { case, image } => {
                assert_eq!(case, FranklinCase::Case2);
                assert_eq!(image.parts(), &[5, 4, 3, 2]);
                assert_eq!(image.to_even().parts(), &[10, 8, 6, 4]);
            }
            other => panic!("expected a move, got {other:?}"),
        }
    }

    #[test]
    fn step_fixed_example() {
        // circle sum 12 = 3*(3*3-1)/2
        match franklin_step(&halved(&[5, 4, 3])).unwrap() {
            FranklinOutcome::Fixed { m, sign } => {
                assert_eq!((m, sign), (3, PentagonalSign::Minus));
            }
            other => panic!("expected a fixed point, got {other:?}"),
        }
    }

    #[test]
    fn no_overlap_means_not_fixed() {
        // s = sigma = 2 but sigma < k: Case 1, reversible
        match franklin_step(&halved(&[6, 5, 2])).unwrap() {
            FranklinOutcome::Moved { case, image } => {
                assert_eq!(case, FranklinCase::Case1);
                assert_eq!(image.parts(), &[7, 6]);
                match franklin_step(&image).unwrap() {
                    FranklinOutcome::Moved { image: back, .. } => {
                        assert_eq!(back.parts(), &[6, 5, 2]);
                    }
                    other => panic!("expected the inverse move, got {other:?}"),
                }
            }
            other => panic!("expected a move, got {other:?}"),
        }
    }

    #[test]
    fn staircase_classification() {
        assert_eq!(
            classify_staircase(&halved(&[4, 3])),
            Some((2, PentagonalSign::Plus))
        );
        assert_eq!(
            classify_staircase(&HalvedEvenPartition::new(StrictPartition::empty())),
            Some((0, PentagonalSign::Minus))
        );
        assert_eq!(classify_staircase(&halved(&[6, 5, 2])), None);
        // a consecutive run that is not anchored at m or m+1 is not pentagonal
        assert_eq!(classify_staircase(&halved(&[3, 2, 1])), None);
        assert_eq!(
            classify_staircase(&halved(&[5, 4, 3])),
            Some((3, PentagonalSign::Minus))
        );
    }

    #[test]
    fn empty_inputs_rejected() {
        let empty = HalvedEvenPartition::new(StrictPartition::empty());
        assert_eq!(franklin_stats(&empty), Err(Error::EmptyPartition));
        assert!(franklin_step(&empty).is_err());
    }

    #[test]
    fn involution_on_all_strict_partitions() {
        for total in 1..=40u64 {
            for mu in enumerate_strict_partitions(total, ParityFilter::Any) {
                let mu = HalvedEvenPartition::new(mu);
                match franklin_step(&mu).unwrap() {
                    FranklinOutcome::Moved { image, .. } => {
                        assert_eq!(image.circle_sum(), mu.circle_sum());
                        let diff = image.len().abs_diff(mu.len());
                        assert_eq!(diff, 1, "parity flip failed for {:?}", mu.parts());
                        match franklin_step(&image).unwrap() {
                            FranklinOutcome::Moved { image: back, .. } => {
                                assert_eq!(back, mu, "not an involution at {:?}", mu.parts())
                            }
                            other => {
                                panic!("image of {:?} unexpectedly fixed: {other:?}", mu.parts())
                            }
                        }
                        assert_eq!(classify_staircase(&mu), None);
                    }
                    FranklinOutcome::Fixed { m, sign } => {
                        assert_eq!(classify_staircase(&mu), Some((m, sign)));
                        let expected_sum = match sign {
                            PentagonalSign::Minus => m * (3 * m - 1) / 2,
                            PentagonalSign::Plus => m * (3 * m + 1) / 2,
                        };
                        assert_eq!(mu.circle_sum(), expected_sum);
                    }
                }
            }
        }
    }

    #[test]
    fn fixed_sets_are_exactly_the_staircases() {
        let pentagonal: Vec<(u64, u64, PentagonalSign)> = (1..=5)
            .flat_map(|m| {
                [
                    (m * (3 * m - 1) / 2, m, PentagonalSign::Minus),
                    (m * (3 * m + 1) / 2, m, PentagonalSign::Plus),
                ]
            })
            .collect();
        for total in 1..=40u64 {
            let fixed: Vec<HalvedEvenPartition> =
                enumerate_strict_partitions(total, ParityFilter::Any)
                    .into_iter()
                    .map(HalvedEvenPartition::new)
                    .filter(|mu| {
                        matches!(franklin_step(mu), Ok(FranklinOutcome::Fixed { .. }))
                    })
                    .collect();
            let expected: Vec<&(u64, u64, PentagonalSign)> =
                pentagonal.iter().filter(|(sum, _, _)| *sum == total).collect();
            assert_eq!(fixed.len(), expected.len(), "circle sum {total}");
            for (sum, m, sign) in expected {
                let _ = sum;
                let staircase: Vec<u64> = match sign {
                    PentagonalSign::Minus => (*m..=2 * m - 1).rev().collect(),
                    PentagonalSign::Plus => (*m + 1..=2 * m).rev().collect(),
                };
                assert!(
                    fixed.iter().any(|mu| mu.parts() == staircase.as_slice()),
                    "missing staircase {staircase:?} at circle sum {total}"
                );
            }
        }
    }
}
