//! Parallel bi-partition systems and the concatenation-diagram bijection.
//!
//! A system is an ordered pair `(L, R)` of strict partitions into odd parts
//! with `|L| - |R| = c >= 0`. Writing `L = (2*beta_i + 1)` and
//! `R = (2*alpha_i + 1)`, the major halves `beta_i + 1` stand vertically
//! (each column one unit below the previous), the minor halves `alpha_i`
//! attach horizontally after `c` empty rows, and the joined diagram splits
//! into a staircase of `T(c) = c(c+1)/2` cells plus an unrestricted partition
//! of the remaining `d - T(c)` cells, where
//!
//! ```text
//! d = sum alpha_i + sum (beta_i + 1),    t = sum (alpha_i + 1) + sum beta_i,
//! n = d + t,                             d - t = c.
//! ```
//!
//! Both directions of the bijection are implemented; the number of systems
//! with fixed `(c, d)` is `p(d - T(c))`.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::Error;
use crate::partition::{enumerate_strict_partitions, ParityFilter, Partition, StrictPartition};
use crate::Result;

/// Records which input side became `L` during normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// `L` came from the blue odd parts (beta), `R` from the green (alpha).
    Normal,
    /// The sides were exchanged to make `|L| >= |R|`.
    Swapped,
}

/// A parallel bi-partition system, normalized so that `|L| >= |R|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPartitionSystem {
    l: StrictPartition,
    r: StrictPartition,
    c: u64,
    orientation: Orientation,
}

/// The halved sides: `beta_prime[i] = (L[i]-1)/2 + 1` (always >= 1) and
/// `alpha_prime[i] = (R[i]-1)/2` (a final 0 encodes a green part 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalvedSides {
    pub beta_prime: Vec<u64>,
    pub alpha_prime: Vec<u64>,
}

/// Row lengths of the concatenation diagram, top-down. The first `c` rows
/// form the staircase `1, 2, ..., c`; the rest are weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatDiagram {
    pub c: u64,
    pub rows: Vec<u64>,
}

impl ConcatDiagram {
    /// Total number of cells; equals `d`.
    pub fn total_cells(&self) -> u64 {
        self.rows.iter().sum()
    }
}

fn require_odd(side: &StrictPartition) -> Result<()> {
    for &p in side.parts() {
        if p % 2 == 0 {
            return Err(Error::Parity(p, "odd"));
        }
    }
    Ok(())
}

/// Builds a normalized system from the blue odd parts (`beta_odd`) and the
/// green odd parts (`alpha_odd`); either side may be empty.
pub fn build_system(
    beta_odd: &StrictPartition,
    alpha_odd: &StrictPartition,
) -> Result<BiPartitionSystem> {
    require_odd(beta_odd)?;
    require_odd(alpha_odd)?;
    let (l, r, orientation) = if beta_odd.len() >= alpha_odd.len() {
        (beta_odd.clone(), alpha_odd.clone(), Orientation::Normal)
    } else {
        (alpha_odd.clone(), beta_odd.clone(), Orientation::Swapped)
    };
    let c = (l.len() - r.len()) as u64;
    Ok(BiPartitionSystem {
        l,
        r,
        c,
        orientation,
    })
}

impl BiPartitionSystem {
    pub fn l(&self) -> &StrictPartition {
        &self.l
    }

    pub fn r(&self) -> &StrictPartition {
        &self.r
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// The system's sides in their original roles: `(beta_odd, alpha_odd)`.
    pub fn beta_alpha(&self) -> (&StrictPartition, &StrictPartition) {
        match self.orientation {
            Orientation::Normal => (&self.l, &self.r),
            Orientation::Swapped => (&self.r, &self.l),
        }
    }

    /// Combined weight of both sides.
    pub fn weight(&self) -> u64 {
        self.l.weight() + self.r.weight()
    }

    /// Major halves of `L` and minor halves of `R`.
    pub fn halves(&self) -> HalvedSides {
        HalvedSides {
            beta_prime: self.l.parts().iter().map(|&p| (p - 1) / 2 + 1).collect(),
            alpha_prime: self.r.parts().iter().map(|&p| (p - 1) / 2).collect(),
        }
    }

    /// The pair `(d, t)`; `d + t` is the weight and `d - t = c`.
    pub fn d_and_t(&self) -> (u64, u64) {
        let HalvedSides {
            beta_prime,
            alpha_prime,
        } = self.halves();
        let major: u64 = beta_prime.iter().sum();
        let minor: u64 = alpha_prime.iter().sum();
        let d = minor + major;
        // t = sum (alpha_i + 1) + sum beta_i
        let t = minor + alpha_prime.len() as u64 + major - beta_prime.len() as u64;
        (d, t)
    }

    /// Renders the concatenation diagram: column `i` (0-based) holds
    /// `beta_prime[i]` blue cells starting at row `i`; row `c + s` carries
    /// `alpha_prime[s]` green cells appended after the blue cells.
    pub fn to_diagram(&self) -> ConcatDiagram {
        let HalvedSides {
            beta_prime,
            alpha_prime,
        } = self.halves();
        let height = beta_prime
            .iter()
            .enumerate()
            .map(|(i, &b)| i + b as usize)
            .max()
            .unwrap_or(0);
        let mut rows = vec![0u64; height];
        for (i, &b) in beta_prime.iter().enumerate() {
            for row in rows.iter_mut().skip(i).take(b as usize) {
                *row += 1;
            }
        }
        for (s, &a) in alpha_prime.iter().enumerate() {
            rows[self.c as usize + s] += a;
        }
        ConcatDiagram {
            c: self.c,
            rows,
        }
    }
}

/// Splits a diagram into its staircase prefix and the unrestricted residual
/// partition `mu` with `weight(mu) = d - c(c+1)/2`.
pub fn diagram_to_residual(dia: &ConcatDiagram) -> Result<(u64, Partition)> {
    let c = dia.c as usize;
    if dia.rows.len() < c {
        return Err(Error::MalformedDiagram(format!(
            "{} rows cannot hold a staircase of height {c}",
            dia.rows.len()
        )));
    }
    for (r, &len) in dia.rows.iter().take(c).enumerate() {
        if len != (r + 1) as u64 {
            return Err(Error::MalformedDiagram(format!(
                "row {r} has length {len}, staircase needs {}",
                r + 1
            )));
        }
    }
    let mu = Partition::new(dia.rows[c..].to_vec())
        .map_err(|_| Error::MalformedDiagram("residual rows are not a partition".into()))?;
    Ok((dia.c, mu))
}

/// Rebuilds the unique system whose diagram is the staircase `1..c` followed
/// by the rows of `mu`. Inverse of `to_diagram` composed with
/// [`diagram_to_residual`]; every `(c, mu)` yields a valid system.
///
/// `orientation` is attached to the result so decompositions in which the
/// green parts outnumber the blue ones roundtrip losslessly; `c = 0` systems
/// are always `Normal`.
pub fn residual_to_system(c: u64, mu: &Partition, orientation: Orientation) -> BiPartitionSystem {
    let c_us = c as usize;
    let mut rho: Vec<u64> = (1..=c).collect();
    rho.extend_from_slice(mu.parts());
    // maximal prefix in which row r still reaches the diagonal cell (r, r)
    let mut k = 0;
    while k < rho.len() && rho[k] >= (k + 1) as u64 {
        k += 1;
    }
    let j = k - c_us;
    // green excess over the diagonal in rows c..k-1
    let alpha_prime: Vec<u64> = (0..j)
        .map(|s| rho[c_us + s] - (c_us + s + 1) as u64)
        .collect();
    // blue column heights: k - i diagonal rows plus the tail rows reaching
    // column i
    let beta_prime: Vec<u64> = (0..k)
        .map(|i| {
            let tail = rho[k..].iter().filter(|&&w| w >= (i + 1) as u64).count();
            (k - i + tail) as u64
        })
        .collect();
    let l = StrictPartition::new(beta_prime.iter().map(|&b| 2 * b - 1).collect())
        .expect("major halves are strictly decreasing");
    let r = StrictPartition::new(alpha_prime.iter().map(|&a| 2 * a + 1).collect())
        .expect("minor halves are strictly decreasing");
    let orientation = if c == 0 {
        Orientation::Normal
    } else {
        orientation
    };
    BiPartitionSystem {
        l,
        r,
        c,
        orientation,
    }
}

/// Counts the systems with cardinality difference `c` and cell count `d` by
/// exhaustively pairing strict odd partitions; the count law says this equals
/// `p(d - c(c+1)/2)`.
pub fn count_systems_bruteforce(c: u64, d: u64) -> BigUint {
    // All candidate sides have major (resp. minor) half sum <= d; a strict
    // odd partition of weight w has major sum (w + len)/2 >= w/2 and minor
    // sum (w - len)/2 >= (w - sqrt(2w)) / 2, so this weight cap is safe.
    let w_max = 2 * d + (2 * d).isqrt() + 2;
    let mut left: HashMap<(usize, u64), u64> = HashMap::new();
    let mut right: HashMap<(usize, u64), u64> = HashMap::new();
    for w in 0..=w_max {
        for p in enumerate_strict_partitions(w, ParityFilter::OddOnly) {
            let major: u64 = p.parts().iter().map(|&v| (v + 1) / 2).sum();
            let minor: u64 = p.parts().iter().map(|&v| (v - 1) / 2).sum();
            if major <= d {
                *left.entry((p.len(), major)).or_default() += 1;
            }
            if minor <= d {
                *right.entry((p.len(), minor)).or_default() += 1;
            }
        }
    }
    let mut total = 0u64;
    for (&(k, major), &n_left) in &left {
        if (k as u64) < c {
            continue;
        }
        let j = k - c as usize;
        let minor = d - major;
        if let Some(&n_right) = right.get(&(j, minor)) {
            total += n_left * n_right;
        }
    }
    BigUint::from(total)
}

/// All systems of combined weight `n`, over every ordered `(beta, alpha)`
/// assignment; used by the roundtrip sweeps.
pub fn enumerate_systems_by_weight(n: u64) -> Vec<BiPartitionSystem> {
    let mut out = Vec::new();
    for wb in 0..=n {
        let wa = n - wb;
        for beta in enumerate_strict_partitions(wb, ParityFilter::OddOnly) {
            for alpha in enumerate_strict_partitions(wa, ParityFilter::OddOnly) {
                out.push(build_system(&beta, &alpha).expect("odd strict sides"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p_table;
    use num_traits::Zero;

    fn strict(parts: &[u64]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn system(l: &[u64], r: &[u64]) -> BiPartitionSystem {
        build_system(&strict(l), &strict(r)).unwrap()
    }

    #[test]
    fn build_normalizes_sides() {
        let s = system(&[5, 3, 1], &[3]);
        assert_eq!(s.c(), 2);
        assert_eq!(s.orientation(), Orientation::Normal);
        assert_eq!(s.l().parts(), &[5, 3, 1]);

        let empty = system(&[], &[]);
        assert_eq!(empty.c(), 0);
        assert_eq!(empty.orientation(), Orientation::Normal);

        let swapped = system(&[1], &[9, 3]);
        assert_eq!(swapped.c(), 1);
        assert_eq!(swapped.orientation(), Orientation::Swapped);
        assert_eq!(swapped.l().parts(), &[9, 3]);
        assert_eq!(swapped.r().parts(), &[1]);
        let (beta, alpha) = swapped.beta_alpha();
        assert_eq!(beta.parts(), &[1]);
        assert_eq!(alpha.parts(), &[9, 3]);
    }

    #[test]
    fn even_sides_rejected() {
        assert!(build_system(&strict(&[4, 1]), &strict(&[])).is_err());
        assert!(build_system(&strict(&[]), &strict(&[2])).is_err());
    }

    #[test]
    fn halves_examples() {
        let h = system(&[9, 5, 3, 1], &[7, 1]).halves();
        assert_eq!(h.beta_prime, vec![5, 3, 2, 1]);
        assert_eq!(h.alpha_prime, vec![3, 0]);

        let h = system(&[13, 9, 5, 3, 1], &[9, 7, 3]).halves();
        assert_eq!(h.beta_prime, vec![7, 5, 3, 2, 1]);
        assert_eq!(h.alpha_prime, vec![4, 3, 1]);

        let h = system(&[1], &[]).halves();
        assert_eq!(h.beta_prime, vec![1]);
        assert!(h.alpha_prime.is_empty());
    }

    #[test]
    fn d_and_t_examples() {
        let s = system(&[9, 5, 3, 1], &[7, 1]);
        assert_eq!(s.d_and_t(), (14, 12));
        assert_eq!(s.weight(), 26);

        let s = system(&[13, 9, 5, 3, 1], &[9, 7, 3]);
        assert_eq!(s.d_and_t(), (26, 24));
        assert_eq!(s.weight(), 50);

        assert_eq!(system(&[], &[]).d_and_t(), (0, 0));
    }

    #[test]
    fn diagram_examples() {
        let d = system(&[9, 5, 3, 1], &[7, 1]).to_diagram();
        assert_eq!(d.rows, vec![1, 2, 6, 4, 1]);
        assert_eq!(d.total_cells(), 14);

        let d = system(&[13, 9, 5, 3, 1], &[9, 7, 3]).to_diagram();
        assert_eq!(d.rows, vec![1, 2, 7, 7, 6, 2, 1]);
        assert_eq!(d.total_cells(), 26);

        // all-blue staircase: d = T(2) = 3
        let d = system(&[3, 1], &[]).to_diagram();
        assert_eq!(d.rows, vec![1, 2]);
        assert_eq!(d.total_cells(), 3);
    }

    #[test]
    fn residual_examples() {
        let (c, mu) = diagram_to_residual(&ConcatDiagram {
            c: 2,
            rows: vec![1, 2, 6, 4, 1],
        })
        .unwrap();
        assert_eq!((c, mu.parts()), (2, &[6, 4, 1][..]));
        assert_eq!(mu.weight(), 11);

        let (c, mu) = diagram_to_residual(&ConcatDiagram {
            c: 2,
            rows: vec![1, 2, 7, 7, 6, 2, 1],
        })
        .unwrap();
        assert_eq!((c, mu.parts()), (2, &[7, 7, 6, 2, 1][..]));
        assert_eq!(mu.weight(), 23);

        let (c, mu) = diagram_to_residual(&ConcatDiagram {
            c: 2,
            rows: vec![1, 2],
        })
        .unwrap();
        assert_eq!(c, 2);
        assert!(mu.is_empty());
    }

    #[test]
    fn malformed_prefix_rejected() {
        let bad = ConcatDiagram {
            c: 2,
            rows: vec![1, 3, 6],
        };
        assert!(diagram_to_residual(&bad).is_err());
        let short = ConcatDiagram {
            c: 3,
            rows: vec![1, 2],
        };
        assert!(diagram_to_residual(&short).is_err());
    }

    #[test]
    fn inverse_examples() {
        let mu = Partition::new(vec![6, 4, 1]).unwrap();
        let s = residual_to_system(2, &mu, Orientation::Normal);
        assert_eq!(s.l().parts(), &[9, 5, 3, 1]);
        assert_eq!(s.r().parts(), &[7, 1]);

        // the all-blue staircase: n = c^2
        let s = residual_to_system(2, &Partition::empty(), Orientation::Normal);
        assert_eq!(s.l().parts(), &[3, 1]);
        assert!(s.r().is_empty());
        assert_eq!(s.weight(), 4);

        let s = residual_to_system(0, &Partition::new(vec![1]).unwrap(), Orientation::Normal);
        assert_eq!(s.l().parts(), &[1]);
        assert_eq!(s.r().parts(), &[1]);
        assert_eq!(s.weight(), 2);
    }

    #[test]
    fn square_fixed_points() {
        for c in 1..=6u64 {
            let s = residual_to_system(c, &Partition::empty(), Orientation::Normal);
            let expected: Vec<u64> = (0..c).map(|i| 2 * (c - i) - 1).collect();
            assert_eq!(s.l().parts(), expected.as_slice(), "c={c}");
            assert!(s.r().is_empty());
            assert_eq!(s.weight(), c * c);
        }
    }

    #[test]
    fn roundtrip_system_to_residual_and_back() {
        for n in 0..=40 {
            for sys in enumerate_systems_by_weight(n) {
                let (c, mu) = diagram_to_residual(&sys.to_diagram()).unwrap();
                let back = residual_to_system(c, &mu, sys.orientation());
                assert_eq!(back, sys, "n={n}");
                let (d, t) = sys.d_and_t();
                assert_eq!(d - t, sys.c(), "n={n}");
                assert_eq!(d + t, sys.weight(), "n={n}");
                assert_eq!(sys.to_diagram().total_cells(), d, "n={n}");
                assert_eq!(mu.weight(), d - c * (c + 1) / 2, "n={n}");
            }
        }
    }

    #[test]
    fn roundtrip_residual_to_system_and_back() {
        use crate::partition::enumerate_partitions;
        for c in 0..=5u64 {
            for w in 0..=20u64 {
                for mu in enumerate_partitions(w) {
                    let sys = residual_to_system(c, &mu, Orientation::Normal);
                    let (c2, mu2) = diagram_to_residual(&sys.to_diagram()).unwrap();
                    assert_eq!((c2, mu2), (c, mu), "c={c} w={w}");
                }
            }
        }
    }

    #[test]
    fn count_law_small_grid() {
        let table = p_table(30);
        for c in 0..=3u64 {
            for d in 0..=12u64 {
                let got = count_systems_bruteforce(c, d);
                let expected = if d >= c * (c + 1) / 2 {
                    table.get((d - c * (c + 1) / 2) as i64).unwrap()
                } else {
                    BigUint::zero()
                };
                assert_eq!(got, expected, "c={c} d={d}");
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_systems_bruteforce(2, 3), BigUint::from(1u32));
        assert_eq!(count_systems_bruteforce(1, 0), BigUint::zero());
        assert_eq!(count_systems_bruteforce(0, 4), BigUint::from(5u32));
    }
}
