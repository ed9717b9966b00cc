//! Integer partitions, strict partitions, and the partition function `p(n)`.
//!
//! `p(n)` is computed two independent ways:
//!
//! - [`p_table`]: the pentagonal-number recurrence
//!   `p(n) = sum_{m>=1} (-1)^(m+1) [p(n - m(3m-1)/2) + p(n - m(3m+1)/2)]`,
//!   O(n^(3/2)) table construction, arbitrary precision;
//! - [`p_bruteforce`]: exhaustive enumeration, the oracle the table is
//!   checked against at desk scale.
//!
//! Enumeration order is canonical everywhere: part lists are emitted in
//! lexicographically decreasing order, so golden tests are byte-stable.

use std::fmt;
use std::io::{BufRead, BufReader, Read, Write};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::Result;

/// A partition of a nonnegative integer: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with every part >= 1.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p >= 1) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::NotWeaklyDecreasing)
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The partitioned integer: the sum of all parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// A partition into distinct parts: strictly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<u64>,
}

impl StrictPartition {
    /// Validates that `parts` is strictly decreasing with every part >= 1.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p >= 1) && parts.windows(2).all(|w| w[0] > w[1]);
        if ok {
            Ok(StrictPartition { parts })
        } else {
            Err(Error::NotStrictlyDecreasing)
        }
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Part-parity restriction for strict enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityFilter {
    Any,
    EvenOnly,
    OddOnly,
}

impl ParityFilter {
    fn admits(self, part: u64) -> bool {
        match self {
            ParityFilter::Any => true,
            ParityFilter::EvenOnly => part % 2 == 0,
            ParityFilter::OddOnly => part % 2 == 1,
        }
    }
}

/// All partitions of `n` in lexicographically decreasing order.
///
/// `n = 0` yields the single empty partition.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = max_part.min(remaining);
        for k in (1..=top).rev() {
            current.push(k);
            rec(remaining - k, k, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All strictly decreasing partitions of `n` whose parts satisfy `filter`,
/// in lexicographically decreasing order. Returns an empty list when no such
/// partition exists.
pub fn enumerate_strict_partitions(n: u64, filter: ParityFilter) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        remaining: u64,
        max_part: u64,
        filter: ParityFilter,
        current: &mut Vec<u64>,
        out: &mut Vec<StrictPartition>,
    ) {
        if remaining == 0 {
            out.push(StrictPartition {
                parts: current.clone(),
            });
            return;
        }
        let top = max_part.min(remaining);
        for k in (1..=top).rev() {
            if !filter.admits(k) {
                continue;
            }
            current.push(k);
            rec(remaining - k, k - 1, filter, current, out);
            current.pop();
        }
    }
    rec(n, n, filter, &mut current, &mut out);
    out
}

/// The generalized pentagonal pair `(m(3m-1)/2, m(3m+1)/2)` for `m >= 1`.
pub fn pentagonal_pair(m: u64) -> Result<(u64, u64)> {
    if m == 0 {
        return Err(Error::ZeroPentagonalIndex);
    }
    Ok((m * (3 * m - 1) / 2, m * (3 * m + 1) / 2))
}

/// Immutable table of `p(0..=N)`.
///
/// Lookups with a negative argument return 0; that convention lives here, not
/// in table padding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    values: Vec<BigUint>,
}

impl CountTable {
    /// Largest `n` the table covers.
    pub fn n_max(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// `p(m)` with the convention `p(m) = 0` for negative `m`.
    /// Returns `None` when `m` exceeds the table.
    pub fn get(&self, m: i64) -> Option<BigUint> {
        if m < 0 {
            Some(BigUint::zero())
        } else {
            self.values.get(m as usize).cloned()
        }
    }

    /// Serializes as a header line `ptable v1 N=<N>` followed by one decimal
    /// value per line. Bit-exact decimal text.
    pub fn write_to<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "ptable v1 N={}", self.n_max())?;
        for v in &self.values {
            writeln!(w, "{v}")?;
        }
        Ok(())
    }

    /// Parses the [`write_to`](Self::write_to) format, validating the header
    /// and the entry count.
    pub fn read_from<R: Read>(r: R) -> Result<CountTable> {
        let mut lines = BufReader::new(r).lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::CorruptTable("empty file".into()))?
            .map_err(|e| Error::CorruptTable(e.to_string()))?;
        let n: u64 = header
            .strip_prefix("ptable v1 N=")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::CorruptTable(format!("bad header {header:?}")))?;
        let mut values = Vec::with_capacity(n as usize + 1);
        for line in lines {
            let line = line.map_err(|e| Error::CorruptTable(e.to_string()))?;
            if line.is_empty() {
                continue;
            }
            let v = BigUint::from_str(&line)
                .map_err(|e| Error::CorruptTable(format!("bad entry {line:?}: {e}")))?;
            values.push(v);
        }
        if values.len() as u64 != n + 1 {
            return Err(Error::CorruptTable(format!(
                "expected {} entries, found {}",
                n + 1,
                values.len()
            )));
        }
        if values[0] != BigUint::one() {
            return Err(Error::CorruptTable("p(0) != 1".into()));
        }
        Ok(CountTable { values })
    }
}

/// Table of `p(0..=n_max)` by the pentagonal-number recurrence.
pub fn p_table(n_max: u64) -> CountTable {
    let mut values: Vec<BigUint> = Vec::with_capacity(n_max as usize + 1);
    values.push(BigUint::one());
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for m in 1.. {
            let (g_minus, g_plus) = pentagonal_pair(m).expect("m >= 1");
            if g_minus > n {
                break;
            }
            let sign = if m % 2 == 1 { 1 } else { -1 };
            let mut term = BigInt::from(values[(n - g_minus) as usize].clone());
            if g_plus <= n {
                term += BigInt::from(values[(n - g_plus) as usize].clone());
            }
            acc += sign * term;
        }
        let (_, digits) = acc.into_parts();
        values.push(digits);
    }
    CountTable { values }
}

/// `p(n)` by exhaustive enumeration. Intended for small `n`; the table's
/// independent oracle.
pub fn p_bruteforce(n: u64) -> BigUint {
    BigUint::from(enumerate_partitions(n).len())
}

/// Evaluates the full alternating pentagonal sum
/// `p(n) + sum_{m>=1} (-1)^m [p(n - m(3m-1)/2) + p(n - m(3m+1)/2)]`,
/// which is identically zero for `n >= 1`.
pub fn euler_alternating_check(n: u64, table: &CountTable) -> Result<BigInt> {
    if n == 0 || n > table.n_max() {
        return Err(Error::OutOfRange(n, table.n_max()));
    }
    let mut acc = BigInt::from(table.get(n as i64).expect("in range"));
    for m in 1.. {
        let (g_minus, g_plus) = pentagonal_pair(m)?;
        if g_minus > n {
            break;
        }
        let sign = if m % 2 == 1 { -1 } else { 1 };
        let mut term = BigInt::from(table.get(n as i64 - g_minus as i64).expect("in range"));
        term += BigInt::from(table.get(n as i64 - g_plus as i64).expect("in range"));
        acc += sign * term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts_of(list: &[Partition]) -> Vec<Vec<u64>> {
        list.iter().map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn enumerate_zero_is_single_empty() {
        assert_eq!(parts_of(&enumerate_partitions(0)), vec![Vec::<u64>::new()]);
    }

    #[test]
    fn enumerate_four_exact_order() {
        assert_eq!(
            parts_of(&enumerate_partitions(4)),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn enumerate_five_has_seven() {
        assert_eq!(enumerate_partitions(5).len(), 7);
    }

    #[test]
    fn enumeration_is_canonical_and_duplicate_free() {
        for n in 0..=30 {
            let list = enumerate_partitions(n);
            for p in &list {
                assert_eq!(p.weight(), n);
            }
            // lexicographically decreasing implies duplicate-free
            for w in list.windows(2) {
                assert!(w[0] > w[1], "order broken at n={n}");
            }
        }
    }

    #[test]
    fn strict_odd_five() {
        let got = enumerate_strict_partitions(5, ParityFilter::OddOnly);
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].parts(), &[5]);
    }

    #[test]
    fn strict_even_six() {
        let got: Vec<Vec<u64>> = enumerate_strict_partitions(6, ParityFilter::EvenOnly)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(got, vec![vec![6], vec![4, 2]]);
    }

    #[test]
    fn strict_zero_any() {
        let got = enumerate_strict_partitions(0, ParityFilter::Any);
        assert_eq!(got.len(), 1);
        assert!(got[0].is_empty());
    }

    #[test]
    fn strict_matches_filtered_plain_enumeration() {
        for n in 0..=30 {
            let all = enumerate_partitions(n);
            for (filter, pred) in [
                (ParityFilter::Any, None),
                (ParityFilter::EvenOnly, Some(0u64)),
                (ParityFilter::OddOnly, Some(1u64)),
            ] {
                let expected = all
                    .iter()
                    .filter(|p| {
                        p.parts().windows(2).all(|w| w[0] > w[1])
                            && pred.is_none_or(|r| p.parts().iter().all(|&x| x % 2 == r))
                    })
                    .count();
                assert_eq!(
                    enumerate_strict_partitions(n, filter).len(),
                    expected,
                    "n={n} filter={filter:?}"
                );
            }
        }
    }

    #[test]
    fn pentagonal_pairs() {
        assert_eq!(pentagonal_pair(1).unwrap(), (1, 2));
        assert_eq!(pentagonal_pair(2).unwrap(), (5, 7));
        assert_eq!(pentagonal_pair(3).unwrap(), (12, 15));
        assert_eq!(pentagonal_pair(0), Err(Error::ZeroPentagonalIndex));
    }

    #[test]
    fn p_table_small_values() {
        assert_eq!(p_table(0).values(), &[BigUint::one()]);
        let t = p_table(5);
        let got: Vec<u64> = t.values().iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(got, vec![1, 1, 2, 3, 5, 7]);
        assert_eq!(p_table(10).get(10).unwrap(), BigUint::from(42u32));
    }

    #[test]
    fn p_table_matches_bruteforce() {
        let t = p_table(45);
        for n in 0..=45 {
            assert_eq!(t.get(n).unwrap(), p_bruteforce(n as u64), "n={n}");
        }
    }

    #[test]
    fn bruteforce_spot_values() {
        assert_eq!(p_bruteforce(0), BigUint::one());
        assert_eq!(p_bruteforce(4), BigUint::from(5u32));
        assert_eq!(p_bruteforce(7), BigUint::from(15u32));
    }

    #[test]
    fn negative_lookup_is_zero() {
        let t = p_table(5);
        assert_eq!(t.get(-3).unwrap(), BigUint::zero());
        assert_eq!(t.get(6), None);
    }

    #[test]
    fn euler_identity_small_and_large() {
        let t = p_table(500);
        for n in [1u64, 12, 100] {
            assert_eq!(euler_alternating_check(n, &t).unwrap(), BigInt::zero());
        }
        assert_eq!(
            euler_alternating_check(0, &t),
            Err(Error::OutOfRange(0, 500))
        );
        assert_eq!(
            euler_alternating_check(501, &t),
            Err(Error::OutOfRange(501, 500))
        );
    }

    #[test]
    fn table_roundtrips_through_text() {
        let t = p_table(64);
        let mut buf = Vec::new();
        t.write_to(&mut buf).unwrap();
        let back = CountTable::read_from(&buf[..]).unwrap();
        assert_eq!(back, t);
        assert!(buf.starts_with(b"ptable v1 N=64\n1\n1\n2\n"));
    }

    #[test]
    fn corrupt_tables_rejected() {
        assert!(CountTable::read_from(&b""[..]).is_err());
        assert!(CountTable::read_from(&b"ptable v2 N=1\n1\n1\n"[..]).is_err());
        // truncated body
        assert!(CountTable::read_from(&b"ptable v1 N=3\n1\n1\n2\n"[..]).is_err());
        // non-numeric entry
        assert!(CountTable::read_from(&b"ptable v1 N=1\n1\nx\n"[..]).is_err());
    }

    #[test]
    fn invalid_constructions_rejected() {
        assert!(Partition::new(vec![3, 4]).is_err());
        assert!(Partition::new(vec![3, 0]).is_err());
        assert!(StrictPartition::new(vec![3, 3]).is_err());
        assert!(Partition::new(vec![4, 3, 3, 1]).is_ok());
        assert!(StrictPartition::new(vec![4, 3, 1]).is_ok());
    }
}
