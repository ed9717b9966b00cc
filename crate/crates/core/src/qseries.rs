//! Truncated formal power series over arbitrary-precision integers and the
//! generating functions of the counting identities:
//!
//! - [`overline_po_series`]: `(-q;q^2)_inf / (q;q^2)_inf`, the overpartitions
//!   of `n` into odd parts;
//! - [`e_series`]: `(-q;q^2)_inf^2 (-q^2;q^2)_inf`, the two-colored
//!   partitions counted by `E(n)` (distinct parts per color, even parts blue);
//! - [`signed_difference_series`]: the same products with one or all factor
//!   families sign-flipped, giving `E0(n)-E1(n)` and `E2(n)-E3(n)`.
//!
//! Products are built factor-by-factor with immediate truncation: each sparse
//! factor `1 ± q^e` (or the geometric expansion of `1/(1-q^e)`) costs O(N),
//! so a factor family costs O(N^2/step). Exact integer arithmetic throughout;
//! no floating point, no FFT.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::Result;

/// A formal power series truncated at `q^(N+1)`: exact integer coefficients
/// of `q^0 ..= q^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series at truncation order `order`.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1 at truncation order `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from explicit coefficients of `q^0 ..= q^N`.
    /// `coeffs` must be nonempty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least coeff[0]");
        TruncatedSeries { coeffs }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`. Panics if `n` exceeds the truncation order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// In-place multiplication by `1 + q^e` (no-op when `e` exceeds the
    /// truncation order; such factors are identically 1 at this truncation).
    fn mul_one_plus(&mut self, e: usize) {
        for i in (e..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - e];
        }
    }

    /// In-place multiplication by `1 - q^e`.
    fn mul_one_minus(&mut self, e: usize) {
        for i in (e..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - e];
        }
    }

    /// In-place multiplication by `1 + q^e + q^(2e) + ...`, the truncated
    /// geometric expansion of `1/(1 - q^e)`.
    fn mul_inv_one_minus(&mut self, e: usize) {
        if e == 0 {
            return;
        }
        for i in e..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - e];
        }
    }
}

/// Exact Cauchy product modulo `q^(N+1)`. Both inputs must share the same
/// truncation order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    if a.truncation_order() != b.truncation_order() {
        return Err(Error::TruncationMismatch {
            left: a.truncation_order(),
            right: b.truncation_order(),
        });
    }
    let n = a.truncation_order();
    let mut out = TruncatedSeries::zero(n);
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (bj, oij) in b.coeffs[..=n - i].iter().zip(out.coeffs[i..].iter_mut()) {
            *oij += ai * bj;
        }
    }
    Ok(out)
}

/// Kind of sparse product factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `1 + q^e`
    OnePlus,
    /// `1 - q^e`
    OneMinus,
    /// `1/(1 - q^e)`, expanded as the truncated geometric series
    InvOneMinus,
}

/// An infinite family of product factors with exponents
/// `offset, offset+step, offset+2*step, ...`; factors past the truncation
/// order contribute identically 1 and are skipped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorSpec {
    pub offset: u64,
    pub step: u64,
    pub kind: FactorKind,
}

impl FactorSpec {
    pub fn new(offset: u64, step: u64, kind: FactorKind) -> Self {
        assert!(offset >= 1 && step >= 1, "factor exponents must grow");
        FactorSpec { offset, step, kind }
    }
}

/// Expands the product of all factors in all families, exactly, modulo
/// `q^(order+1)`. The empty factor list yields the constant 1.
pub fn truncated_product(factors: &[FactorSpec], order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for spec in factors {
        let mut e = spec.offset;
        while e <= order as u64 {
            match spec.kind {
                FactorKind::OnePlus => s.mul_one_plus(e as usize),
                FactorKind::OneMinus => s.mul_one_minus(e as usize),
                FactorKind::InvOneMinus => s.mul_inv_one_minus(e as usize),
            }
            e += spec.step;
        }
    }
    s
}

/// `sum_n po(n) q^n = (-q;q^2)_inf / (q;q^2)_inf`: overpartitions of `n`
/// into odd parts.
pub fn overline_po_series(order: usize) -> TruncatedSeries {
    truncated_product(
        &[
            FactorSpec::new(1, 2, FactorKind::OnePlus),
            FactorSpec::new(1, 2, FactorKind::InvOneMinus),
        ],
        order,
    )
}

/// `sum_n E(n) q^n`: one `(1+q^odd)` family per color for the odd parts,
/// one `(1+q^even)` family for the blue even parts.
pub fn e_series(order: usize) -> TruncatedSeries {
    truncated_product(
        &[
            FactorSpec::new(1, 2, FactorKind::OnePlus),
            FactorSpec::new(1, 2, FactorKind::OnePlus),
            FactorSpec::new(2, 2, FactorKind::OnePlus),
        ],
        order,
    )
}

/// Which part count carries the sign in a signed partition count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignWeight {
    /// Sign `(-1)^(number of even parts)`: yields `E0(n) - E1(n)`.
    EvenParts,
    /// Sign `(-1)^(number of parts)`: yields `E2(n) - E3(n)`.
    AllParts,
}

/// The signed version of [`e_series`]: flipping a factor family from
/// `(1+q^e)` to `(1-q^e)` weights each part of that family by -1.
pub fn signed_difference_series(weight: SignWeight, order: usize) -> TruncatedSeries {
    let odd_kind = match weight {
        SignWeight::EvenParts => FactorKind::OnePlus,
        SignWeight::AllParts => FactorKind::OneMinus,
    };
    truncated_product(
        &[
            FactorSpec::new(1, 2, odd_kind),
            FactorSpec::new(1, 2, odd_kind),
            FactorSpec::new(2, 2, FactorKind::OneMinus),
        ],
        order,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p_table;
    use crate::is_square;
    use proptest::prelude::*;

    fn from_i64(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn difference_of_squares() {
        let a = from_i64(&[1, 1, 0]);
        let b = from_i64(&[1, -1, 0]);
        assert_eq!(series_mul(&a, &b).unwrap(), from_i64(&[1, 0, -1]));
    }

    #[test]
    fn one_is_identity() {
        let s = from_i64(&[3, -2, 7, 0, 5]);
        let one = TruncatedSeries::one(4);
        assert_eq!(series_mul(&one, &s).unwrap(), s);
        assert_eq!(series_mul(&s, &one).unwrap(), s);
    }

    #[test]
    fn geometric_telescopes() {
        let geo = from_i64(&[1, 1, 1, 1, 1, 1]);
        let one_minus = from_i64(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(
            series_mul(&geo, &one_minus).unwrap(),
            TruncatedSeries::one(5)
        );
    }

    #[test]
    fn mismatched_orders_rejected() {
        let a = TruncatedSeries::one(3);
        let b = TruncatedSeries::one(4);
        assert_eq!(
            series_mul(&a, &b),
            Err(Error::TruncationMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn odd_one_minus_family() {
        // (1-q)(1-q^3) truncated at 4
        let s = truncated_product(&[FactorSpec::new(1, 2, FactorKind::OneMinus)], 4);
        assert_eq!(s, from_i64(&[1, -1, 0, -1, 1]));
    }

    #[test]
    fn inv_family_generates_partition_counts() {
        let s = truncated_product(&[FactorSpec::new(1, 1, FactorKind::InvOneMinus)], 10);
        let t = p_table(10);
        for n in 0..=10 {
            assert_eq!(s.coeff(n).clone(), BigInt::from(t.get(n as i64).unwrap()));
        }
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(truncated_product(&[], 3), TruncatedSeries::one(3));
    }

    #[test]
    fn po_series_values() {
        let s = overline_po_series(5);
        assert_eq!(s.coeff(0), &BigInt::from(1));
        assert_eq!(s.coeff(4), &BigInt::from(6));
        assert_eq!(s.coeff(5), &BigInt::from(8));
    }

    #[test]
    fn e_series_values() {
        let s = e_series(5);
        assert_eq!(s.coeff(0), &BigInt::from(1));
        assert_eq!(s.coeff(4), &BigInt::from(6));
        assert_eq!(s.coeff(5), &BigInt::from(8));
    }

    #[test]
    fn signed_difference_values() {
        let a = signed_difference_series(SignWeight::EvenParts, 9);
        assert_eq!(a.coeff(9), &BigInt::from(2));
        assert_eq!(a.coeff(6), &BigInt::from(0));
        let b = signed_difference_series(SignWeight::AllParts, 9);
        assert_eq!(b.coeff(9), &BigInt::from(-2));
    }

    #[test]
    fn signed_differences_live_at_squares() {
        let n = 300;
        let a = signed_difference_series(SignWeight::EvenParts, n);
        let b = signed_difference_series(SignWeight::AllParts, n);
        for i in 1..=n {
            if is_square(i as u64) {
                assert_eq!(a.coeff(i), &BigInt::from(2), "A at {i}");
                let sign = if i % 2 == 0 { 2 } else { -2 };
                assert_eq!(b.coeff(i), &BigInt::from(sign), "B at {i}");
            } else {
                assert!(a.coeff(i).is_zero(), "A at {i}");
                assert!(b.coeff(i).is_zero(), "B at {i}");
            }
        }
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(
            a in prop::collection::vec(-50i64..50, 1..=65),
            b in prop::collection::vec(-50i64..50, 1..=65),
            c in prop::collection::vec(-50i64..50, 1..=65),
        ) {
            let n = a.len().min(b.len()).min(c.len());
            let a = from_i64(&a[..n]);
            let b = from_i64(&b[..n]);
            let c = from_i64(&c[..n]);
            prop_assert_eq!(series_mul(&a, &b).unwrap(), series_mul(&b, &a).unwrap());
            let ab_c = series_mul(&series_mul(&a, &b).unwrap(), &c).unwrap();
            let a_bc = series_mul(&a, &series_mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
        }
    }
}
