//! The Motzkin triangle `U(n, k)`: unique `n`-words with exactly `k` pairs.
//!
//! Entries come from `binom(n-1, 2k-1) * Cat(k)`. Deleting the first bracket
//! of a word leaves `n-1` slots holding `2k-1` brackets (bars) and the zeros
//! (stars); the binomial places the bars, the Catalan number shapes them.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::numbers::{binomial, catalan, motzkin_increment, triangular};

pub fn u_nk(n: usize, k: usize) -> BigInt {
    if k == 0 || n < 2 * k {
        return BigInt::zero();
    }
    binomial(n - 1, 2 * k - 1) * catalan(k)
}

pub fn u_n1(n: usize) -> BigInt {
    BigInt::from(n.saturating_sub(1))
}

/// Second pairs that fit beside `p_{n,r}` without touching it (zone A).
pub fn zone_a(_n: usize, r: usize) -> BigInt {
    if r < 3 {
        BigInt::zero()
    } else {
        triangular(r - 2)
    }
}

/// Second pairs that nest inside `p_{n,r}` (zone B).
pub fn zone_b(n: usize, r: usize) -> BigInt {
    if r + 3 > n {
        BigInt::zero()
    } else {
        triangular(n - r - 2)
    }
}

/// `U(n, 2)` by sweeping the closing bracket of the leading pair across the
/// column and counting both compatible zones.
pub fn u_n2_via_zones(n: usize) -> BigInt {
    (1..n).map(|r| zone_a(n, r) + zone_b(n, r)).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReport {
    pub k: usize,
    /// `U(2k, k)`, `U(2k+1, k)`, `U(2k+2, k)`.
    pub values: [BigInt; 3],
    /// `Cat(k)`, `2k Cat(k)`, `k(2k+1) Cat(k)`.
    pub expected: [BigInt; 3],
    /// Every entry left of `n = 2k` is zero.
    pub zero_prefix: bool,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        self.zero_prefix && self.values == self.expected
    }
}

pub fn row_properties(k: usize) -> RowReport {
    let cat = catalan(k);
    RowReport {
        k,
        values: [u_nk(2 * k, k), u_nk(2 * k + 1, k), u_nk(2 * k + 2, k)],
        expected: [cat.clone(), &cat * (2 * k), cat * (k * (2 * k + 1))],
        zero_prefix: (1..2 * k).all(|n| u_nk(n, k).is_zero()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicateReport {
    pub k: usize,
    /// `U(3k, k-1)`.
    pub left: BigInt,
    /// `U(3k, k)`.
    pub center: BigInt,
    /// `U(3k, k+1)`.
    pub right: BigInt,
}

impl DuplicateReport {
    pub fn duplicates(&self) -> bool {
        self.left == self.right
    }

    /// `(k-1) U(3k, k) = (k+2) U(3k, k+1)`.
    pub fn companion_holds(&self) -> bool {
        &self.center * (self.k - 1) == &self.right * (self.k + 2)
    }

    /// The three central entries sum to `3k/(k+2) U(3k, k)`, checked by
    /// cross-multiplying.
    pub fn central_sum_holds(&self) -> bool {
        let sum = &self.left + &self.center + &self.right;
        sum * (self.k + 2) == &self.center * (3 * self.k)
    }
}

/// Panics if `k < 2`.
pub fn duplicate_report(k: usize) -> DuplicateReport {
    assert!(k >= 2, "duplicate check needs k >= 2");
    DuplicateReport {
        k,
        left: u_nk(3 * k, k - 1),
        center: u_nk(3 * k, k),
        right: u_nk(3 * k, k + 1),
    }
}

pub fn duplicate_check(k: usize) -> bool {
    let r = duplicate_report(k);
    r.duplicates() && r.companion_holds()
}

/// Column index `k` of the largest entry in row `n` (the first, on ties).
pub fn row_argmax(n: usize) -> usize {
    (1..=n / 2)
        .fold((1, BigInt::zero()), |(best, v), k| {
            let u = u_nk(n, k);
            if u > v {
                (k, u)
            } else {
                (best, v)
            }
        })
        .0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// One line per pair count `k`, columns run over `n`.
    ByRowsK,
    /// One line per length `n`, columns run over `k`.
    ByRowsN,
}

/// Nonzero entries `U(n, k)` for `2 <= n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    max_n: usize,
    // entries[n - 2][k - 1], k = 1..=n/2
    entries: Vec<Vec<BigInt>>,
}

impl TriangleTable {
    pub fn build(max_n: usize) -> Self {
        let entries = (2..=max_n)
            .map(|n| (1..=n / 2).map(|k| u_nk(n, k)).collect())
            .collect();
        Self { max_n, entries }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn max_k(&self) -> usize {
        self.max_n / 2
    }

    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if n < 2 || n > self.max_n || k == 0 {
            return BigInt::zero();
        }
        self.entries[n - 2].get(k - 1).cloned().unwrap_or_default()
    }

    /// Entries of length `n`, `k = 1..=n/2`.
    pub fn row_n(&self, n: usize) -> &[BigInt] {
        &self.entries[n - 2]
    }

    /// `(n, U(n, k))` for `n = 2k..=max_n`.
    pub fn row_k(&self, k: usize) -> Vec<(usize, BigInt)> {
        (2 * k..=self.max_n).map(|n| (n, self.get(n, k))).collect()
    }

    pub fn column_sum(&self, n: usize) -> BigInt {
        self.row_n(n).iter().sum()
    }

    /// Every length's entries add up to the range size `U_n`.
    pub fn sums_match(&self) -> bool {
        (2..=self.max_n).all(|n| self.column_sum(n) == motzkin_increment(n))
    }
}

pub fn triangle_table(max_n: usize) -> TriangleTable {
    TriangleTable::build(max_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::tetrahedral;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(u_nk(10, 3), big(630));
        assert_eq!(u_nk(6, 2), big(20));
        assert_eq!(u_nk(18, 9), big(4862));
        assert_eq!(u_nk(3, 2), big(0));
    }

    #[test]
    fn single_pair_column() {
        assert_eq!(u_n1(8), big(7));
        assert_eq!(u_n1(2), big(1));
        assert_eq!(u_n1(1), big(0));
        for n in 2..=40 {
            assert_eq!(u_n1(n), u_nk(n, 1));
        }
    }

    #[test]
    fn zones() {
        assert_eq!(u_n2_via_zones(4), big(2));
        assert_eq!(u_n2_via_zones(6), big(20));
        assert_eq!(u_n2_via_zones(9), big(112));
        for n in 4..=40 {
            assert_eq!(u_n2_via_zones(n), u_nk(n, 2));
            assert_eq!(u_n2_via_zones(n), tetrahedral(n - 3) * 2);
            let a: Vec<_> = (1..n).map(|r| zone_a(n, r)).collect();
            let mut b: Vec<_> = (1..n).map(|r| zone_b(n, r)).collect();
            b.reverse();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn row_reports() {
        assert_eq!(row_properties(3).values, [big(5), big(30), big(105)]);
        assert_eq!(row_properties(1).values, [big(1), big(2), big(3)]);
        assert_eq!(row_properties(6).values, [big(132), big(1584), big(10296)]);
        for k in 1..=8 {
            assert!(row_properties(k).passed(), "k = {k}");
        }
    }

    #[test]
    fn duplicates() {
        let r = duplicate_report(2);
        assert_eq!((r.left.clone(), r.right.clone()), (big(5), big(5)));
        let r = duplicate_report(6);
        assert_eq!(
            (r.left.clone(), r.right.clone()),
            (big(1021020), big(1021020))
        );
        let r = duplicate_report(3);
        assert_eq!((r.left.clone(), r.right.clone()), (big(112), big(112)));
        for k in 2..=8 {
            assert!(duplicate_check(k));
            assert!(duplicate_report(k).central_sum_holds());
            assert_eq!(row_argmax(3 * k), k);
        }
    }

    #[test]
    fn tables() {
        let t = triangle_table(15);
        assert_eq!(t.column_sum(15), big(196938));
        assert!(t.sums_match());
        let t6 = triangle_table(6);
        assert_eq!(t6.row_n(6), [big(5), big(20), big(5)]);
        let t2 = triangle_table(2);
        assert_eq!(t2.row_n(2), [big(1)]);
        assert_eq!(t2.max_k(), 1);
        assert_eq!(t.row_k(7), vec![(14, big(429)), (15, big(6006))]);
        assert!(triangle_table(30).sums_match());
    }

    #[test]
    fn zero_boundary() {
        for n in 2..=30 {
            for k in 1..=16 {
                assert_eq!(u_nk(n, k).is_zero(), n < 2 * k);
            }
        }
    }
}
