//! Prime pairs: words holding exactly one matched bracket pair.
//!
//! `p_{n,r}` has its `(` at position `n` and its `)` at position `r`, both
//! counted from the right, so as a word it reads `(0^{n-r-1})0^{r-1}`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::numbers::motzkin;
use crate::ranking::Weight;
use crate::words::{MotzkinWord, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("invalid prime pair coordinates ({n}, {r}); need n > r >= 1")]
    InvalidCoordinates { n: usize, r: usize },
    #[error("prime pairs are indexed from 1")]
    ZeroIndex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePair {
    n: usize,
    r: usize,
}

impl PrimePair {
    pub fn new(n: usize, r: usize) -> Result<Self, PairError> {
        if r < 1 || n <= r {
            return Err(PairError::InvalidCoordinates { n, r });
        }
        Ok(Self { n, r })
    }

    pub(crate) fn new_unchecked(n: usize, r: usize) -> Self {
        debug_assert!(n > r && r >= 1);
        Self { n, r }
    }

    /// Position of `(`; also the range (length) of the pair's word.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Position of `)`.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Inverse of [`pair_index`].
    pub fn from_index(index: usize) -> Result<Self, PairError> {
        if index == 0 {
            return Err(PairError::ZeroIndex);
        }
        // range n holds indices T_{n-2} + 1 ..= T_{n-1}
        let mut n = 2;
        while (n - 1) * n / 2 < index {
            n += 1;
        }
        Ok(Self::new_unchecked(n, index - (n - 1) * (n - 2) / 2))
    }
}

impl fmt::Display for PrimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.r)
    }
}

pub fn pair_word(p: PrimePair) -> MotzkinWord {
    let mut s = vec![Symbol::Zero; p.n];
    s[0] = Symbol::Open;
    s[p.n - p.r] = Symbol::Close;
    MotzkinWord::from_symbols_unchecked(s)
}

/// 1-based index of `p` in the set of prime pairs: `r + T_{n-2}`.
pub fn pair_index(p: PrimePair) -> usize {
    p.r + (p.n - 1) * (p.n - 2) / 2
}

/// Closed-form weight `M_{n-1} + M_{r+1} - M_r - M_{r-1}`.
pub fn pair_weight(p: PrimePair) -> Weight {
    let w = motzkin(p.n - 1) + motzkin(p.r + 1) - motzkin(p.r) - motzkin(p.r - 1);
    Weight::new(w).expect("pair weights are positive")
}

/// How two prime pairs can sit together in one word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairRelation {
    FirstInsideSecond,
    SecondInsideFirst,
    Disjoint,
    /// Shared position or crossing brackets.
    Conflict,
}

impl PairRelation {
    pub fn mirrored(self) -> Self {
        match self {
            PairRelation::FirstInsideSecond => PairRelation::SecondInsideFirst,
            PairRelation::SecondInsideFirst => PairRelation::FirstInsideSecond,
            other => other,
        }
    }

    pub fn is_compatible(self) -> bool {
        self != PairRelation::Conflict
    }
}

pub fn classify_relation(p: PrimePair, q: PrimePair) -> PairRelation {
    if q.n > p.n && p.r > q.r {
        PairRelation::FirstInsideSecond
    } else if p.n > q.n && q.r > p.r {
        PairRelation::SecondInsideFirst
    } else if q.r > p.n || p.r > q.n {
        PairRelation::Disjoint
    } else {
        PairRelation::Conflict
    }
}

/// Row `n` of the weight triangle: weights of `p_{n,1} .. p_{n,n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightRow {
    pub n: usize,
    pub weights: Vec<BigInt>,
}

/// Weight triangle rows `2..=max_n`, shortest range first.
pub fn weight_triangle(max_n: usize) -> Vec<WeightRow> {
    (2..=max_n)
        .map(|n| WeightRow {
            n,
            weights: (1..n)
                .map(|r| pair_weight(PrimePair::new_unchecked(n, r)).into_inner())
                .collect(),
        })
        .collect()
}

/// All prime pairs with `n <= max_n` in index order.
pub fn pairs_up_to(max_n: usize) -> impl Iterator<Item = PrimePair> {
    (2..=max_n).flat_map(|n| (1..n).map(move |r| PrimePair::new_unchecked(n, r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::delta;
    use crate::ranking::rank;
    use crate::words::enumerate_range;

    fn pp(n: usize, r: usize) -> PrimePair {
        PrimePair::new(n, r).unwrap()
    }

    #[test]
    fn coordinates_are_validated() {
        assert!(PrimePair::new(3, 3).is_err());
        assert!(PrimePair::new(3, 0).is_err());
        assert!(PrimePair::new(2, 1).is_ok());
    }

    #[test]
    fn words_of_pairs() {
        assert_eq!(pair_word(pp(7, 4)).to_string(), "(00)000");
        assert_eq!(pair_word(pp(2, 1)).to_string(), "()");
        assert_eq!(pair_word(pp(5, 1)).to_string(), "(000)");
    }

    #[test]
    fn indices() {
        assert_eq!(pair_index(pp(2, 1)), 1);
        assert_eq!(pair_index(pp(3, 1)), 2);
        assert_eq!(pair_index(pp(7, 4)), 19);
        // enumerate the set in row order and compare
        let listed: Vec<_> = (2..=7)
            .flat_map(|n| enumerate_range(n).filter(|w| w.count_pairs() == 1))
            .collect();
        let pos = listed
            .iter()
            .position(|w| *w == pair_word(pp(7, 4)))
            .unwrap();
        assert_eq!(pos + 1, 19);
        for (i, p) in pairs_up_to(12).enumerate() {
            assert_eq!(pair_index(p), i + 1);
            assert_eq!(PrimePair::from_index(i + 1).unwrap(), p);
        }
        assert_eq!(PrimePair::from_index(0), Err(PairError::ZeroIndex));
    }

    #[test]
    fn weights() {
        assert_eq!(pair_weight(pp(7, 4)), Weight::from(59));
        assert_eq!(pair_weight(pp(2, 1)), Weight::from(1));
        assert_eq!(pair_weight(pp(8, 7)), Weight::from(272));
        for p in pairs_up_to(12) {
            assert_eq!(pair_weight(p), rank(&pair_word(p)).unwrap(), "{p}");
            assert_eq!(
                *pair_weight(p).value(),
                motzkin(p.n() - 1) + delta(p.r()).unwrap()
            );
        }
    }

    #[test]
    fn table_rows() {
        let t = weight_triangle(8);
        assert_eq!(t.len(), 7);
        let row = |n: usize| -> Vec<i64> {
            t[n - 2]
                .weights
                .iter()
                .map(|w| i64::try_from(w).unwrap())
                .collect()
        };
        assert_eq!(row(2), [1]);
        assert_eq!(row(5), [9, 10, 12, 17]);
        assert_eq!(row(8), [127, 128, 130, 135, 148, 182, 272]);
        for r in &t {
            assert_eq!(r.weights[0], motzkin(r.n - 1));
            for j in 1..r.weights.len() {
                let step = &r.weights[j] - &r.weights[j - 1];
                assert_eq!(step, delta(j + 1).unwrap() - delta(j).unwrap());
            }
        }
    }

    #[test]
    fn pair_counts_per_range() {
        for n in 2..=12 {
            let singles = enumerate_range(n).filter(|w| w.count_pairs() == 1).count();
            assert_eq!(singles, n - 1);
        }
    }

    #[test]
    fn relations() {
        assert_eq!(
            classify_relation(pp(5, 3), pp(6, 4)),
            PairRelation::Conflict
        );
        assert_eq!(
            classify_relation(pp(7, 4), pp(6, 5)),
            PairRelation::SecondInsideFirst
        );
        assert_eq!(
            classify_relation(pp(7, 4), pp(3, 2)),
            PairRelation::Disjoint
        );
        assert_eq!(
            classify_relation(pp(7, 4), pp(7, 2)),
            PairRelation::Conflict
        );
        assert_eq!(
            classify_relation(pp(7, 4), pp(5, 4)),
            PairRelation::Conflict
        );
        for p in pairs_up_to(9) {
            for q in pairs_up_to(9) {
                assert_eq!(classify_relation(p, q), classify_relation(q, p).mirrored());
            }
        }
    }
}
