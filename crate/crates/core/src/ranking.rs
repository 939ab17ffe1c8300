//! Rank and unrank in the row.
//!
//! The rank of a unique word `w` of length `n` is `M_{n-1}` (the number of
//! unique words in shorter ranges plus the word `"0"`) plus the number of
//! unique `n`-words lexicographically smaller than `w`. The second term is a
//! digit DP over completion counts `c(l, h)`: the number of ways to finish a
//! word with `l` more symbols starting from nesting height `h`.

use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::numbers::motzkin;
use crate::words::{MotzkinWord, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankError {
    #[error("all-zero word {0} has no counterpart in the row")]
    NotInRow(String),
    #[error("weights are non-negative, got {0}")]
    NegativeWeight(BigInt),
    #[error("invalid weight {0:?}")]
    Malformed(String),
}

/// Index of a word in the row; `"0"` has weight 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigInt);

impl Weight {
    pub fn new(value: BigInt) -> Result<Self, RankError> {
        if value.sign() == Sign::Minus {
            return Err(RankError::NegativeWeight(value));
        }
        Ok(Self(value))
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn into_inner(self) -> BigInt {
        self.0
    }
}

impl From<u64> for Weight {
    fn from(v: u64) -> Self {
        Self(BigInt::from(v))
    }
}

impl From<BigUint> for Weight {
    fn from(v: BigUint) -> Self {
        Self(BigInt::from(v))
    }
}

impl FromStr for Weight {
    type Err = RankError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v: BigInt = s.parse().map_err(|_| RankError::Malformed(s.to_owned()))?;
        Self::new(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl PartialEq<BigInt> for Weight {
    fn eq(&self, other: &BigInt) -> bool {
        &self.0 == other
    }
}

/// Triangular memo of completion counts. Row `l` holds `c(l, h)` for
/// `h = 0..=l`; larger heights cannot reach zero in `l` steps.
pub struct CompletionTable {
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl Default for CompletionTable {
    fn default() -> Self {
        Self::new()
    }
}

impl CompletionTable {
    pub const fn new() -> Self {
        Self {
            rows: RwLock::new(Vec::new()),
        }
    }

    pub fn get(&self, l: usize, h: usize) -> BigInt {
        if h > l {
            return BigInt::zero();
        }
        {
            let rows = self.rows.read().expect("completion table poisoned");
            if let Some(row) = rows.get(l) {
                return row[h].clone();
            }
        }
        let mut rows = self.rows.write().expect("completion table poisoned");
        while rows.len() <= l {
            let row = match rows.last() {
                None => vec![BigInt::one()],
                Some(prev) => {
                    let len = prev.len() + 1;
                    let at = |h: usize| prev.get(h).cloned().unwrap_or_default();
                    (0..len)
                        .map(|h| {
                            let mut v = at(h) + at(h + 1);
                            if h > 0 {
                                v += at(h - 1);
                            }
                            v
                        })
                        .collect()
                }
            };
            rows.push(row);
        }
        rows[l][h].clone()
    }

    /// Lengths with a memoized row.
    pub fn rows(&self) -> usize {
        self.rows.read().expect("completion table poisoned").len()
    }
}

static COMPLETIONS: LazyLock<CompletionTable> = LazyLock::new(CompletionTable::new);

/// `c(l, h)`: symbol sequences of length `l` taking height `h` to 0 without
/// going below 0.
pub fn completion_count(l: usize, h: usize) -> BigInt {
    COMPLETIONS.get(l, h)
}

/// Weight of `w`. Words with leading zeros are ranked as the word they were
/// inherited from; an all-zero word other than `"0"` is rejected.
pub fn rank(w: &MotzkinWord) -> Result<Weight, RankError> {
    let Some(core) = w.strip_leading_zeros() else {
        return if w.len() == 1 {
            Ok(Weight(BigInt::zero()))
        } else {
            Err(RankError::NotInRow(w.to_string()))
        };
    };
    let symbols = core.symbols();
    let n = symbols.len();
    let mut weight = motzkin(n - 1);
    let mut height = 1isize;
    for (i, &actual) in symbols.iter().enumerate().skip(1) {
        let remaining = n - 1 - i;
        for smaller in Symbol::ALL.into_iter().filter(|&s| s < actual) {
            let h = height + smaller.step();
            if h >= 0 {
                weight += completion_count(remaining, h as usize);
            }
        }
        height += actual.step();
    }
    Ok(Weight(weight))
}

/// The word of weight `i`.
pub fn unrank(i: &Weight) -> MotzkinWord {
    let i = i.value();
    if i.is_zero() {
        return MotzkinWord::parse("0").expect("literal word");
    }
    let mut n = 2;
    while motzkin(n) <= *i {
        n += 1;
    }
    let mut offset = i - motzkin(n - 1);
    let mut symbols = Vec::with_capacity(n);
    symbols.push(Symbol::Open);
    let mut height = 1isize;
    for pos in 1..n {
        let remaining = n - 1 - pos;
        let mut chosen = None;
        for s in Symbol::ALL {
            let h = height + s.step();
            if h < 0 {
                continue;
            }
            let count = completion_count(remaining, h as usize);
            if offset < count {
                chosen = Some(s);
                break;
            }
            offset -= count;
        }
        let s = chosen.expect("offset lies inside range n");
        height += s.step();
        symbols.push(s);
    }
    MotzkinWord::from_symbols_unchecked(symbols)
}
