//! Exact integer sequences: Motzkin numbers and their increments, Catalan,
//! triangular and tetrahedral numbers, and the weight offsets `delta(r)` of
//! prime pairs.
//!
//! Everything is arbitrary precision. The Motzkin recurrence is quadratic per
//! term, so its prefix is memoized in a process-wide [`SequenceCache`].

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumbersError {
    #[error("delta is indexed from r = 1, got r = {0}")]
    DeltaIndex(usize),
}

/// A memoized prefix of an integer sequence whose next term is a function of
/// all previous terms.
///
/// Readers take a shared lock; the prefix only ever grows, and each term is
/// computed exactly once under the write lock.
pub struct SequenceCache {
    terms: RwLock<Vec<BigInt>>,
    next: fn(&[BigInt]) -> BigInt,
}

impl SequenceCache {
    pub const fn new(next: fn(&[BigInt]) -> BigInt) -> Self {
        Self {
            terms: RwLock::new(Vec::new()),
            next,
        }
    }

    pub fn get(&self, index: usize) -> BigInt {
        {
            let terms = self.terms.read().expect("sequence cache poisoned");
            if let Some(v) = terms.get(index) {
                return v.clone();
            }
        }
        let mut terms = self.terms.write().expect("sequence cache poisoned");
        // another writer may have extended the prefix meanwhile
        while terms.len() <= index {
            let v = (self.next)(&terms);
            terms.push(v);
        }
        terms[index].clone()
    }

    /// Number of terms currently memoized.
    pub fn len(&self) -> usize {
        self.terms.read().expect("sequence cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn next_motzkin(prefix: &[BigInt]) -> BigInt {
    let n = prefix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = prefix[n - 1].clone();
    if n >= 2 {
        for k in 0..=n - 2 {
            m += &prefix[k] * &prefix[n - 2 - k];
        }
    }
    m
}

static MOTZKIN: LazyLock<SequenceCache> = LazyLock::new(|| SequenceCache::new(next_motzkin));

/// `M_n`: the number of Motzkin words of length `n`.
pub fn motzkin(n: usize) -> BigInt {
    MOTZKIN.get(n)
}

/// `U_n`: the number of unique words of length `n`, i.e. the size of range
/// `n` of the row. `U_0 = 0`, `U_1 = 1`, `U_n = M_n - M_{n-1}` otherwise.
pub fn motzkin_increment(n: usize) -> BigInt {
    match n {
        0 => BigInt::zero(),
        1 => BigInt::one(),
        _ => motzkin(n) - motzkin(n - 1),
    }
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn catalan(k: usize) -> BigInt {
    binomial(2 * k, k) / (k + 1)
}

pub fn triangular(n: usize) -> BigInt {
    BigInt::from(n) * (n + 1) / 2
}

pub fn tetrahedral(t: usize) -> BigInt {
    BigInt::from(t) * (t + 1) * (t + 2) / 6
}

/// `delta(r) = U_{r+1} - M_{r-1}`: how far the weight of the prime pair
/// `p_{n,r}` sits above the range minimum `M_{n-1}`.
pub fn delta(r: usize) -> Result<BigInt, NumbersError> {
    if r == 0 {
        return Err(NumbersError::DeltaIndex(r));
    }
    Ok(motzkin_increment(r + 1) - motzkin(r - 1))
}
