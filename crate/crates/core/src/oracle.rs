//! Brute-force reference implementations.
//!
//! Everything here works on plain strings and filters the full `3^n` product
//! of the alphabet. Nothing is shared with [`crate::words`] or
//! [`crate::ranking`], so a bug in those cannot hide behind the oracle.

use std::collections::HashSet;

use num_bigint::BigInt;
use thiserror::Error;

pub const MAX_ENUMERATE_LEN: usize = 14;
pub const MAX_RANK_LEN: usize = 10;
pub const MAX_COUNT_LEN: usize = 12;
pub const MAX_COHOST_LEN: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("length {n} exceeds the oracle cap of {cap}")]
    LengthTooLarge { n: usize, cap: usize },
    #[error("{0:?} is not a Motzkin word")]
    NotAWord(String),
    #[error("{0:?} has no counterpart in the row")]
    NotInRow(String),
}

fn cap(n: usize, cap: usize) -> Result<(), OracleError> {
    if n > cap {
        Err(OracleError::LengthTooLarge { n, cap })
    } else {
        Ok(())
    }
}

fn is_motzkin(s: &[u8]) -> bool {
    let mut open = 0i32;
    for &c in s {
        match c {
            b'(' => open += 1,
            b')' => {
                open -= 1;
                if open < 0 {
                    return false;
                }
            }
            b'0' => {}
            _ => return false,
        }
    }
    open == 0
}

fn in_row(s: &str) -> bool {
    s == "0" || s.starts_with('(')
}

fn sort_key(s: &str) -> (usize, Vec<u8>) {
    let digits = s
        .bytes()
        .map(|c| match c {
            b'0' => 0,
            b'(' => 1,
            _ => 2,
        })
        .collect();
    (s.len(), digits)
}

/// Every Motzkin word of length `n`, sorted in row order.
pub fn brute_enumerate(n: usize) -> Result<Vec<String>, OracleError> {
    cap(n, MAX_ENUMERATE_LEN)?;
    const ALPHABET: [u8; 3] = *b"0()";
    let total = 3usize.pow(n as u32);
    let mut buf = vec![0u8; n];
    let mut out = Vec::new();
    for mut code in 0..total {
        for slot in buf.iter_mut().rev() {
            *slot = ALPHABET[code % 3];
            code /= 3;
        }
        if is_motzkin(&buf) {
            out.push(String::from_utf8(buf.clone()).expect("ascii"));
        }
    }
    out.sort_by_key(|s| sort_key(s));
    Ok(out)
}

/// The row up to words of length `max_len`: `"0"` followed by every word
/// starting with `(`, shortest first.
pub fn brute_row(max_len: usize) -> Result<Vec<String>, OracleError> {
    cap(max_len, MAX_RANK_LEN)?;
    let mut row = Vec::new();
    for n in 1..=max_len {
        row.extend(brute_enumerate(n)?.into_iter().filter(|s| in_row(s)));
    }
    Ok(row)
}

/// Position of `word` in the row, found by listing the row.
pub fn brute_rank(word: &str) -> Result<BigInt, OracleError> {
    cap(word.len(), MAX_RANK_LEN)?;
    if word.is_empty() || !is_motzkin(word.as_bytes()) {
        return Err(OracleError::NotAWord(word.to_owned()));
    }
    let core = match word.trim_start_matches('0') {
        "" if word == "0" => "0",
        "" => return Err(OracleError::NotInRow(word.to_owned())),
        rest => rest,
    };
    let row = brute_row(core.len())?;
    let pos = row
        .iter()
        .position(|s| s == core)
        .expect("row lists every unique word");
    Ok(BigInt::from(pos))
}

/// Unique `n`-words with exactly `k` opening brackets.
pub fn brute_count_pairs(n: usize, k: usize) -> Result<BigInt, OracleError> {
    cap(n, MAX_COUNT_LEN)?;
    let count = brute_enumerate(n)?
        .iter()
        .filter(|s| in_row(s) && s.bytes().filter(|&c| c == b'(').count() == k)
        .count();
    Ok(BigInt::from(count))
}

/// Unique `n`-words tallied by number of opening brackets; entry `k` counts
/// words with exactly `k` pairs.
pub fn brute_pair_profile(n: usize) -> Result<Vec<BigInt>, OracleError> {
    cap(n, MAX_COUNT_LEN)?;
    let mut tally = vec![0usize; n / 2 + 1];
    for s in brute_enumerate(n)?.iter().filter(|s| in_row(s)) {
        tally[s.bytes().filter(|&c| c == b'(').count()] += 1;
    }
    Ok(tally.into_iter().map(BigInt::from).collect())
}

/// `(open, close)` positions from the right for every matched pair.
pub fn brute_pairs_of(word: &str) -> Vec<(usize, usize)> {
    let n = word.len();
    let mut stack = Vec::new();
    let mut out = Vec::new();
    for (i, c) in word.bytes().enumerate() {
        match c {
            b'(' => stack.push(n - i),
            b')' => {
                let open = stack.pop().expect("balanced");
                out.push((open, n - i));
            }
            _ => {}
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Prime-pair coordinates `(n, r)`.
pub type Coords = (usize, usize);

/// Ordered pairs of distinct prime-pair coordinates that occur together in
/// some Motzkin word of length at most `max_len`.
pub fn brute_cohosted_pairs(max_len: usize) -> Result<HashSet<(Coords, Coords)>, OracleError> {
    cap(max_len, MAX_COHOST_LEN)?;
    let mut seen = HashSet::new();
    for n in 1..=max_len {
        for word in brute_enumerate(n)? {
            let pairs = brute_pairs_of(&word);
            for &p in &pairs {
                for &q in &pairs {
                    if p != q {
                        seen.insert((p, q));
                    }
                }
            }
        }
    }
    Ok(seen)
}
