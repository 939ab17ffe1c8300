//! Self-check suite behind `motzkin verify`.
//!
//! Each check compares a fast route against a published value, a second
//! closed form, or the brute-force oracle. `Level::Quick` shrinks the oracle
//! bounds so the suite runs in well under a second in debug builds.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::numbers::{catalan, delta, motzkin, motzkin_increment, tetrahedral};
use crate::oracle;
use crate::prime_pairs::{
    classify_relation, pair_weight, pair_word, pairs_up_to, weight_triangle, PrimePair,
};
use crate::ranking::{rank, unrank, Weight};
use crate::series::{functional_residual, increment_gf, motzkin_gf, pair_gf_parts};
use crate::triangle::{duplicate_report, row_properties, u_n2_via_zones, u_nk, TriangleTable};
use crate::words::{
    enumerate_range, extract_block, range_max, range_min, superimpose, MotzkinWord,
};

const MOTZKIN_LIST: [i64; 11] = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188];
const INCREMENT_LIST: [i64; 15] = [
    0, 1, 1, 2, 5, 12, 30, 76, 196, 512, 1353, 3610, 9713, 26324, 71799,
];
const DELTA_LIST: [i64; 13] = [0, 1, 3, 8, 21, 55, 145, 385, 1030, 2775, 7525, 20526, 56288];
const WEIGHT_TABLE: [&[i64]; 7] = [
    &[1],
    &[2, 3],
    &[4, 5, 7],
    &[9, 10, 12, 17],
    &[21, 22, 24, 29, 42],
    &[51, 52, 54, 59, 72, 106],
    &[127, 128, 130, 135, 148, 182, 272],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl Level {
    fn pick(self, quick: usize, full: usize) -> usize {
        match self {
            Level::Quick => quick,
            Level::Full => full,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: usize,
    pub name: &'static str,
    /// First mismatch, if any.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {:>2} {}", self.id, self.name),
            Some(why) => write!(f, "FAIL {:>2} {}: {}", self.id, self.name, why),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub level: Level,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

/// Collects the first failed expectation of a check.
struct Probe {
    failure: Option<String>,
}

impl Probe {
    fn new() -> Self {
        Self { failure: None }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, label: impl FnOnce() -> String) {
        if got != want && self.failure.is_none() {
            self.failure = Some(format!("{}: got {:?}, want {:?}", label(), got, want));
        }
    }

    fn finish(self, id: usize, name: &'static str) -> Check {
        Check {
            id,
            name,
            failure: self.failure,
        }
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn word(s: &str) -> MotzkinWord {
    MotzkinWord::parse(s).expect("literal word")
}

fn rank_or_neg(w: &MotzkinWord) -> BigInt {
    rank(w).map(Weight::into_inner).unwrap_or_else(|_| big(-1))
}

pub fn check_sequences() -> Check {
    let mut p = Probe::new();
    for (n, &v) in MOTZKIN_LIST.iter().enumerate() {
        p.eq(motzkin(n), big(v), || format!("motzkin({n})"));
    }
    for (n, &v) in INCREMENT_LIST.iter().enumerate() {
        p.eq(motzkin_increment(n), big(v), || format!("increment({n})"));
    }
    for (i, &v) in DELTA_LIST.iter().enumerate() {
        p.eq(delta(i + 1).ok(), Some(big(v)), || {
            format!("delta({})", i + 1)
        });
    }
    p.finish(1, "Motzkin numbers, increments and delta sequence")
}

pub fn check_published_weights() -> Check {
    let mut p = Probe::new();
    for (s, v) in [("(0)0", 5), ("(00)000", 59), ("(())()0", 105)] {
        p.eq(rank_or_neg(&word(s)), big(v), || format!("rank({s})"));
    }
    p.finish(2, "published word weights")
}

/// Weight table plus `rank(pair_word(p)) == weight(p)` for every pair with
/// `n <= max_n`. The weight function is a parameter so the check can be
/// exercised against a deliberately broken formula.
pub fn check_pair_weights_with(weight: impl Fn(PrimePair) -> BigInt, max_n: usize) -> Check {
    let mut p = Probe::new();
    for (i, row) in WEIGHT_TABLE.iter().enumerate() {
        let n = i + 2;
        for (j, &v) in row.iter().enumerate() {
            let pair = PrimePair::new(n, j + 1).expect("table coordinates");
            p.eq(weight(pair), big(v), || format!("weight{pair}"));
        }
    }
    for pair in pairs_up_to(max_n) {
        p.eq(weight(pair), rank_or_neg(&pair_word(pair)), || {
            format!("weight{pair} vs rank")
        });
    }
    p.finish(3, "pair_weight vs rank")
}

pub fn check_pair_weights(level: Level) -> Check {
    let mut check = check_pair_weights_with(|q| pair_weight(q).into_inner(), level.pick(9, 12));
    if check.passed() {
        let rows: Vec<Vec<BigInt>> = weight_triangle(8).into_iter().map(|r| r.weights).collect();
        let want: Vec<Vec<BigInt>> = WEIGHT_TABLE
            .iter()
            .map(|row| row.iter().map(|&v| big(v)).collect())
            .collect();
        if rows != want {
            check.failure = Some("weight_triangle(8) differs from the table".into());
        }
    }
    check
}

pub fn check_boundaries() -> Check {
    let mut p = Probe::new();
    for n in 2..=12 {
        let lo = range_min(n).expect("n >= 2");
        let hi = range_max(n).expect("n >= 1");
        p.eq(rank_or_neg(&lo), motzkin(n - 1), || {
            format!("rank(min range {n})")
        });
        p.eq(rank_or_neg(&hi), motzkin(n) - 1, || {
            format!("rank(max range {n})")
        });
    }
    p.finish(4, "range minimum and maximum weights")
}

pub fn check_roundtrip(level: Level) -> Check {
    let mut p = Probe::new();
    let top = level.pick(9, 10);
    let limit = motzkin(top);
    let mut i = BigInt::zero();
    while i < limit {
        let w = Weight::new(i.clone()).expect("non-negative");
        p.eq(rank_or_neg(&unrank(&w)), i.clone(), || {
            format!("rank(unrank({i}))")
        });
        i += 1;
    }
    for n in 1..=top {
        for w in enumerate_range(n) {
            let r = rank(&w);
            p.expect(r.as_ref().map(unrank).as_ref() == Ok(&w), || {
                format!("unrank(rank({w}))")
            });
        }
    }
    let oracle_len = level.pick(7, 9);
    match oracle::brute_row(oracle_len) {
        Ok(row) => {
            for (pos, s) in row.iter().enumerate() {
                p.eq(rank_or_neg(&word(s)), BigInt::from(pos), || {
                    format!("rank({s}) vs oracle")
                });
            }
        }
        Err(e) => p.expect(false, || e.to_string()),
    }
    p.finish(5, "rank/unrank roundtrip and oracle ranks")
}

pub fn check_triangle(level: Level) -> Check {
    let mut p = Probe::new();
    for n in 2..=level.pick(9, 12) {
        match oracle::brute_pair_profile(n) {
            Ok(profile) => {
                for k in 1..=n / 2 + 1 {
                    let brute = profile.get(k).cloned().unwrap_or_default();
                    p.eq(u_nk(n, k), brute, || format!("U({n},{k}) vs oracle"));
                }
            }
            Err(e) => p.expect(false, || e.to_string()),
        }
    }
    p.eq(u_nk(10, 3), big(630), || "U(10,3)".into());
    p.eq(
        [u_nk(6, 1), u_nk(6, 2), u_nk(6, 3)],
        [big(5), big(20), big(5)],
        || "length-6 profile".into(),
    );
    let table = TriangleTable::build(30);
    p.expect(table.sums_match(), || {
        "column sums differ from increments".into()
    });
    p.eq(table.column_sum(15), big(196938), || {
        "sum for n = 15".into()
    });
    p.finish(6, "Motzkin triangle closed form")
}

pub fn check_row_identities() -> Check {
    let mut p = Probe::new();
    for k in 1..=8 {
        let r = row_properties(k);
        p.expect(r.passed(), || {
            format!("row properties for k = {k}: {:?}", r.values)
        });
    }
    for k in 2..=8 {
        let d = duplicate_report(k);
        p.expect(d.duplicates(), || {
            format!("U(3k,k-1) != U(3k,k+1) for k = {k}")
        });
        p.expect(d.companion_holds(), || {
            format!("companion identity for k = {k}")
        });
        p.expect(d.central_sum_holds(), || format!("central sum for k = {k}"));
    }
    p.eq(u_nk(18, 5), big(1021020), || "U(18,5)".into());
    p.eq(u_nk(18, 7), big(1021020), || "U(18,7)".into());
    p.eq(u_nk(18, 9), big(4862), || "U(18,9)".into());
    p.eq(catalan(9), big(4862), || "Cat(9)".into());
    p.finish(7, "row and duplicate identities of the triangle")
}

pub fn check_zones() -> Check {
    let mut p = Probe::new();
    for n in 4..=40 {
        let z = u_n2_via_zones(n);
        p.eq(z.clone(), u_nk(n, 2), || {
            format!("zones vs closed form, n = {n}")
        });
        p.eq(z, tetrahedral(n - 3) * 2, || {
            format!("zones vs 2 Te, n = {n}")
        });
    }
    let first: Vec<_> = (4..=8).map(u_n2_via_zones).collect();
    p.eq(first, [2, 8, 20, 40, 70].map(big).to_vec(), || {
        "first values".into()
    });
    p.finish(8, "two-pair count from compatibility zones")
}

pub fn check_series() -> Check {
    let mut p = Probe::new();
    let m = motzkin_gf(30);
    p.eq(
        m.to_integers(),
        Some((0..30).map(motzkin).collect()),
        || "M(x)".into(),
    );
    p.expect(functional_residual(&m).is_zero(), || {
        "functional equation residual".into()
    });
    let u = increment_gf(30);
    p.eq(
        u.to_integers(),
        Some((0..30).map(motzkin_increment).collect()),
        || "U(x)".into(),
    );
    let parts = pair_gf_parts(26);
    for n in 2..=25 {
        p.eq(parts.x_part.coeff(n).to_integer(), motzkin(n - 1), || {
            format!("x-part {n}")
        });
    }
    for r in 1..=25 {
        p.eq(
            Some(parts.y_part.coeff(r).to_integer()),
            delta(r).ok(),
            || format!("y-part {r}"),
        );
    }
    p.finish(9, "generating functions")
}

pub fn check_blocks(level: Level) -> Check {
    let mut p = Probe::new();
    let max = level.pick(8, 10);
    for len in 1..=max {
        for host in enumerate_range(len) {
            for b in host.simple_blocks() {
                let back =
                    extract_block(&host, b).and_then(|(rest, taken)| superimpose(&rest, &taken));
                p.expect(back.as_ref() == Ok(&host), || {
                    format!("block {b:?} of {host}")
                });
            }
        }
    }
    let lhs = rank_or_neg(&word("()0(())(00)"));
    let rhs = rank_or_neg(&word("()00000(00)")) + rank_or_neg(&word("(())0000"));
    p.eq(lhs, rhs, || "weight additivity example".into());
    p.finish(10, "block extraction and superposition")
}

pub fn check_compatibility() -> Check {
    let mut p = Probe::new();
    match oracle::brute_cohosted_pairs(8) {
        Ok(seen) => {
            for a in pairs_up_to(8) {
                for b in pairs_up_to(8) {
                    if a == b {
                        continue;
                    }
                    let fast = classify_relation(a, b).is_compatible();
                    let brute = seen.contains(&((a.n(), a.r()), (b.n(), b.r())));
                    p.eq(fast, brute, || format!("{a} with {b}"));
                }
            }
        }
        Err(e) => p.expect(false, || e.to_string()),
    }
    p.finish(11, "pair compatibility vs co-hosting words")
}

pub fn run(level: Level) -> Report {
    Report {
        level,
        checks: vec![
            check_sequences(),
            check_published_weights(),
            check_pair_weights(level),
            check_boundaries(),
            check_roundtrip(level),
            check_triangle(level),
            check_row_identities(),
            check_zones(),
            check_series(),
            check_blocks(level),
            check_compatibility(),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        let report = run(Level::Quick);
        for c in &report.checks {
            assert!(c.passed(), "{c}");
        }
        assert_eq!(report.checks.len(), 11);
    }

    #[test]
    fn seeded_weight_bug_is_caught() {
        let off_by_one = |q: PrimePair| pair_weight(q).into_inner() + 1;
        let c = check_pair_weights_with(off_by_one, 9);
        assert!(!c.passed());
        assert!(c.to_string().contains("pair_weight vs rank"));
    }
}
