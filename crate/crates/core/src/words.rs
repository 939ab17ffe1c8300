//! Motzkin words: validated strings over `0`, `(`, `)`.
//!
//! Bracket positions are counted from the right end of a word, starting at 1.
//! That convention is shared with [`PrimePair`] and the block arithmetic
//! below: a word lives on a zero line bounded on the right, so moving a word
//! into a longer range (by prepending zeros) never moves its brackets.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::prime_pairs::PrimePair;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty input")]
    EmptyInput,
    #[error("illegal character {ch:?} at position {position}")]
    IllegalCharacter { ch: char, position: usize },
    /// `position` is the 1-based length of the first prefix that closes more
    /// brackets than it opened, or the full length when brackets are left open.
    #[error("unbalanced word at position {position}")]
    UnbalancedWord { position: usize },
    #[error("range {0} has no minimum word of the form (0^(n-2))")]
    RangeTooShort(usize),
    #[error("block ({open}, {close}) is not a matched pair of the word")]
    NotABlock { open: usize, close: usize },
    #[error("block ({open}, {close}) is nested inside another pair")]
    NotASimpleBlock { open: usize, close: usize },
    #[error("brackets collide at position {0} from the right")]
    PositionConflict(usize),
    #[error("superposition is not a Motzkin word: {0}")]
    InvalidResult(Box<WordError>),
}

/// Alphabet symbols, declared in their sort order `0 < ( < )`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    Open,
    Close,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::Zero, Symbol::Open, Symbol::Close];

    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::Open => '(',
            Symbol::Close => ')',
        }
    }

    pub fn from_char(ch: char) -> Option<Symbol> {
        match ch {
            '0' => Some(Symbol::Zero),
            '(' => Some(Symbol::Open),
            ')' => Some(Symbol::Close),
            _ => None,
        }
    }

    /// Change in nesting height caused by this symbol.
    pub fn step(self) -> isize {
        match self {
            Symbol::Zero => 0,
            Symbol::Open => 1,
            Symbol::Close => -1,
        }
    }
}

/// Whether a word belongs to the row itself or is inherited from a shorter
/// word by a leading zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowMembership {
    Unique,
    Inherited,
}

/// A non-empty Motzkin word.
///
/// Ordering is the row order: shorter words first, then lexicographic with
/// `0 < ( < )`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MotzkinWord {
    symbols: Box<[Symbol]>,
}

fn check_balance(symbols: &[Symbol]) -> Result<(), WordError> {
    let mut height = 0isize;
    for (i, s) in symbols.iter().enumerate() {
        height += s.step();
        if height < 0 {
            return Err(WordError::UnbalancedWord { position: i + 1 });
        }
    }
    if height != 0 {
        return Err(WordError::UnbalancedWord {
            position: symbols.len(),
        });
    }
    Ok(())
}

impl MotzkinWord {
    pub fn parse(text: &str) -> Result<Self, WordError> {
        if text.is_empty() {
            return Err(WordError::EmptyInput);
        }
        let mut symbols = Vec::with_capacity(text.len());
        let mut height = 0isize;
        for (i, ch) in text.chars().enumerate() {
            let s = Symbol::from_char(ch).ok_or(WordError::IllegalCharacter {
                ch,
                position: i + 1,
            })?;
            height += s.step();
            if height < 0 {
                return Err(WordError::UnbalancedWord { position: i + 1 });
            }
            symbols.push(s);
        }
        if height != 0 {
            return Err(WordError::UnbalancedWord {
                position: symbols.len(),
            });
        }
        Ok(Self {
            symbols: symbols.into(),
        })
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Result<Self, WordError> {
        if symbols.is_empty() {
            return Err(WordError::EmptyInput);
        }
        check_balance(&symbols)?;
        Ok(Self {
            symbols: symbols.into(),
        })
    }

    /// Callers guarantee the invariants.
    pub(crate) fn from_symbols_unchecked(symbols: Vec<Symbol>) -> Self {
        debug_assert!(!symbols.is_empty() && check_balance(&symbols).is_ok());
        Self {
            symbols: symbols.into(),
        }
    }

    /// The all-zero word of length `n` (a stretch of the zero line).
    pub fn zeros(n: usize) -> Result<Self, WordError> {
        Self::from_symbols(vec![Symbol::Zero; n])
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Symbol at `pos`, counted from the right end starting at 1.
    pub fn symbol_at(&self, pos: usize) -> Option<Symbol> {
        if pos == 0 || pos > self.len() {
            return None;
        }
        Some(self.symbols[self.len() - pos])
    }

    pub fn is_all_zeros(&self) -> bool {
        self.symbols.iter().all(|&s| s == Symbol::Zero)
    }

    pub fn membership(&self) -> RowMembership {
        if self.is_unique() {
            RowMembership::Unique
        } else {
            RowMembership::Inherited
        }
    }

    /// True for `"0"` and for every word starting with `(`.
    pub fn is_unique(&self) -> bool {
        match self.symbols.first() {
            Some(Symbol::Open) => true,
            Some(Symbol::Zero) => self.len() == 1,
            _ => false,
        }
    }

    /// Number of matched pairs.
    pub fn count_pairs(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == Symbol::Open).count()
    }

    /// Prime pairs of the word, one per matched bracket pair, ordered by
    /// descending left-bracket position.
    pub fn decompose(&self) -> Vec<PrimePair> {
        self.matched_pairs()
            .into_iter()
            .map(|(open, close, _)| PrimePair::new_unchecked(open, close))
            .collect()
    }

    /// `(open, close, level)` for every matched pair, positions from the
    /// right, in left-to-right order of the opening bracket.
    fn matched_pairs(&self) -> Vec<(usize, usize, usize)> {
        let n = self.len();
        let mut out = Vec::with_capacity(self.count_pairs());
        let mut stack = Vec::new();
        for (i, &s) in self.symbols.iter().enumerate() {
            match s {
                Symbol::Open => {
                    stack.push(out.len());
                    out.push((n - i, 0, stack.len() - 1));
                }
                Symbol::Close => {
                    let slot = stack.pop().expect("validated word");
                    out[slot].1 = n - i;
                }
                Symbol::Zero => {}
            }
        }
        out
    }

    /// All blocks of the word together with their nesting level
    /// (0 for simple blocks).
    pub fn blocks(&self) -> Vec<(Block, usize)> {
        self.matched_pairs()
            .into_iter()
            .map(|(open, close, level)| (Block { open, close }, level))
            .collect()
    }

    pub fn simple_blocks(&self) -> Vec<Block> {
        self.blocks()
            .into_iter()
            .filter(|&(_, level)| level == 0)
            .map(|(b, _)| b)
            .collect()
    }

    /// The word with leading zeros removed; `None` if nothing remains.
    pub fn strip_leading_zeros(&self) -> Option<MotzkinWord> {
        let first = self.symbols.iter().position(|&s| s != Symbol::Zero)?;
        Some(Self {
            symbols: self.symbols[first..].into(),
        })
    }

    /// Display form with runs of three or more zeros written as `0{k}`.
    pub fn render_compact(&self) -> String {
        let mut out = String::new();
        let mut run = 0usize;
        let flush = |out: &mut String, run: usize| match run {
            0 => {}
            1 | 2 => out.extend(std::iter::repeat_n('0', run)),
            _ => out.push_str(&format!("0{{{run}}}")),
        };
        for &s in self.symbols.iter() {
            if s == Symbol::Zero {
                run += 1;
            } else {
                flush(&mut out, run);
                run = 0;
                out.push(s.as_char());
            }
        }
        flush(&mut out, run);
        out
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.symbols.iter().map(|s| s.as_char()).collect();
        f.write_str(&s)
    }
}

impl FromStr for MotzkinWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl Ord for MotzkinWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.symbols.cmp(&other.symbols))
    }
}

impl PartialOrd for MotzkinWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn compare(a: &MotzkinWord, b: &MotzkinWord) -> Ordering {
    a.cmp(b)
}

/// Smallest unique word of length `n >= 2`: `(0^{n-2})`.
pub fn range_min(n: usize) -> Result<MotzkinWord, WordError> {
    if n < 2 {
        return Err(WordError::RangeTooShort(n));
    }
    let mut s = vec![Symbol::Zero; n];
    s[0] = Symbol::Open;
    s[n - 1] = Symbol::Close;
    Ok(MotzkinWord::from_symbols_unchecked(s))
}

/// Largest unique word of length `n >= 1`: `()` repeated `n / 2` times,
/// followed by a single zero when `n` is odd.
pub fn range_max(n: usize) -> Result<MotzkinWord, WordError> {
    if n == 0 {
        return Err(WordError::EmptyInput);
    }
    let mut s = Vec::with_capacity(n);
    for _ in 0..n / 2 {
        s.push(Symbol::Open);
        s.push(Symbol::Close);
    }
    if n % 2 == 1 {
        s.push(Symbol::Zero);
    }
    Ok(MotzkinWord::from_symbols_unchecked(s))
}

/// The unique words of length `n`, in row order.
pub fn enumerate_range(n: usize) -> RangeIter {
    let next = match n {
        0 => None,
        1 => Some(vec![Symbol::Zero]),
        _ => Some(range_min(n).expect("n >= 2").symbols.into_vec()),
    };
    RangeIter { next }
}

/// Iterator over one range of the row, by lexicographic successor.
#[derive(Debug, Clone)]
pub struct RangeIter {
    next: Option<Vec<Symbol>>,
}

impl RangeIter {
    fn advance(cur: &mut [Symbol]) -> bool {
        let n = cur.len();
        if n < 2 {
            return false;
        }
        let mut heights = Vec::with_capacity(n + 1);
        heights.push(0isize);
        for s in cur.iter() {
            heights.push(heights.last().unwrap() + s.step());
        }
        // position 0 is pinned to '(' for unique words
        for i in (1..n).rev() {
            let remaining = (n - 1 - i) as isize;
            for c in Symbol::ALL.into_iter().filter(|&c| c > cur[i]) {
                let h = heights[i] + c.step();
                if h < 0 || h > remaining {
                    continue;
                }
                cur[i] = c;
                let zeros = (remaining - h) as usize;
                for (j, slot) in cur[i + 1..].iter_mut().enumerate() {
                    *slot = if j < zeros {
                        Symbol::Zero
                    } else {
                        Symbol::Close
                    };
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for RangeIter {
    type Item = MotzkinWord;

    fn next(&mut self) -> Option<MotzkinWord> {
        let cur = self.next.take()?;
        let word = MotzkinWord::from_symbols_unchecked(cur.clone());
        let mut succ = cur;
        if Self::advance(&mut succ) {
            self.next = Some(succ);
        }
        Some(word)
    }
}

/// A matched pair and everything inside it, addressed by the positions of
/// its brackets counted from the right end of the host word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub open: usize,
    pub close: usize,
}

impl Block {
    pub fn new(open: usize, close: usize) -> Self {
        Self { open, close }
    }

    /// Number of host symbols to the right of the block.
    pub fn offset(&self) -> usize {
        self.close - 1
    }

    pub fn len(&self) -> usize {
        self.open - self.close + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl From<PrimePair> for Block {
    fn from(p: PrimePair) -> Self {
        Block::new(p.n(), p.r())
    }
}

/// Lifts simple block `b` out of `w`.
///
/// Returns `(remainder, extracted)`. The remainder keeps the full length of
/// `w` with the block's symbols zeroed. The extracted word is the block
/// followed by one zero per symbol to its right in `w`, so every bracket keeps
/// its position from the right.
pub fn extract_block(w: &MotzkinWord, b: Block) -> Result<(MotzkinWord, MotzkinWord), WordError> {
    let level = w
        .blocks()
        .into_iter()
        .find(|(blk, _)| *blk == b)
        .map(|(_, level)| level)
        .ok_or(WordError::NotABlock {
            open: b.open,
            close: b.close,
        })?;
    if level != 0 {
        return Err(WordError::NotASimpleBlock {
            open: b.open,
            close: b.close,
        });
    }
    let n = w.len();
    let start = n - b.open;
    let end = n - b.close;

    let mut rest = w.symbols.to_vec();
    rest[start..=end].fill(Symbol::Zero);

    let mut taken = w.symbols[start..=end].to_vec();
    taken.extend(std::iter::repeat_n(Symbol::Zero, b.offset()));

    Ok((
        MotzkinWord::from_symbols_unchecked(rest),
        MotzkinWord::from_symbols_unchecked(taken),
    ))
}

/// Overlays `block` onto `base`, both right-aligned on the zero line.
pub fn superimpose(base: &MotzkinWord, block: &MotzkinWord) -> Result<MotzkinWord, WordError> {
    let n = base.len().max(block.len());
    let mut out = vec![Symbol::Zero; n];
    for pos in 1..=n {
        let a = base.symbol_at(pos).unwrap_or(Symbol::Zero);
        let b = block.symbol_at(pos).unwrap_or(Symbol::Zero);
        out[n - pos] = match (a, b) {
            (Symbol::Zero, s) | (s, Symbol::Zero) => s,
            _ => return Err(WordError::PositionConflict(pos)),
        };
    }
    MotzkinWord::from_symbols(out).map_err(|e| WordError::InvalidResult(Box::new(e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{motzkin, motzkin_increment};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn w(s: &str) -> MotzkinWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_accepts_and_rejects() {
        assert_eq!(w("(0)0").len(), 4);
        assert_eq!(w("0").len(), 1);
        assert_eq!(
            MotzkinWord::parse(")("),
            Err(WordError::UnbalancedWord { position: 1 })
        );
        assert_eq!(
            MotzkinWord::parse("(()"),
            Err(WordError::UnbalancedWord { position: 3 })
        );
        assert_eq!(MotzkinWord::parse(""), Err(WordError::EmptyInput));
        assert_eq!(
            MotzkinWord::parse("(x)"),
            Err(WordError::IllegalCharacter {
                ch: 'x',
                position: 2
            })
        );
        // superscript shorthand is display-only
        assert!(matches!(
            MotzkinWord::parse("(0³)"),
            Err(WordError::IllegalCharacter { .. })
        ));
    }

    #[test]
    fn row_order_examples() {
        assert_eq!(compare(&w("()"), &w("(0)")), Ordering::Less);
        assert_eq!(compare(&w("(00)"), &w("(0)0")), Ordering::Less);
        assert_eq!(compare(&w("()0"), &w("()")), Ordering::Greater);
        let x = w("(())()0");
        assert_eq!(compare(&x, &x), Ordering::Equal);
    }

    #[test]
    fn uniqueness() {
        assert!(w("0").is_unique());
        assert!(!w("0()").is_unique());
        assert!(w("(())").is_unique());
        assert_eq!(w("00").membership(), RowMembership::Inherited);
    }

    #[test]
    fn range_bounds() {
        assert_eq!(range_min(4).unwrap(), w("(00)"));
        assert_eq!(range_max(5).unwrap(), w("()()0"));
        assert_eq!(range_max(2).unwrap(), w("()"));
        assert_eq!(range_max(1).unwrap(), w("0"));
        assert_eq!(range_min(1), Err(WordError::RangeTooShort(1)));
    }

    #[test]
    fn small_ranges() {
        let r2: Vec<String> = enumerate_range(2).map(|x| x.to_string()).collect();
        assert_eq!(r2, ["()"]);
        let r4: Vec<String> = enumerate_range(4).map(|x| x.to_string()).collect();
        assert_eq!(r4, ["(00)", "(0)0", "(())", "()00", "()()"]);
        assert_eq!(enumerate_range(7).count(), 76);
        assert_eq!(
            enumerate_range(1)
                .map(|x| x.to_string())
                .collect::<Vec<_>>(),
            ["0"]
        );
        assert_eq!(enumerate_range(0).count(), 0);
    }

    #[test]
    fn ranges_are_sorted_and_sized() {
        for n in 1..=12 {
            let words: Vec<_> = enumerate_range(n).collect();
            assert_eq!(BigInt::from(words.len()), motzkin_increment(n), "n = {n}");
            assert!(words.windows(2).all(|p| p[0] < p[1]));
            assert!(words.iter().all(|x| x.is_unique()));
            if n >= 2 {
                assert_eq!(words[0], range_min(n).unwrap());
            }
            assert_eq!(*words.last().unwrap(), range_max(n).unwrap());
        }
    }

    #[test]
    fn all_words_counted_by_motzkin() {
        // unique words of length n, plus inherited ones (a zero in front of any
        // shorter word, recursively) account for every Motzkin word
        for n in 1..=12 {
            let inherited: usize = (1..n).map(|m| enumerate_range(m).count()).sum();
            let total = inherited + enumerate_range(n).count();
            assert_eq!(BigInt::from(total), motzkin(n));
        }
    }

    #[test]
    fn decompose_examples() {
        let pairs: Vec<(usize, usize)> = w("(())()0")
            .decompose()
            .iter()
            .map(|p| (p.n(), p.r()))
            .collect();
        assert_eq!(pairs, [(7, 4), (6, 5), (3, 2)]);
        assert!(w("0").decompose().is_empty());
        let pairs: Vec<_> = w("(0)0")
            .decompose()
            .iter()
            .map(|p| (p.n(), p.r()))
            .collect();
        assert_eq!(pairs, [(4, 2)]);
    }

    #[test]
    fn count_pairs_examples() {
        assert_eq!(w("((00())0)0").count_pairs(), 3);
        assert_eq!(w("000").count_pairs(), 0);
        assert_eq!(w("()()()").count_pairs(), 3);
    }

    #[test]
    fn extract_examples() {
        let host = w("()0(())(00)");
        let (rest, taken) = extract_block(&host, Block::new(8, 5)).unwrap();
        assert_eq!(rest, w("()00000(00)"));
        assert_eq!(taken, w("(())0000"));

        let (rest, taken) = extract_block(&w("()0"), Block::new(3, 2)).unwrap();
        assert_eq!(rest, w("000"));
        assert_eq!(taken, w("()0"));

        let (rest, taken) = extract_block(&host, Block::new(4, 1)).unwrap();
        assert_eq!(taken, w("(00)"));
        assert_eq!(rest, w("()0(())0000"));
    }

    #[test]
    fn extract_rejects_nested_and_foreign_blocks() {
        let host = w("()0(())(00)");
        assert_eq!(
            extract_block(&host, Block::new(7, 6)),
            Err(WordError::NotASimpleBlock { open: 7, close: 6 })
        );
        assert_eq!(
            extract_block(&host, Block::new(9, 5)),
            Err(WordError::NotABlock { open: 9, close: 5 })
        );
    }

    #[test]
    fn superimpose_examples() {
        assert_eq!(
            superimpose(&w("()00000(00)"), &w("(())0000")).unwrap(),
            w("()0(())(00)")
        );
        assert_eq!(superimpose(&w("000"), &w("()0")).unwrap(), w("()0"));
        assert_eq!(
            superimpose(&w("()"), &w("()")),
            Err(WordError::PositionConflict(1))
        );
        // prefix heights add, so interleaved operands still give a word
        assert_eq!(superimpose(&w("(0)0"), &w("(0)")).unwrap(), w("(())"));
    }

    #[test]
    fn block_roundtrip_exhaustive() {
        for n in 1..=10 {
            for len in 1..=n {
                for host in enumerate_range(len) {
                    // lift into range n to include inherited hosts
                    let mut s = vec![Symbol::Zero; n - len];
                    s.extend_from_slice(host.symbols());
                    let host = MotzkinWord::from_symbols(s).unwrap();
                    for b in host.simple_blocks() {
                        let (rest, taken) = extract_block(&host, b).unwrap();
                        assert_eq!(rest.len(), host.len());
                        assert_eq!(taken.len(), b.open);
                        assert_eq!(superimpose(&rest, &taken).unwrap(), host);
                    }
                }
            }
        }
    }

    #[test]
    fn compact_rendering() {
        assert_eq!(w("(00)000").render_compact(), "(00)0{3}");
        assert_eq!(w("()0").render_compact(), "()0");
    }

    #[test]
    fn total_order_exhaustive() {
        let mut all: Vec<MotzkinWord> = Vec::new();
        for n in 1..=7 {
            all.extend(enumerate_range(n));
            all.extend(MotzkinWord::zeros(n));
        }
        for a in &all {
            for b in &all {
                let ab = compare(a, b);
                assert_eq!(ab, compare(b, a).reverse());
                assert_eq!(ab == Ordering::Equal, a == b);
            }
        }
        // transitivity over a sample of triples
        for a in all.iter().step_by(7) {
            for b in all.iter().step_by(5) {
                for c in all.iter().step_by(11) {
                    if a < b && b < c {
                        assert!(a < c);
                    }
                }
            }
        }
    }

    fn arb_word() -> impl Strategy<Value = MotzkinWord> {
        prop::collection::vec(0u8..3, 1..24).prop_map(|raw| {
            // drop closes that would underflow, then close what is left open
            let mut height = 0;
            let mut s = Vec::new();
            for r in raw {
                match r {
                    0 => s.push(Symbol::Zero),
                    1 => {
                        height += 1;
                        s.push(Symbol::Open)
                    }
                    _ if height > 0 => {
                        height -= 1;
                        s.push(Symbol::Close)
                    }
                    _ => s.push(Symbol::Zero),
                }
            }
            s.extend(std::iter::repeat_n(Symbol::Close, height));
            MotzkinWord::from_symbols(s).unwrap()
        })
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(x in arb_word()) {
            prop_assert_eq!(MotzkinWord::parse(&x.to_string()).unwrap(), x);
        }

        #[test]
        fn decompose_matches_pair_count(x in arb_word()) {
            let pairs = x.decompose();
            prop_assert_eq!(pairs.len(), x.count_pairs());
            prop_assert!(pairs.windows(2).all(|p| p[0].n() > p[1].n()));
            for p in pairs {
                prop_assert_eq!(x.symbol_at(p.n()), Some(Symbol::Open));
                prop_assert_eq!(x.symbol_at(p.r()), Some(Symbol::Close));
            }
        }
    }
}
