//! The naturalized row of Motzkin words.
//!
//! Unique Motzkin words (the word `0` and every word starting with `(`) are
//! ordered by length, then lexicographically with `0 < ( < )`. This crate
//! ranks and unranks words in that order, decomposes them into prime pairs,
//! builds the Motzkin triangle `U(n, k)` and checks the generating functions
//! of the row coefficient by coefficient. Each closed form has a brute-force
//! counterpart in [`oracle`].

pub mod numbers;
pub mod oracle;
pub mod prime_pairs;
pub mod ranking;
pub mod series;
pub mod triangle;
pub mod verify;
pub mod words;

pub use numbers::{
    binomial, catalan, delta, motzkin, motzkin_increment, tetrahedral, triangular, NumbersError,
    SequenceCache,
};
pub use prime_pairs::{
    classify_relation, pair_index, pair_weight, pair_word, weight_triangle, PairError,
    PairRelation, PrimePair, WeightRow,
};
pub use ranking::{completion_count, rank, unrank, CompletionTable, RankError, Weight};
pub use series::{
    increment_gf, motzkin_gf, pair_gf_parts, PairParts, SeriesError, TruncatedSeries,
};
pub use triangle::{triangle_table, u_n1, u_n2_via_zones, u_nk, Orientation, TriangleTable};
pub use words::{
    compare, enumerate_range, extract_block, range_max, range_min, superimpose, Block, MotzkinWord,
    RowMembership, Symbol, WordError,
};
