use num_bigint::BigInt;
use proptest::prelude::*;

use motzkin_core::{
    classify_relation, extract_block, pair_weight, pair_word, rank, superimpose, unrank,
    MotzkinWord, PrimePair, Symbol, Weight,
};

/// Random unique word of length 2..=max: a leading `(`, random body, closes
/// appended to balance.
fn unique_word(max: usize) -> impl Strategy<Value = MotzkinWord> {
    prop::collection::vec(0u8..3, 0..max).prop_map(|raw| {
        let mut s = vec![Symbol::Open];
        let mut height = 1;
        for r in raw {
            match r {
                0 => s.push(Symbol::Zero),
                1 => {
                    height += 1;
                    s.push(Symbol::Open);
                }
                _ if height > 1 => {
                    height -= 1;
                    s.push(Symbol::Close);
                }
                _ => s.push(Symbol::Zero),
            }
        }
        s.extend(std::iter::repeat_n(Symbol::Close, height));
        MotzkinWord::from_symbols(s).unwrap()
    })
}

fn pair() -> impl Strategy<Value = PrimePair> {
    (2usize..40)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_map(|(n, r)| PrimePair::new(n, r).unwrap())
}

proptest! {
    #[test]
    fn unrank_inverts_rank(w in unique_word(60)) {
        prop_assert_eq!(unrank(&rank(&w).unwrap()), w);
    }

    #[test]
    fn rank_inverts_unrank(i in any::<u128>()) {
        let weight = Weight::new(BigInt::from(i)).unwrap();
        prop_assert_eq!(rank(&unrank(&weight)).unwrap(), weight);
    }

    #[test]
    fn rank_preserves_row_order(a in unique_word(20), b in unique_word(20)) {
        prop_assert_eq!(a.cmp(&b), rank(&a).unwrap().cmp(&rank(&b).unwrap()));
    }

    #[test]
    fn leading_zeros_do_not_change_rank(w in unique_word(20), pad in 1usize..6) {
        let padded: MotzkinWord = format!("{}{}", "0".repeat(pad), w).parse().unwrap();
        prop_assert!(!padded.is_unique());
        prop_assert_eq!(rank(&padded).unwrap(), rank(&w).unwrap());
    }

    #[test]
    fn pair_weight_matches_rank_for_long_pairs(p in pair()) {
        prop_assert_eq!(pair_weight(p), rank(&pair_word(p)).unwrap());
    }

    #[test]
    fn extraction_roundtrips(w in unique_word(40)) {
        for b in w.simple_blocks() {
            let (rest, taken) = extract_block(&w, b).unwrap();
            prop_assert_eq!(superimpose(&rest, &taken).unwrap(), w.clone());
            // brackets keep their positions from the right
            for pos in b.close..=b.open {
                prop_assert_eq!(taken.symbol_at(pos), w.symbol_at(pos));
                prop_assert_eq!(rest.symbol_at(pos), Some(Symbol::Zero));
            }
        }
    }

    #[test]
    fn relation_is_mirrored(p in pair(), q in pair()) {
        prop_assert_eq!(classify_relation(p, q), classify_relation(q, p).mirrored());
    }
}

#[test]
fn decomposition_pairs_are_pairwise_compatible() {
    let w: MotzkinWord = "((00())0)0(0)".parse().unwrap();
    let pairs = w.decompose();
    for (i, &p) in pairs.iter().enumerate() {
        for &q in &pairs[i + 1..] {
            assert!(classify_relation(p, q).is_compatible(), "{p} {q}");
        }
    }
}
