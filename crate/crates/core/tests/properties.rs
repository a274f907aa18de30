//! Property tests for the numeration, array, bi-infinite sequence, digit
//! pattern and interval layers.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

use trithoff::array::{entry, first_column, precolumns};
use trithoff::digitpatterns::{
    decompose_four_fibternary, decompose_three_tribternary, decompose_two_tribbinary, fibbinary_multiple,
    fibternary_multiple, is_member_big, PatternFamily,
};
use trithoff::extratrib::ExtraTrib;
use trithoff::numeration::{canonize_padded, small, to_canonical, Canonizer, TribDigits};
use trithoff::tribword::{alpha_bits, successor_deviation_at};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_roundtrip(n in 0u64..1_000_000_000_000) {
        let mask = small::to_mask(n).expect("in range");
        prop_assert!(small::is_tribbinary(mask));
        prop_assert_eq!(small::eval_mask(mask), n);
        let big = to_canonical(&BigUint::from(n));
        prop_assert!(big.is_canonical());
        prop_assert_eq!(big.evaluate(), BigUint::from(n));
    }

    #[test]
    fn successor_is_a_left_shift(n in 1u64..1_000_000_000) {
        let mask = small::to_mask(n).unwrap();
        prop_assert_eq!(small::successor(n), Some(small::eval_mask(mask << 1)));
        prop_assert_eq!(small::successor_k(n, 3), Some(small::eval_mask(mask << 3)));
        prop_assert!(small::successor(n).unwrap() > n);
    }

    #[test]
    fn canonize_preserves_value(digits in prop::collection::vec(0u64..6, 1..14)) {
        let word = TribDigits::new(digits);
        let (canonical, zeros) = canonize_padded(&word).expect("padded canonization succeeds");
        prop_assert!(canonical.is_canonical());
        let padded = word.with_trailing_zeros(zeros);
        prop_assert_eq!(canonical.evaluate(), padded.evaluate());
        let mut run = Canonizer::new(&padded);
        while run.step().expect("valid step").is_some() {
            prop_assert_eq!(run.word().evaluate(), padded.evaluate());
        }
    }

    #[test]
    fn array_rows_obey_the_rule(r in 1u64..5000, c in -1i64..10) {
        let s = entry(r, c) + entry(r, c + 1) + entry(r, c + 2);
        prop_assert_eq!(entry(r, c + 3), s);
    }

    #[test]
    fn precolumns_extend_rows(r in 1u64..5000) {
        let g = first_column(r);
        let (wall, seed, pre) = precolumns(g);
        prop_assert_eq!(BigUint::from(wall), entry(r, 0));
        prop_assert_eq!(BigUint::from(seed), entry(r, -1));
        prop_assert_eq!(BigUint::from(pre), entry(r, -2));
        prop_assert_eq!(small::row_number(g), Some(r));
    }

    #[test]
    fn closed_form_matches_recurrence(
        i in -20i64..20, a in -50i64..50, b in -50i64..50, c in -50i64..50, n in -40i64..40
    ) {
        let s = ExtraTrib::from_i64(i, a, b, c);
        prop_assert_eq!(s.term(n), s.closed_form_term(n));
        prop_assert_eq!(s.term(n + 3), s.term(n) + s.term(n + 1) + s.term(n + 2));
    }

    #[test]
    fn difference_inverse_undoes_difference(a in -200i64..200, b in -200i64..200, c in -200i64..200) {
        let s = ExtraTrib::from_i64(0, a, b, c);
        let d = s.difference();
        let back = d.difference_inverse().expect("a difference always has an inverse");
        prop_assert_eq!(back.terms(-5, 5), s.terms(-5, 5));
    }

    #[test]
    fn locate_agrees_with_wall_search(r in 1u64..300, k in 1i64..6) {
        let s = ExtraTrib::row(r).scale(&BigInt::from(k));
        let by_word = s.locate().expect("positive tail");
        prop_assert_eq!(Ok(by_word.clone()), s.locate_by_wall(100_000));
        prop_assert_eq!(BigInt::from(by_word.first_column.clone()), s.term(by_word.start_index));
    }

    #[test]
    fn two_tribbinary(n in 0u64..10_000_000) {
        let (x, y) = decompose_two_tribbinary(n);
        prop_assert_eq!(x + y, n);
        prop_assert!(PatternFamily::Tribbinary.is_member(x));
        prop_assert!(PatternFamily::Tribbinary.is_member(y));
    }

    #[test]
    fn four_fibternary(n in 0u64..10_000_000) {
        let parts = decompose_four_fibternary(n);
        prop_assert_eq!(parts.iter().sum::<u64>(), n);
        prop_assert!(parts.iter().all(|&p| PatternFamily::Fibternary.is_member(p)));
    }

    #[test]
    fn three_tribternary(n in 0u64..10_000_000) {
        let parts = decompose_three_tribternary(n);
        prop_assert_eq!(parts.iter().sum::<u64>(), n);
        prop_assert!(parts.iter().all(|&p| PatternFamily::Tribternary.is_member(p)));
    }

    #[test]
    fn constructive_multiples(n in 1u64..300) {
        let n_big = BigUint::from(n);
        for (f, m) in [
            (PatternFamily::Fibternary, fibternary_multiple(n)),
            (PatternFamily::Fibbinary, fibbinary_multiple(n)),
        ] {
            prop_assert!(!m.is_zero());
            prop_assert!((&m % &n_big).is_zero());
            prop_assert!(is_member_big(f, &m));
        }
    }

    #[test]
    fn alpha_intervals_nest(lo in 40u32..120, extra in 1u32..80) {
        let coarse = alpha_bits(lo);
        let fine = alpha_bits(lo + extra);
        prop_assert!(fine.lower_f64() >= coarse.lower_f64() && fine.upper_f64() <= coarse.upper_f64());
        prop_assert!(fine.width() <= coarse.width());
        prop_assert!(fine.lower_f64() < 1.8392868 && fine.upper_f64() > 1.8392867);
    }

    #[test]
    fn deviation_is_bounded(n in 1u64..1_000_000) {
        let d = successor_deviation_at(n, 96);
        prop_assert!(d.gt_ratio(-1, 1) && d.lt_ratio(1, 1));
    }
}
