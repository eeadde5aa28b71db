mod common;

use circulant_codes::{
    circulant_row, encode, is_graph_vector, macwilliams_dual, min_distance, paley_vector,
    vector_from_connection_set, weight_distribution, BitVector, CirculantCode, ConnectionSet,
    GeneratorVector,
};
use proptest::prelude::*;

fn alpha_strategy(lo: usize, hi: usize) -> impl Strategy<Value = Vec<u8>> {
    (lo..=hi)
        .prop_flat_map(|n| prop::collection::vec(0u8..2, n))
        .prop_map(|mut a| {
            a[0] = 0;
            a
        })
}

fn generator(a: &[u8]) -> GeneratorVector {
    common::to_bits_string(a).parse().unwrap()
}

fn bits(a: &[u8]) -> BitVector {
    BitVector::from_bits(a.iter().map(|&b| b == 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rows_match_dense_definition(a in alpha_strategy(1, 8)) {
        let alpha = generator(&a);
        let dense = common::dense_matrix(&a);
        for i in 1..=a.len() {
            let row = circulant_row(&alpha, i).unwrap();
            prop_assert_eq!(row, bits(&dense[i - 1]));
        }
    }

    #[test]
    fn consecutive_rows_are_right_rotations(a in alpha_strategy(1, 40)) {
        let alpha = generator(&a);
        prop_assert_eq!(circulant_row(&alpha, 1).unwrap(), alpha.bits().clone());
        for i in 1..a.len() {
            let next = circulant_row(&alpha, i + 1).unwrap();
            prop_assert_eq!(next, circulant_row(&alpha, i).unwrap().rotate_right(1));
        }
    }

    #[test]
    fn encode_is_linear(
        (a, m1, m2) in alpha_strategy(1, 24).prop_flat_map(|a| {
            let n = a.len();
            (Just(a), prop::collection::vec(0u8..2, n), prop::collection::vec(0u8..2, n))
        })
    ) {
        let code = CirculantCode::new(generator(&a));
        let sum: Vec<u8> = m1.iter().zip(&m2).map(|(x, y)| x ^ y).collect();
        let mut lhs = encode(&code, &bits(&m1)).unwrap().bits().clone();
        lhs.xor_assign(encode(&code, &bits(&m2)).unwrap().bits());
        let rhs = encode(&code, &bits(&sum)).unwrap();
        prop_assert_eq!(&lhs, rhs.bits());
        prop_assert_eq!(encode(&code, &bits(&m1)).unwrap().bits().clone(), bits(&common::dense_encode(&a, &m1)));
    }

    #[test]
    fn rotating_message_keeps_weight(
        (a, m) in alpha_strategy(1, 24).prop_flat_map(|a| {
            let n = a.len();
            (Just(a), prop::collection::vec(0u8..2, n))
        })
    ) {
        let code = CirculantCode::new(generator(&a));
        let m = bits(&m);
        let w = encode(&code, &m).unwrap().weight();
        prop_assert_eq!(encode(&code, &m.rotate_right(1)).unwrap().weight(), w);
    }

    #[test]
    fn min_distance_matches_brute_force(a in alpha_strategy(1, 10)) {
        let r = min_distance(&generator(&a), None).unwrap();
        prop_assert!(r.exact);
        prop_assert_eq!(r.d, common::brute_min_distance(&a));
        prop_assert_eq!(r.witness.weight(), r.d);
        prop_assert!(r.d <= a.iter().filter(|&&b| b == 1).count() + 1);
        let via_rows = CirculantCode::new(generator(&a)).combine_rows(&r.witness_rows).unwrap();
        prop_assert_eq!(via_rows, r.witness);
    }

    #[test]
    fn distribution_matches_brute_force(a in alpha_strategy(1, 10)) {
        let w = weight_distribution(&generator(&a)).unwrap();
        prop_assert_eq!(w.counts().to_vec(), common::brute_distribution(&a));
    }

    #[test]
    fn distribution_agrees_with_min_distance(a in alpha_strategy(1, 16)) {
        let alpha = generator(&a);
        let w = weight_distribution(&alpha).unwrap();
        prop_assert!(w.sums_to_power_of_two(a.len()));
        prop_assert_eq!(w.get(0), 1);
        prop_assert_eq!(w.min_nonzero_weight(), Some(min_distance(&alpha, None).unwrap().d));
    }

    #[test]
    fn circulant_codes_are_formally_self_dual(a in alpha_strategy(1, 14)) {
        let n = a.len();
        let w = weight_distribution(&generator(&a)).unwrap();
        let dual = macwilliams_dual(&w, 2 * n, n).unwrap();
        prop_assert_eq!(&dual, &w);
        let oracle = common::dual_distribution_i128(w.counts(), n);
        let lib: Vec<i128> = dual.counts().iter().map(|&c| c as i128).collect();
        prop_assert_eq!(lib, oracle);
    }

    #[test]
    fn stop_below_is_consistent(a in alpha_strategy(2, 12), target in 1usize..10) {
        let alpha = generator(&a);
        let exact = min_distance(&alpha, None).unwrap().d;
        let screened = min_distance(&alpha, Some(target)).unwrap();
        prop_assert_eq!(screened.d >= target, exact >= target);
        prop_assert!(screened.d >= exact);
        if screened.exact {
            prop_assert_eq!(screened.d, exact);
        }
    }

    #[test]
    fn connection_sets_give_graph_vectors(n in 1usize..40, raw in prop::collection::btree_set(1usize..20, 0..6)) {
        let offsets: Vec<usize> = raw.into_iter().filter(|&a| 2 * a <= n).collect();
        let alpha = vector_from_connection_set(&ConnectionSet::new(n, offsets.clone()).unwrap());
        prop_assert!(is_graph_vector(&alpha));
        for a in offsets {
            prop_assert!(alpha.b(1 + a) && alpha.b(1 + (n - a)));
        }
    }
}

#[test]
fn paley_vectors_are_symmetric_and_match_squares() {
    for p in [5usize, 13, 17, 29, 37, 41] {
        let alpha = paley_vector(p).unwrap();
        assert!(is_graph_vector(&alpha));
        let squares: std::collections::BTreeSet<usize> = (1..p).map(|x| x * x % p).collect();
        let ones: std::collections::BTreeSet<usize> =
            alpha.ones().into_iter().map(|q| q - 1).collect();
        assert_eq!(ones, squares);
        assert_eq!(alpha.weight(), (p - 1) / 2);
    }
}

proptest! {
    #[test]
    fn bounds_round_trip(rows in prop::collection::btree_map((1usize..80, 1usize..80), (1usize..20, 0usize..5), 0..12)) {
        use circulant_codes::{load_bounds, BoundsEntry, BoundsTable};
        let mut table = BoundsTable::default();
        for ((length, dimension), (lower, extra)) in rows {
            let upper = lower + extra;
            if dimension > length || upper > length {
                continue;
            }
            table.insert(BoundsEntry { length, dimension, lower, upper }).unwrap();
        }
        let csv = table.to_csv();
        let reloaded = load_bounds(csv.as_bytes()).unwrap();
        prop_assert_eq!(&reloaded, &table);
        prop_assert_eq!(reloaded.to_csv(), csv);
    }
}
