//! Partition counters against each other and against product generating
//! functions.

use num_bigint::BigInt;
use proptest::prelude::*;
use qrr_core::dsl::{evaluate, parse};
use qrr_core::partitions::{
    capparelli_row, congruence_counts, count_congruence, count_congruence_dfs, count_difference, counts_to_series,
    CongruenceClass, DifferenceRule,
};
use qrr_core::series::LaurentSeries;

fn product(text: &str, order: i64) -> LaurentSeries {
    evaluate(&parse(text).unwrap(), order).unwrap()
}

#[test]
fn descent_and_knapsack_agree_to_forty() {
    for class in [CongruenceClass::c2(), CongruenceClass::c3(), CongruenceClass::d2()] {
        let dp = congruence_counts(&class, 40);
        for n in 0..=40 {
            assert_eq!(dp[n as usize], BigInt::from(count_congruence_dfs(&class, n)), "{class:?} n={n}");
        }
    }
}

#[test]
fn class_counts_match_their_products() {
    let cases = [
        (CongruenceClass::c2(), "(-q^2;q^2)_inf * (-q^3;q^6)_inf"),
        (CongruenceClass::c3(), "(q^2,q^3,q^9,q^10;q^12)_inf^-1"),
        (CongruenceClass::d2(), "(-q;q^2)_inf * (-q^6;q^6)_inf"),
    ];
    for (class, text) in cases {
        let counted = counts_to_series(|n| count_congruence(&class, n), 60);
        assert_eq!(counted, product(text, 60), "{text}");
    }
}

#[test]
fn difference_counts_match_the_products() {
    let first = counts_to_series(|n| count_difference(&DifferenceRule::capparelli_first(), n), 60);
    assert_eq!(first, product("(-q^2;q^2)_inf * (-q^3;q^6)_inf", 60));
    let second = counts_to_series(|n| count_difference(&DifferenceRule::capparelli_second(), n), 60);
    assert_eq!(second, product("(-q;q^2)_inf * (-q^6;q^6)_inf", 60));
}

#[test]
fn both_identities_hold_to_sixty() {
    for which in 1..=2 {
        for n in 0..=60 {
            let row = capparelli_row(which, n).unwrap();
            assert!(row.equal, "{row:?}");
        }
    }
}

/// Partitions into distinct parts with gap at least 2 and no other rule:
/// the first Rogers-Ramanujan count, `1/(q,q^4;q^5)_inf`.
#[test]
fn plain_gap_rule_gives_rogers_ramanujan() {
    let rule = DifferenceRule { forbidden_parts: vec![], min_gap: 2, gap_exceptions: vec![] };
    let counted = counts_to_series(|n| count_difference(&rule, n), 40);
    assert_eq!(counted, product("(q,q^4;q^5)_inf^-1", 40));
}

fn class() -> impl Strategy<Value = CongruenceClass> {
    (2i64..9, prop::collection::btree_set(0i64..9, 0..5), prop::bool::ANY).prop_map(|(m, res, distinct)| {
        CongruenceClass { modulus: m, allowed_residues: res.into_iter().filter(|&r| r < m).collect(), distinct }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counters_agree_on_random_classes(c in class(), n in 0i64..25) {
        prop_assert_eq!(count_congruence(&c, n), BigInt::from(count_congruence_dfs(&c, n)));
    }

    #[test]
    fn more_residues_never_fewer_partitions(c in class(), extra in 0i64..9, n in 0i64..30) {
        let mut wider = c.clone();
        let r = extra % c.modulus;
        if !wider.allowed_residues.contains(&r) {
            wider.allowed_residues.push(r);
        }
        prop_assert!(count_congruence(&wider, n) >= count_congruence(&c, n));
    }

    #[test]
    fn allowing_repeats_never_fewer_partitions(c in class(), n in 0i64..30) {
        let repeats = CongruenceClass { distinct: false, ..c.clone() };
        let distinct = CongruenceClass { distinct: true, ..c };
        prop_assert!(count_congruence(&repeats, n) >= count_congruence(&distinct, n));
    }

    #[test]
    fn lifting_the_forbidden_part_never_loses_partitions(n in 0i64..35) {
        let mut open = DifferenceRule::capparelli_first();
        open.forbidden_parts.clear();
        prop_assert!(count_difference(&open, n) >= count_difference(&DifferenceRule::capparelli_first(), n));
    }
}
