//! Properties of the product expression language: parsing never panics and
//! evaluation respects the algebra.

use proptest::prelude::*;
use qrr_core::dsl::{evaluate, parse, Factor, ProductExpr};

fn arg() -> impl Strategy<Value = String> {
    (prop::bool::ANY, 1i64..5).prop_map(|(neg, e)| format!("{}q^{e}", if neg { "-" } else { "" }))
}

fn factor() -> impl Strategy<Value = String> {
    (
        prop::collection::vec(arg(), 1..3),
        1i64..4,
        prop_oneof![Just("inf".to_string()), (-3i64..6).prop_map(|n| n.to_string())],
        prop_oneof![-2i64..0, 1i64..3],
    )
        .prop_map(|(args, base, idx, pow)| format!("({};q^{base})_{idx}^{pow}", args.join(",")))
}

fn expression() -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(factor(), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn parse_never_panics(text in "\\PC{0,40}") {
        let _ = parse(&text);
    }

    #[test]
    fn parse_never_panics_on_near_misses(text in "[-q0-9^_;,()*/ inf]{0,30}") {
        let _ = parse(&text);
    }

    #[test]
    fn rendering_round_trips(factors in expression()) {
        let e = parse(&factors.join(" * ")).unwrap();
        let again = parse(&e.to_string()).unwrap();
        prop_assert_eq!(&again, &e);
    }

    #[test]
    fn factor_order_is_irrelevant(factors in expression(), rot in 0usize..4) {
        let e = parse(&factors.join(" * ")).unwrap();
        let mut rotated = factors.clone();
        let k = rot % rotated.len();
        rotated.rotate_left(k);
        let f = parse(&rotated.join(" * ")).unwrap();
        if let (Ok(a), Ok(b)) = (evaluate(&e, 20), evaluate(&f, 20)) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn lower_orders_are_prefixes(factors in expression(), small in 1i64..20) {
        let e = parse(&factors.join(" * ")).unwrap();
        if let (Ok(big), Ok(low)) = (evaluate(&e, 25), evaluate(&e, small)) {
            prop_assert_eq!(big.truncate(small), low);
        }
    }

    #[test]
    fn division_cancels_multiplication(factors in expression()) {
        let e = parse(&factors.join(" * ")).unwrap();
        let mut inverse = e.clone();
        for f in &mut inverse.factors {
            if let Factor::Poch { power, .. } = f {
                *power = -*power;
            }
        }
        let both = ProductExpr { factors: e.factors.iter().chain(&inverse.factors).cloned().collect() };
        if evaluate(&e, 20).is_ok() && evaluate(&inverse, 20).is_ok() {
            let s = evaluate(&both, 20).unwrap();
            prop_assert_eq!(s, evaluate(&parse("(q;q)_0").unwrap(), 20).unwrap());
        }
    }
}
