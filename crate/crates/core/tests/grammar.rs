use finaut_core::build::build;
use finaut_core::spec::GroupSpec;
use proptest::prelude::*;

fn atom() -> impl Strategy<Value = String> {
    prop_oneof![
        (1u32..12).prop_map(|n| format!("cyclic({})", n)),
        (prop::sample::select(vec![2u32, 3, 5]), 1u32..3).prop_map(|(p, k)| format!("elemab({},{})", p, k)),
        prop::sample::select(vec!["C16", "E16", "D4xC2", "G44_22", "M16", "QD8", "Q4"]).prop_map(|n| format!("order16({})", n)),
        prop::sample::select(vec![6u32, 8, 10]).prop_map(|n| format!("dihedral({})", n)),
        Just("dicyclic(8)".to_string()),
        Just("quasidihedral(16)".to_string()),
    ]
}

fn spec() -> impl Strategy<Value = String> {
    atom().prop_recursive(2, 6, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..=3).prop_map(|v| format!("dp({})", v.join(", "))),
            inner.clone().prop_map(|s| format!("wr({})", s)),
            inner.prop_map(|s| format!("hol({})", s)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn display_round_trips(text in spec()) {
        let g = GroupSpec::parse(&text).unwrap();
        let again = GroupSpec::parse(&g.to_string()).unwrap();
        prop_assert_eq!(&again, &g);
        prop_assert_eq!(again.to_string(), g.to_string());
    }

    #[test]
    fn predicted_orders_hold(text in atom(), other in atom()) {
        let g = GroupSpec::parse(&format!("dp({}, {})", text, other)).unwrap();
        if let Some(o) = g.predicted_order() {
            prop_assert_eq!(build(&g).unwrap().order, o);
        }
    }
}

#[test]
fn malformed_specs_are_rejected() {
    for bad in ["", "cyclic(", "dp()", "order16(C17)", "sd(elemab(3,2), cyclic(2))", "pres{a; a^=1}", "frobnicate(3)"] {
        assert!(GroupSpec::parse(bad).is_err(), "{}", bad);
    }
}
