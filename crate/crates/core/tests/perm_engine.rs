use finaut_core::chain::PermutationGroup;
use finaut_core::perm::Permutation;
use finaut_core::table::ElementTable;
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn perms(n: usize, k: usize) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(perm(n), 1..=k)
}

fn group(n: usize, gens: Vec<Permutation>) -> (PermutationGroup, ElementTable) {
    let g = PermutationGroup::new(n, gens).unwrap();
    let t = g.closure(10_000).unwrap();
    (g, t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compose_is_associative(a in perm(9), b in perm(9), c in perm(9)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn composition_applies_left_first(a in perm(8), b in perm(8), i in 0u32..8) {
        prop_assert_eq!(a.compose(&b).apply(i), b.apply(a.apply(i)));
    }

    #[test]
    fn inverse_and_order(a in perm(10)) {
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.pow(a.order() as i64).is_identity());
        for d in 1..a.order() {
            if a.order() % d == 0 {
                prop_assert!(!a.pow(d as i64).is_identity());
            }
        }
        prop_assert_eq!(a.pow(-1), a.inverse());
    }

    #[test]
    fn conjugation_and_commutator(a in perm(7), b in perm(7)) {
        prop_assert_eq!(a.conjugate(&b), b.inverse().compose(&a).compose(&b));
        prop_assert_eq!(a.commutator(&b), a.inverse().compose(&b.inverse()).compose(&a).compose(&b));
        prop_assert_eq!(a.conjugate(&b).order(), a.order());
    }

    #[test]
    fn cycles_round_trip(a in perm(9)) {
        let cycles = a.cycles();
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        prop_assert_eq!(Permutation::from_cycles(9, &refs).unwrap(), a);
    }

    #[test]
    fn chain_order_matches_closure(gens in perms(7, 3)) {
        let (g, t) = group(7, gens.clone());
        prop_assert_eq!(g.order(), t.order() as u128);
        for x in t.elements().unwrap() {
            prop_assert!(g.contains(x));
        }
        let chain = g.stabilizer_chain();
        prop_assert_eq!(chain.orbit_lengths().iter().map(|&l| l as u128).product::<u128>(), g.order());
    }

    #[test]
    fn non_members_are_rejected(gens in perms(6, 2), x in perm(6)) {
        let (g, t) = group(6, gens);
        prop_assert_eq!(g.contains(&x), t.index_of(&x).is_some());
    }

    #[test]
    fn class_equation(gens in perms(6, 2)) {
        let (_, t) = group(6, gens);
        let classes = t.conjugacy_classes();
        let reps = classes.representatives();
        let total: usize = reps.iter().map(|&r| classes.size_of(r)).sum();
        prop_assert_eq!(total, t.order());
        for &r in &reps {
            prop_assert_eq!(t.order() % classes.size_of(r), 0);
        }
        let z = t.center();
        prop_assert_eq!(reps.iter().filter(|&&r| classes.size_of(r) == 1).count(), z.len());
    }

    #[test]
    fn center_commutes_and_quotient_has_the_right_order(gens in perms(6, 2)) {
        let (_, t) = group(6, gens);
        let z = t.center();
        for &c in &z {
            for x in 0..t.order() as u32 {
                prop_assert_eq!(t.mul(c, x), t.mul(x, c));
            }
        }
        prop_assert!(t.is_normal(&z));
        let q = t.quotient_by_normal(&z).unwrap();
        prop_assert_eq!(q.order() * z.len() as u128, t.order() as u128);
    }

    #[test]
    fn derived_subgroup_is_normal_and_contains_commutators(gens in perms(6, 2)) {
        let (_, t) = group(6, gens);
        let d = t.derived_subgroup();
        prop_assert!(t.is_normal(&d));
        prop_assert_eq!(t.order() % d.len(), 0);
        for x in 0..t.order() as u32 {
            for y in [0u32, 1, (t.order() / 2) as u32] {
                if (y as usize) < t.order() {
                    prop_assert!(d.contains(&t.comm(x, y)));
                }
            }
        }
    }

    #[test]
    fn table_arithmetic(gens in perms(7, 2)) {
        let (_, t) = group(7, gens);
        let n = t.order() as u32;
        for x in 0..n {
            prop_assert_eq!(t.mul(x, t.inv(x)), 0);
            prop_assert_eq!(t.pow(x, t.element_order(x) as i64), 0);
            prop_assert_eq!(t.mul_word(0, &t.word(x)), x);
        }
        let hist: u32 = t.order_histogram().values().sum();
        prop_assert_eq!(hist, n);
    }
}

#[test]
fn symmetric_and_alternating_orders() {
    let s = |d: usize, cs: &[&str]| {
        let gens = cs.iter().map(|c| Permutation::parse_cycles(c, d).unwrap()).collect();
        PermutationGroup::new(d, gens).unwrap().order()
    };
    assert_eq!(s(5, &["(1,2,3,4,5)", "(1,2)"]), 120);
    assert_eq!(s(7, &["(1,2,3,4,5,6,7)", "(1,2)"]), 5040);
    assert_eq!(s(7, &["(1,2,3)", "(1,2,3,4,5,6,7)"]), 2520);
    assert_eq!(s(10, &["(1,2,3,4,5,6,7,8,9,10)", "(1,2)"]), 3_628_800);
}
