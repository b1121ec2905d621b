use finaut_core::matrix::MatGF;
use finaut_core::modular::{
    c16_action_params, coxeter234_search, holomorph_exponents, iterated_radical_roots, mult_order, primitive_roots,
    singer_exponents, Coxeter234Form,
};
use proptest::prelude::*;

#[test]
fn c16_parameters() {
    for (p, x, y) in [(7u32, 1i64, 3i64), (23, 1, 4), (31, -1, 5), (47, -1, 3)] {
        let s = c16_action_params(p).unwrap();
        assert!(s.contains(&[x, y]), "p = {}", p);
        for sol in &s.solutions {
            let m = MatGF::from_rows(p, &[&[0, 1], &[sol[0], sol[1]]]).unwrap();
            assert_eq!(m.order().unwrap(), 16);
        }
    }
    assert!(c16_action_params(41).unwrap().contains(&[3, 0]));
    assert!(c16_action_params(17).is_err());
}

#[test]
fn c16_x_eq_1_relation_fails_where_the_sylow_order_exceeds_32() {
    for p in [31i64, 47, 79] {
        let s = c16_action_params(p as u32).unwrap();
        assert!(s.solutions.iter().all(|sol| sol[0] == p - 1), "p = {}", p);
        for y in (0..p).filter(|y| ((y * y % p + 2).pow(2) - 2).rem_euclid(p) == 0) {
            let m = MatGF::from_rows(p as u32, &[&[0, 1], &[1, y]]).unwrap();
            assert_ne!(m.order().unwrap(), 16);
        }
    }
    for p in [7u32, 23, 71, 103] {
        assert!(c16_action_params(p).unwrap().solutions.iter().any(|sol| sol[0] == 1), "p = {}", p);
    }
}

#[test]
fn coxeter234_offdiag_pairs() {
    let cases: [(u32, &[[i64; 2]]); 7] = [
        (7, &[[1, 5], [2, 6]]),
        (23, &[[7, 3], [20, 16]]),
        (31, &[[12, 5], [26, 19]]),
        (47, &[[18, 26], [20, 14], [21, 29], [33, 27]]),
        (71, &[[7, 20], [51, 64]]),
        (103, &[]),
        (167, &[[54, 68], [99, 113]]),
    ];
    for (p, want) in cases {
        let got = coxeter234_search(p, Coxeter234Form::OffdiagPair).unwrap();
        let want: Vec<Vec<i64>> = want.iter().map(|s| s.to_vec()).collect();
        assert_eq!(got.solutions, want, "p = {}", p);
    }
    assert_ne!((26 * 11) % 31, 31 - 2);
}

#[test]
fn iterated_radicals() {
    assert_eq!(iterated_radical_roots(7, 3).unwrap().firsts(), vec![1, 3, 4, 6]);
    assert_eq!(iterated_radical_roots(47, 4).unwrap().firsts(), vec![1, 4, 11, 18, 29, 36, 43, 46]);
    assert_eq!(iterated_radical_roots(79, 4).unwrap().firsts(), vec![8, 13, 17, 24, 55, 62, 66, 71]);
    for (p, n) in [(47u32, 4u32), (79, 4), (31, 5), (127, 7)] {
        for x in iterated_radical_roots(p, n).unwrap().firsts() {
            let m = MatGF::from_rows(p, &[&[0, 1], &[1, x]]).unwrap();
            assert_eq!(m.order().unwrap(), 1 << (n + 1), "p = {}, x = {}", p, x);
        }
    }
    assert!(iterated_radical_roots(41, 3).is_err());
}

#[test]
fn exponent_lists() {
    let singer: Vec<i64> = [3u32, 5, 7, 11, 13, 17].iter().map(|&p| singer_exponents(p).unwrap().firsts()[0]).collect();
    assert_eq!(singer, vec![1, 3, 2, 5, 2, 6]);
    let hol: Vec<i64> = [3u32, 5, 7].iter().map(|&p| holomorph_exponents(p).unwrap().firsts()[0]).collect();
    assert_eq!(hol, vec![1, 2, 2]);
}

proptest! {
    #[test]
    fn primitive_roots_have_full_order(p in prop::sample::select(vec![3u32, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47])) {
        let roots = primitive_roots(p).unwrap();
        prop_assert!(!roots.solutions.is_empty());
        for r in roots.firsts() {
            prop_assert_eq!(mult_order(r, p as i64), Some(p as u64 - 1));
        }
        for x in holomorph_exponents(p).unwrap().firsts() {
            prop_assert_eq!(mult_order(-x, p as i64), Some(p as u64 - 1));
        }
    }

    #[test]
    fn offdiag_solutions_satisfy_the_constraint(p in prop::sample::select(vec![7u32, 11, 13, 17, 19, 23, 29, 31, 41, 43, 47, 53])) {
        for s in coxeter234_search(p, Coxeter234Form::OffdiagPair).unwrap().solutions {
            prop_assert_eq!((s[0] * s[1] + 2).rem_euclid(p as i64), 0);
        }
    }
}
