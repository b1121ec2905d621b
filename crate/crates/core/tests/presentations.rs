use finaut_core::aut::{is_isomorphic, validate_presentation};
use finaut_core::build::{build, build_with, BuildOptions};
use finaut_core::catalog::{catalog, printed_presentations};
use finaut_core::coset::{enumerate_order, todd_coxeter};
use finaut_core::spec::{GroupSpec, Order16};
use finaut_core::words::Word;

const COSETS: usize = 4_000_000;

fn opts() -> BuildOptions {
    BuildOptions { max_elements: 200_000, max_cosets: COSETS }
}

fn pres_of(text: &str) -> finaut_core::words::Presentation {
    match GroupSpec::parse(text).unwrap() {
        GroupSpec::Presented(p) => p,
        other => panic!("not a presentation: {}", other),
    }
}

/// Automorphism groups the printed presentations are listed for.
fn structural(name: &str, p: u32) -> String {
    let (top, preset) = match name {
        "576" => ("C8xC2", "ab_b"),
        "2304" => ("C4xC2xC2", "ab_b"),
        "1152(63)" => ("D8", "ab_a"),
        "1152(81)" => ("Q2xC2", "c_bc"),
        "6912" => ("E16", "a_b"),
        _ => unreachable!(),
    };
    format!("aut(fam16p2({}, {}, {}))", top, p, preset)
}

#[test]
fn printed_presentations_enumerate_to_the_structural_order() {
    for p in [3u32, 5, 7] {
        let fixtures = printed_presentations(p);
        assert_eq!(fixtures.len(), 5);
        for (name, text, order) in fixtures {
            let index = enumerate_order(&pres_of(&text), COSETS).unwrap();
            assert_eq!(index as u128, order, "{} at p = {}", name, p);
            let built = build_with(&GroupSpec::parse(&structural(name, p)).unwrap(), &opts()).unwrap();
            assert_eq!(index as u128, built.order, "{} at p = {}", name, p);
        }
    }
}

#[test]
fn catalog_presentations_match_their_formulas() {
    for p in [3u32, 5, 7] {
        for e in catalog() {
            let Some(text) = e.spec_text(p) else { continue };
            if !text.starts_with("pres{") {
                continue;
            }
            let index = enumerate_order(&pres_of(&text), COSETS).unwrap();
            assert_eq!(Some(index as u128), e.order(p), "{} at p = {}", e.label, p);
        }
    }
}

#[test]
fn order16_presentations() {
    let structural = [
        "cyclic(16)",
        "dp(cyclic(8), cyclic(2))",
        "dp(cyclic(4), cyclic(4))",
        "dp(cyclic(4), cyclic(2), cyclic(2))",
        "elemab(2,4)",
        "dp(dihedral(8), cyclic(2))",
        "dp(dicyclic(8), cyclic(2))",
        "yprod(cyclic(4), dicyclic(8), a^2, a^2)",
        "",
        "",
        "",
        "dihedral(16)",
        "quasidihedral(16)",
        "dicyclic(16)",
    ];
    for (two, s) in Order16::ALL.iter().zip(structural) {
        let pres = two.presentation();
        assert_eq!(enumerate_order(&pres, 1000).unwrap(), 16, "{}", two.name());
        let g = build(&GroupSpec::Order16(*two)).unwrap().group;
        assert!(validate_presentation(&pres, &g, 1000, 100).unwrap().is_some(), "{}", two.name());
        if !s.is_empty() {
            let a = g.closure(100).unwrap();
            let b = build(&GroupSpec::parse(s).unwrap()).unwrap().group.closure(100).unwrap();
            assert!(is_isomorphic(&a, &b).unwrap(), "{}", two.name());
        }
    }
}

#[test]
fn coset_tables_are_complete_permutations() {
    let pres = Order16::QD8.presentation();
    let sub = [Word::gen(1)];
    let table = todd_coxeter(&pres, &sub, 1000).unwrap();
    assert_eq!(table.index(), 8);
    for g in table.generator_permutations() {
        let mut seen = vec![false; table.index()];
        for c in 0..table.index() as u32 {
            seen[g.apply(c) as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }
}

#[test]
fn printed_576_is_not_the_automorphism_group_it_is_listed_for() {
    let (_, text, _) = printed_presentations(3).into_iter().find(|f| f.0 == "576").unwrap();
    let printed = build_with(&GroupSpec::parse(&text).unwrap(), &opts()).unwrap().group.closure(1000).unwrap();
    let aut = build_with(&GroupSpec::parse(&structural("576", 3)).unwrap(), &opts()).unwrap().group.closure(1000).unwrap();
    let (f, g) = (printed.fingerprint(), aut.fingerprint());
    assert_eq!((f.order, f.ncl, f.center_order), (576, 54, 4));
    assert_eq!((g.order, g.ncl, g.center_order), (576, 54, 4));
    assert!(!is_isomorphic(&printed, &aut).unwrap());
}
