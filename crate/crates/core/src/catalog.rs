//! Named automorphism-group shapes, each a spec template over the prime p,
//! and identification of a computed automorphism group against them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::aut::{self, AutResult};
use crate::build::{build_with, BuildOptions};
use crate::error::Result;
use crate::matrix::gl_order;
use crate::modular::{holomorph_exponents, is_prime, singer_exponents};
use crate::spec::GroupSpec;
use crate::table::ElementTable;

/// Invariant factors `F` in `Aut(Cp @ T) = Hol(Cp) x F`, with their specs.
pub const FACTORS: [(&str, &str); 16] = [
    ("C4×C2", "dp(cyclic(4), cyclic(2))"),
    ("D4×C2", "dp(dihedral(8), cyclic(2))"),
    ("1^3", "elemab(2,3)"),
    ("1^4", "elemab(2,4)"),
    ("1^2 wr C2", "wr(elemab(2,2))"),
    ("Aut(2,1^2)", "aut(dp(cyclic(4), elemab(2,2)))"),
    ("S4×C2", "dp(hol(elemab(2,2)), cyclic(2))"),
    ("S4", "hol(elemab(2,2))"),
    ("Hol(1^3)", "hol(elemab(2,3))"),
    ("Hol(2,1)", "hol(dp(cyclic(4), cyclic(2)))"),
    ("Hol(C8)", "hol(cyclic(8))"),
    ("D4", "dihedral(8)"),
    ("C16", "cyclic(16)"),
    ("C4", "cyclic(4)"),
    ("C2", "cyclic(2)"),
    ("I", ""),
];

const FACTOR_ORDERS: [u128; 16] = [8, 16, 8, 16, 32, 192, 48, 24, 1344, 64, 32, 8, 16, 4, 2, 1];

/// The 576 group with 54 classes and a centre of order 4.
const PRES_576: &str = "a^p=b^q=a^b*a^x=c^2=(a,c)=(b,c)=d^4=(a,d^2)=(b,d^2)=(c,d^2)\
=(a*d)^2*(a^-1*d^-1)^2=a*d*b*d^-1*a^-1*d^-1*b^-1*d=a*d*c*d^-1*a^-1*d^-1*c*d\
=(b*d)^2*((d*b)^-1)^2=b*d*c*d^-1*b^-1*d^-1*c*d=(c*d)^2*(c*d^-1)^2=1";

/// Relators shared by the 1152 and 6912 families: two holomorphs swapped by `d`.
const HOL_PAIR: &str = "e^p=f^q=h^p=k^q=e^f*e^x=h^k*h^x=d^2=(e,h)=(e,k)=(f,h)=(f,k)\
=e^d*h=f^d*h*k^-1=h^d*e=k^d*e*f^-1=(a,e)=(b,e)=(c,e)=(a,f)=(b,f)=(c,f)\
=(a,h)=(b,h)=(c,h)=(a,k)=(b,k)=(c,k)=1";

const PRES_2304: &str = "a^2=b^2=c^2=(a,b)=(a*c)^4=(a*c*b*c)^2=(b*c)^4=d^2=(a,d)=b^d*b*a=c^d*a*c*a=1";
const PRES_1152_63: &str = "a^4=b^2=a^b*a=c^2=(a,c)=(b,c)=d^2=(a,d)=b^d*c*a^-1*b=c^d*c*a^2=1";
const PRES_1152_81: &str = "a^4=b^2=a^b*a=c^2=(a,c)=(b,c)=d^2=a^d*a=(b,d)=c^d*c*a^2=1";
/// The order-3 generator is `g` here; `x` is the holomorph parameter.
const PRES_6912: &str = "a^2=b^2=c^2=(a,b)=((a,c),a)=((b,c),a)=((b,c),b)=g^3=a^g*b=b^g*b*a=(c,g)\
=d^2=(a,d)=b^d*b*a=(c,d)=g^d*g=(g,e)=(g,f)=(g,h)=(g,k)=1";

/// Automorphism groups with a `C8` image for `p != 1 mod 8`.
const PRES_C8: &str = "a^p=b^p=c^t=a^c*b=b^c*a^x*b^y=d^4=(a,d)=b^d*(c*a^x*c^-1)^-1=c^d*c^(-p)=1";

fn hol(p: u32) -> u128 {
    p as u128 * (p as u128 - 1)
}

fn hol_x(p: u32) -> Option<i64> {
    holomorph_exponents(p).ok()?.solutions.first().map(|s| s[0])
}

fn hol_pair_pres(gens: &str, head: &str, p: u32) -> Option<String> {
    let x = hol_x(p)?;
    Some(format!("pres{{{},d,e,f,h,k; {}={}; p={},q={},x={}}}", gens, head.trim_end_matches("=1"), HOL_PAIR, p, p - 1, x))
}

/// One catalog shape.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: String,
    spec: fn(u32, usize) -> Option<String>,
    order: fn(u32, usize) -> Option<u128>,
    arg: usize,
}

impl CatalogEntry {
    /// Spec text for the prime `p`, or `None` when `p` is not admissible.
    pub fn spec_text(&self, p: u32) -> Option<String> {
        (self.spec)(p, self.arg)
    }

    pub fn spec(&self, p: u32) -> Option<GroupSpec> {
        GroupSpec::parse(&self.spec_text(p)?).ok()
    }

    pub fn order(&self, p: u32) -> Option<u128> {
        (self.order)(p, self.arg)
    }
}

fn entry(label: String, spec: fn(u32, usize) -> Option<String>, order: fn(u32, usize) -> Option<u128>, arg: usize) -> CatalogEntry {
    CatalogEntry { label, spec, order, arg }
}

fn factor_spec(p: u32, i: usize) -> Option<String> {
    let f = FACTORS[i].1;
    Some(if f.is_empty() { format!("hol(cyclic({}))", p) } else { format!("dp(hol(cyclic({})), {})", p, f) })
}

fn factor_order(p: u32, i: usize) -> Option<u128> {
    Some(hol(p) * FACTOR_ORDERS[i])
}

fn pair_factor_spec(p: u32, i: usize) -> Option<String> {
    Some(format!("dp(hol(cyclic({0})), hol(cyclic({0})), {1})", p, FACTORS[i].1))
}

fn pair_factor_order(p: u32, i: usize) -> Option<u128> {
    Some(hol(p) * hol(p) * FACTOR_ORDERS[i])
}

/// Catalog entries, most specific first.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    out.push(entry("[144]".into(), |p, _| (p == 3).then(|| "sd(elemab(3,2), order16(QD8), preset=QD8full)".into()), |p, _| (p == 3).then_some(144), 0));
    out.push(entry(
        "D4×[144]".into(),
        |p, _| (p == 3).then(|| "dp(dihedral(8), sd(elemab(3,2), order16(QD8), preset=QD8full))".into()),
        |p, _| (p == 3).then_some(1152),
        0,
    ));
    out.push(entry(
        "C4×[144]".into(),
        |p, _| (p == 3).then(|| "dp(cyclic(4), sd(elemab(3,2), order16(QD8), preset=QD8full))".into()),
        |p, _| (p == 3).then_some(576),
        0,
    ));
    out.push(entry(
        "S4×[144]".into(),
        |p, _| (p == 3).then(|| "dp(hol(elemab(2,2)), sd(elemab(3,2), order16(QD8), preset=QD8full))".into()),
        |p, _| (p == 3).then_some(3456),
        0,
    ));
    out.push(entry(
        "[576](54,4)".into(),
        |p, _| {
            let s = format!("sd(elemab({},1), cyclic(8), action=[[-1]]@{})", p, p);
            Some(format!("aut(yprod({0}, {0}, b^2, b^2))", s))
        },
        |p, _| Some(16 * hol(p) * hol(p)),
        0,
    ));
    out.push(entry("[2304](90,2)".into(), |p, _| hol_pair_pres("a,b,c", PRES_2304, p), |p, _| Some(64 * hol(p) * hol(p)), 0));
    out.push(entry("[1152](63,2)".into(), |p, _| hol_pair_pres("a,b,c", PRES_1152_63, p), |p, _| Some(32 * hol(p) * hol(p)), 0));
    out.push(entry("[1152](81,2)".into(), |p, _| hol_pair_pres("a,b,c", PRES_1152_81, p), |p, _| Some(32 * hol(p) * hol(p)), 0));
    out.push(entry(
        "(Hol(Cp)×1^2) wr C2".into(),
        |p, _| Some(format!("wr(dp(hol(cyclic({})), elemab(2,2)))", p)),
        |p, _| Some(32 * hol(p) * hol(p)),
        0,
    ));
    out.push(entry(
        "[6912]".into(),
        |p, _| Some(format!("aut(dp(dihedral({0}), dihedral({0}), elemab(2,2)))", 2 * p)),
        |p, _| Some(192 * hol(p) * hol(p)),
        0,
    ));
    out.push(entry(
        "[(Cp×Cp)@Ct]@C4".into(),
        |p, _| {
            if p % 8 == 1 {
                return None;
            }
            let x = singer_exponents(p).ok()?.solutions.first()?[0];
            let y = (x * x) % p as i64;
            Some(format!("pres{{a,b,c,d; {}; p={},t={},x={},y={}}}", PRES_C8, p, p * p - 1, x, y))
        },
        |p, _| (p % 8 != 1).then(|| 4 * (p as u128).pow(2) * ((p as u128).pow(2) - 1)),
        0,
    ));
    out.push(entry(
        "(Cp×Cp)@(Cq×QD16)".into(),
        |p, _| {
            (p == 7).then(|| {
                "sd(elemab(7,2), dp(cyclic(3), quasidihedral(32)), action=[[2,0],[0,2]]@7, \
                 action=[[0,1],[1,3]]@7, action=[[1,0],[3,-1]]@7)"
                    .into()
            })
        },
        |p, _| (p == 7).then_some(4704),
        0,
    ));
    out.push(entry("Hol(Cp)×Hol(Cp)×1^3".into(), |p, _| Some(format!("dp(hol(cyclic({0})), hol(cyclic({0})), elemab(2,3))", p)), |p, _| Some(8 * hol(p) * hol(p)), 0));
    for i in [1usize, 3, 4] {
        out.push(entry(format!("Hol(Cp)×Hol(Cp)×{}", FACTORS[i].0), pair_factor_spec, pair_factor_order, i));
    }
    out.push(entry("Hol(Cp) wr C2".into(), |p, _| Some(format!("wr(hol(cyclic({})))", p)), |p, _| Some(2 * hol(p) * hol(p)), 0));
    out.push(entry("Hol(Cp)×Hol(Cp)".into(), |p, _| Some(format!("dp(hol(cyclic({0})), hol(cyclic({0})))", p)), |p, _| Some(hol(p) * hol(p)), 0));
    out.push(entry(
        "Hol(Cp×Cp)".into(),
        |p, _| Some(format!("hol(elemab({},2))", p)),
        |p, _| Some((p as u128).pow(2) * gl_order(2, p as u64)),
        0,
    ));
    for (i, (name, _)) in FACTORS.iter().enumerate() {
        let label = if *name == "I" { String::from("Hol(Cp)") } else { format!("Hol(Cp)×{}", name) };
        out.push(entry(label, factor_spec, factor_order, i));
    }
    out
}

/// Printed presentations of the hol-pair families at `p`, as
/// `(name, spec, order)`. The 576 and 6912 ones give groups with the listed
/// invariants that are not the automorphism groups they are printed for.
pub fn printed_presentations(p: u32) -> Vec<(&'static str, String, u128)> {
    let mut out = Vec::new();
    if let Some(x) = hol_x(p) {
        out.push(("576", format!("pres{{a,b,c,d; {}; p={},q={},x={}}}", PRES_576, p, p - 1, x), 16 * hol(p) * hol(p)));
    }
    let pairs: [(&str, &str, &str, u128); 4] = [
        ("2304", "a,b,c", PRES_2304, 64),
        ("1152(63)", "a,b,c", PRES_1152_63, 32),
        ("1152(81)", "a,b,c", PRES_1152_81, 32),
        ("6912", "a,b,c,g", PRES_6912, 192),
    ];
    for (name, gens, head, k) in pairs {
        if let Some(s) = hol_pair_pres(gens, head, p) {
            out.push((name, s, k * hol(p) * hol(p)));
        }
    }
    out
}

/// How a catalog label was matched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub label: String,
    /// `false` when only the order could be compared.
    pub by_isomorphism: bool,
}

/// Finds the first catalog entry isomorphic to the automorphism group.
///
/// With a table of `Aut(G)`, candidates are prefiltered by fingerprint and
/// confirmed by an isomorphism. Without one (the group is over the cap),
/// the first entry of equal order is returned, marked as order-only.
pub fn identify(aut: &AutResult, table: Option<&ElementTable>, p: u32, cap: usize) -> Result<Option<Identification>> {
    if !is_prime(p as u64) || p < 3 {
        return Ok(None);
    }
    let fp = table.map(|t| t.fingerprint());
    let opts = BuildOptions { max_elements: cap, ..BuildOptions::default() };
    for e in catalog() {
        if e.order(p) != Some(aut.order) {
            continue;
        }
        let (Some(t), Some(f)) = (table, fp.as_ref()) else {
            return Ok(Some(Identification { label: e.label, by_isomorphism: false }));
        };
        let Some(spec) = e.spec(p) else { continue };
        let built = build_with(&spec, &opts)?;
        let h = built.group.closure(cap)?;
        if h.fingerprint() == *f && aut::is_isomorphic(t, &h)? {
            return Ok(Some(Identification { label: e.label, by_isomorphism: true }));
        }
    }
    Ok(None)
}
