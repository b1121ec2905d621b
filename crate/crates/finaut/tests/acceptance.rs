//! End-to-end acceptance run: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use finaut::core::aut::{aut_tower, automorphism_group, exhaustive_aut_order, is_isomorphic, AutOptions};
use finaut::core::build::{build, build_with, BuildOptions};
use finaut::core::catalog::{catalog, printed_presentations};
use finaut::core::coset::enumerate_order;
use finaut::core::matrix::{gl_order, sylow2_gl2, two_part};
use finaut::core::modular::{c16_action_params, coxeter234_search, Coxeter234Form};
use finaut::core::spec::{GroupSpec, Order16};
use finaut::core::table::ElementTable;
use finaut::verify::analyse;
use finaut::{verify_table, Caps, Filter, Report, Status};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn caps() -> Caps {
    Caps { max_cosets: 4_000_000, ..Caps::default() }
}

fn verify(id: &str, p: &[u32], rows: &[&str]) -> Result<Report, String> {
    let filter = Filter { p: p.to_vec(), rows: rows.iter().map(|s| s.to_string()).collect(), include_long_running: false };
    let r = verify_table(id, &filter, &caps()).map_err(|e| e.to_string())?;
    let failed: Vec<String> = r
        .checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| format!("{} {}: expected {} computed {}", c.id, c.field, c.expected, c.computed))
        .collect();
    ensure(failed.is_empty(), || failed.join("; "))?;
    ensure(r.summary.pass > 0, || format!("{}: no checks ran", id))?;
    Ok(r)
}

fn computed(r: &Report, id: &str, field: &str) -> Option<serde_json::Value> {
    r.checks.iter().find(|c| c.id == id && c.field == field).map(|c| c.computed.clone())
}

fn aut_fingerprint(spec: &str) -> Result<(u128, usize, usize), String> {
    let a = analyse(&GroupSpec::parse(spec).map_err(|e| e.to_string())?, &caps(), true).map_err(|e| e.to_string())?;
    let t = a.aut_table.ok_or("Aut table over the cap")?;
    Ok((a.aut.order, t.conjugacy_classes().len(), t.center().len()))
}

fn table1() -> Outcome {
    let r = verify("table1", &[], &[])?;
    let e16 = computed(&r, "table1/E16", "aut_order").ok_or("no E16 row")?;
    ensure(e16 == serde_json::json!(gl_order(4, 2) as u64), || format!("E16 Aut {} != |GL(4,2)|", e16))?;
    Ok(format!("{} checks, |Aut(E16)| = |GL(4,2)| = 20160", r.summary.pass))
}

fn complete_144() -> Outcome {
    let g = GroupSpec::parse("sd(elemab(3,2), order16(QD8), preset=QD8full)").unwrap();
    let a = analyse(&g, &caps(), false).map_err(|e| e.to_string())?;
    ensure(a.table.order() == 144 && a.aut.order == 144 && a.aut.is_complete(), || {
        format!("order {} aut {} complete {}", a.table.order(), a.aut.order, a.aut.is_complete())
    })?;
    Ok("order 144, complete".into())
}

fn group_576() -> Outcome {
    let f = aut_fingerprint("fam16p2(C8xC2, 3, ab_b)")?;
    ensure(f == (576, 54, 4), || format!("{:?}", f))?;
    Ok("Aut order 576, 54 classes, centre 4".into())
}

fn table10() -> Outcome {
    let r = verify("table10", &[], &[])?;
    Ok(format!("{} checks: order 288, centre 2, order histogram", r.summary.pass))
}

fn table8() -> Outcome {
    let r = verify("table8", &[], &["x=1", "x=16"])?;
    let label = computed(&r, "table8/x=16", "label").ok_or("no x=16 label")?;
    ensure(label == serde_json::json!("Hol(Cp)×C16"), || format!("x=16 label {}", label))?;
    Ok(format!("{} checks: x=16 (289, 4352, Hol(Cp)×C16), x=1 (97, 73984)", r.summary.pass))
}

fn families() -> Outcome {
    let want = [
        ("fam16p2(C4xC2xC2, 3, ab_b)", (2304, 90, 2)),
        ("fam16p2(D8, 3, ab_a)", (1152, 63, 2)),
        ("fam16p2(Q2xC2, 3, c_bc)", (1152, 81, 2)),
    ];
    for (spec, f) in want {
        let got = aut_fingerprint(spec)?;
        ensure(got == f, || format!("{}: {:?} != {:?}", spec, got, f))?;
    }
    let a = analyse(&GroupSpec::parse("fam16p2(E16, 3, a_b)").unwrap(), &caps(), false).map_err(|e| e.to_string())?;
    ensure(a.aut.order == 6912, || format!("E16 (a,b): {}", a.aut.order))?;
    let r = verify("table3a", &[], &["C4xC2xC2 ab_b", "D8 ab_a", "Q2xC2 c_bc", "E16 a_b"])?;
    Ok(format!("2304(90,2), 1152(63,2), 1152(81,2), 6912; {} labelled checks", r.summary.pass))
}

fn towers() -> Outcome {
    let t5 = build(&GroupSpec::parse("sd(elemab(5,2), order16(Q2xC2), preset=Q2other)").unwrap())
        .map_err(|e| e.to_string())?
        .group
        .closure(200_000)
        .map_err(|e| e.to_string())?;
    let tw = aut_tower(&t5, 6, 200_000, &AutOptions::default()).map_err(|e| e.to_string())?;
    let orders: Vec<u128> = tw.steps.iter().map(|s| s.order).collect();
    ensure(orders == [400, 9600, 19200, 38400] && !tw.truncated && tw.steps.last().unwrap().complete, || {
        format!("p=5 tower {:?}", orders)
    })?;
    let t7 = build(&GroupSpec::parse("sd(elemab(7,2), order16(Q2xC2), preset=Q2other)").unwrap())
        .map_err(|e| e.to_string())?
        .group
        .closure(200_000)
        .map_err(|e| e.to_string())?;
    let tw7 = aut_tower(&t7, 2, 200_000, &AutOptions::default()).map_err(|e| e.to_string())?;
    let o7: Vec<u128> = tw7.steps.iter().map(|s| s.order).collect();
    ensure(o7.starts_with(&[784, 28224, 56448]), || format!("p=7 tower {:?}", o7))?;
    Ok(format!("p=5 {:?} complete; p=7 {:?} (reported)", &orders[1..], &o7[..]))
}

fn sylow() -> Outcome {
    for p in [3u32, 5, 7, 17, 23, 31, 41, 47] {
        let s = sylow2_gl2(p).map_err(|e| e.to_string())?;
        ensure(s.order() == two_part(gl_order(2, p as u64)), || format!("p = {}: {}", p, s.order()))?;
    }
    let a2 = verify("tableA2", &[3, 5, 7, 23, 31], &[])?;
    let a1 = verify("tableA1", &[3, 7, 23], &[])?;
    Ok(format!("2-parts for 8 primes; A2 {} checks; A1 {} checks", a2.summary.pass, a1.summary.pass))
}

fn solvers() -> Outcome {
    for (p, x, y) in [(7u32, 1i64, 3i64), (23, 1, 4), (31, -1, 5), (47, -1, 3)] {
        let s = c16_action_params(p).map_err(|e| e.to_string())?;
        ensure(s.contains(&[x, y]), || format!("c16 p = {} lacks ({},{})", p, x, y))?;
    }
    ensure(c16_action_params(31).unwrap().solutions.iter().all(|s| s[0] == 30), || "x = 1 accepted at 31".into())?;
    let a4 = verify("tableA4", &[7, 23, 31, 47, 71, 103, 167], &[])?;
    let p31 = coxeter234_search(31, Coxeter234Form::OffdiagPair).unwrap().solutions;
    ensure(p31 == [vec![12, 5], vec![26, 19]] && (26 * 11) % 31 != 29, || format!("p=31 {:?}", p31))?;
    let r11 = verify("table11a", &[], &["p=47", "p=79"])?;
    Ok(format!(
        "c16 params; A4 {} checks (+ p=31 printed (26,11) violates xy=-2, (26,19) found); 11a {} checks",
        a4.summary.pass, r11.summary.pass
    ))
}

fn table9() -> Outcome {
    let r = verify("table9", &[7], &[])?;
    ensure(r.identifications.len() == 3 && r.identifications.iter().all(|i| i.by_isomorphism), || {
        format!("{:?}", r.identifications)
    })?;
    let o = BuildOptions { max_elements: 200_000, max_cosets: 4_000_000 };
    let tab = |s: &str| build_with(&GroupSpec::parse(s).unwrap(), &o).unwrap().group.closure(200_000).unwrap();
    let d8 = tab("aut(sd(elemab(7,2), order16(D8), preset=D8full))");
    let q4 = tab("aut(sd(elemab(7,2), order16(Q4), preset=Q4full))");
    ensure(d8.order() == 4704 && is_isomorphic(&d8, &q4).unwrap(), || "Aut(D8full) and Aut(Q4full) differ".into())?;
    Ok("Aut(C16full) = 4704 ≅ (C7×C7)@(C3×QD16) ≅ Aut(D8full) ≅ Aut(Q4full)".into())
}

fn invariants(t: &ElementTable) -> Result<(), String> {
    let classes = t.conjugacy_classes();
    let reps = classes.representatives();
    let total: usize = reps.iter().map(|&r| classes.size_of(r)).sum();
    ensure(total == t.order(), || "class equation".into())?;
    let z = t.center();
    ensure(z.iter().all(|&c| (0..t.order() as u32).all(|x| t.mul(c, x) == t.mul(x, c))), || "centre".into())?;
    let q = t.quotient_by_normal(&z).map_err(|e| e.to_string())?;
    ensure(q.order() * z.len() as u128 == t.order() as u128, || "quotient order".into())?;
    ensure(t.is_normal(&t.derived_subgroup()), || "derived subgroup".into())
}

fn properties() -> Outcome {
    let mut oracle = 0;
    let mut small: Vec<(String, ElementTable)> = Order16::ALL
        .iter()
        .map(|o| (o.name().to_string(), build(&GroupSpec::Order16(*o)).unwrap().group.closure(100).unwrap()))
        .collect();
    for p in [3u32, 5, 7] {
        for e in catalog() {
            if e.order(p).is_some_and(|o| o <= 24) {
                small.push((format!("{} p={}", e.label, p), build(&e.spec(p).unwrap()).unwrap().group.closure(100).unwrap()));
            }
        }
    }
    for s in ["dihedral(24)", "dicyclic(24)", "dp(dihedral(6), cyclic(4))", "hol(elemab(2,2))", "elemab(2,3)", "cyclic(24)"] {
        small.push((s.into(), build(&GroupSpec::parse(s).unwrap()).unwrap().group.closure(100).unwrap()));
    }
    for (name, t) in &small {
        let a = automorphism_group(t, &AutOptions::default()).map_err(|e| e.to_string())?;
        ensure(a.order == exhaustive_aut_order(t), || format!("oracle mismatch on {}", name))?;
        invariants(t).map_err(|e| format!("{}: {}", name, e))?;
        oracle += 1;
    }
    let mut fixtures = 0;
    for p in [3u32, 5, 7] {
        for (name, text, order) in printed_presentations(p) {
            let GroupSpec::Presented(pres) = GroupSpec::parse(&text).unwrap() else { unreachable!() };
            let index = enumerate_order(&pres, 4_000_000).map_err(|e| e.to_string())? as u128;
            ensure(index == order, || format!("{} at p = {}: index {} != {}", name, p, index, order))?;
            fixtures += 1;
        }
        for e in catalog() {
            let Some(text) = e.spec_text(p) else { continue };
            if let Ok(GroupSpec::Presented(pres)) = GroupSpec::parse(&text) {
                let index = enumerate_order(&pres, 4_000_000).map_err(|e| e.to_string())? as u128;
                let built = build_with(&GroupSpec::parse(&text).unwrap(), &caps().build_options()).map_err(|e| e.to_string())?;
                ensure(Some(index) == e.order(p) && built.order == index, || format!("{} at p = {}", e.label, p))?;
                fixtures += 1;
            }
        }
    }
    for spec in ["fam16p2(C8xC2, 3, ab_b)", "sd(elemab(3,2), order16(QD8), preset=QD8full)", "fam16p(M16, 5, C4, a)"] {
        let a = analyse(&GroupSpec::parse(spec).unwrap(), &caps(), true).map_err(|e| e.to_string())?;
        invariants(&a.table)?;
        invariants(a.aut_table.as_ref().unwrap())?;
    }
    Ok(format!("{} oracle groups, {} presentation fixtures", oracle, fixtures))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 11] = [
        ("Table 1 automorphism groups", 30, table1),
        ("[144] is complete", 5, complete_144),
        ("[576](54,4)", 30, group_576),
        ("Table 10 class structure", 30, table10),
        ("Table 8 x=1 and x=16", 300, table8),
        ("p=3 families 2304, 1152, 6912", 180, families),
        ("Automorphism towers", 300, towers),
        ("Sylow 2-subgroups of GL(2,p)", 120, sylow),
        ("Congruence solvers", 120, solvers),
        ("Table 9 at p=7", 600, table9),
        ("Property suite", 300, properties),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*limit);
        let (status, detail) = match (&out, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("over the {} s limit; {}", limit, d)),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {} [{:.1}s / {}s] {}: {}", i + 1, status, took.as_secs_f64(), limit, name, detail);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
