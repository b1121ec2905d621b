use std::time::Instant;

use finaut_core::aut::{aut_table, automorphism_group, AutOptions, AutResult};
use finaut_core::build::build_with;
use finaut_core::catalog::identify;
use finaut_core::matrix::{gl_order, sylow2_gl2, two_part};
use finaut_core::modular::{coxeter234_search, is_prime, iterated_radical_roots, Coxeter234Form};
use finaut_core::spec::GroupSpec;
use finaut_core::subgroups::{class_order_structure, format_profile, parse_profile, subgroup_inventory};
use finaut_core::table::ElementTable;
use serde_json::{json, Value};

use crate::caps::Caps;
use crate::data::{self, Kind, Row};
use crate::error::{Error, Result};
use crate::report::{Check, FingerprintReport, Identification, Report, Status};

/// Row selection for [`verify_table`].
#[derive(Clone, Debug, Default)]
pub struct Filter {
    /// Keep rows whose prime is listed (rows without a prime are kept).
    pub p: Vec<u32>,
    /// Row selectors: an exact row key, or `p<=N`, `p>=N`, `p<N`, `p>N`,
    /// `p=N`. A row is kept when any selector matches.
    pub rows: Vec<String>,
    pub include_long_running: bool,
}

impl Filter {
    pub fn keeps(&self, row: &Row) -> bool {
        if !self.p.is_empty() {
            if let Some(p) = row.p {
                if !self.p.contains(&p) {
                    return false;
                }
            }
        }
        self.rows.is_empty() || self.rows.iter().any(|s| selector_matches(s, row))
    }
}

fn selector_matches(sel: &str, row: &Row) -> bool {
    let sel = sel.trim();
    if sel == row.key {
        return true;
    }
    let Some(rest) = sel.strip_prefix('p') else { return false };
    let Some(p) = row.p else { return false };
    let (op, num) = if let Some(n) = rest.strip_prefix("<=") {
        ("<=", n)
    } else if let Some(n) = rest.strip_prefix(">=") {
        (">=", n)
    } else if let Some(n) = rest.strip_prefix('<') {
        ("<", n)
    } else if let Some(n) = rest.strip_prefix('>') {
        (">", n)
    } else if let Some(n) = rest.strip_prefix('=') {
        ("=", n)
    } else {
        return false;
    };
    let Ok(n) = num.trim().parse::<u32>() else { return false };
    match op {
        "<=" => p <= n,
        ">=" => p >= n,
        "<" => p < n,
        ">" => p > n,
        _ => p == n,
    }
}

/// A built group with its automorphism group.
pub struct Analysis {
    pub table: ElementTable,
    pub ncl: usize,
    pub center: usize,
    pub aut: AutResult,
    /// Present when requested and `|Aut| <= caps.max_order`.
    pub aut_table: Option<ElementTable>,
}

pub fn analyse(spec: &GroupSpec, caps: &Caps, want_aut_table: bool) -> Result<Analysis> {
    let built = build_with(spec, &caps.build_options())?;
    let table = built.group.closure(caps.max_elements)?;
    let ncl = table.conjugacy_classes().len();
    let center = table.center().len();
    let aut = automorphism_group(&table, &AutOptions::default())?;
    let aut_table =
        if want_aut_table && aut.order <= caps.max_order as u128 { Some(aut_table(&table, &aut, caps.max_order)?) } else { None };
    Ok(Analysis { table, ncl, center, aut, aut_table })
}

/// `p` when the order is `16p` or `16p^2` for an odd prime `p`.
pub fn prime_of_order(order: usize) -> Option<u32> {
    if order % 16 != 0 {
        return None;
    }
    let m = (order / 16) as u64;
    if m > 2 && is_prime(m) {
        return Some(m as u32);
    }
    let r = (m as f64).sqrt().round() as u64;
    (r > 2 && r * r == m && is_prime(r)).then_some(r as u32)
}

fn num(x: u128) -> Value {
    json!(x as u64)
}

/// Recomputes every selected row of a table and compares field by field.
pub fn verify_table(id: &str, filter: &Filter, caps: &Caps) -> Result<Report> {
    let table = data::load(id)?;
    let mut report = Report::new(&["verify".into(), table.table.clone()], *caps);
    report.input("table", table.table.as_str());
    report.input("title", table.title.as_str());
    report.input("data_version", table.version);
    report.input("p", filter.p.clone());
    report.input("rows", filter.rows.clone());
    report.input("include_long_running", filter.include_long_running);
    let start = Instant::now();
    for row in table.rows.iter().filter(|r| filter.keeps(r)) {
        let rid = format!("{}/{}", table.table, row.key);
        let mut checks = if row.long_running && !filter.include_long_running {
            vec![Check::skipped(&rid, "row", "long-running row; pass --include-long-running")]
        } else if row.long_running && caps.budget_secs.is_some_and(|b| start.elapsed().as_secs() >= b) {
            vec![Check::skipped(&rid, "row", "wall-clock budget exhausted")]
        } else {
            let res = match table.kind {
                Kind::Aut => aut_row(&rid, row, caps, &mut report),
                Kind::Sylow => sylow_row(&rid, row, caps),
                Kind::Solver => solver_row(&rid, row),
            };
            res.unwrap_or_else(|e| vec![Check::failed(&rid, "error", Value::Null, e.to_string())])
        };
        for c in &mut checks {
            c.location = Some(row.location.clone());
            if c.note.is_none() {
                c.note = row.note.clone();
            }
            if c.status != Status::Skipped && row.is_informational(&c.field) {
                c.status = Status::Informational;
            }
        }
        for c in checks {
            report.push(c);
        }
    }
    report.summarize();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn aut_row(rid: &str, row: &Row, caps: &Caps, report: &mut Report) -> Result<Vec<Check>> {
    let text = row.spec.as_deref().ok_or_else(|| Error::Usage(format!("{} has no spec", rid)))?;
    let spec = GroupSpec::parse(text)?;
    let e = &row.expect;
    let a = analyse(&spec, caps, e.needs_aut_table())?;
    let mut out = Vec::new();
    if let Some(o) = e.order {
        out.push(Check::compare(rid, "order", num(o), json!(a.table.order())));
    }
    if let Some(n) = e.ncl {
        out.push(Check::compare(rid, "ncl", json!(n), json!(a.ncl)));
    }
    if let Some(z) = e.center {
        out.push(Check::compare(rid, "center", json!(z), json!(a.center)));
    }
    if let Some(o) = e.aut_order {
        out.push(Check::compare(rid, "aut_order", num(o), num(a.aut.order)));
    }
    if let Some(c) = e.complete {
        out.push(Check::compare(rid, "complete", json!(c), json!(a.aut.is_complete())));
    }
    if !e.needs_aut_table() {
        return Ok(out);
    }
    let Some(at) = &a.aut_table else {
        for f in ["aut_ncl", "aut_center", "aut_histogram", "label"] {
            out.push(Check::skipped(rid, f, "automorphism group above max_order"));
        }
        return Ok(out);
    };
    let f = at.fingerprint();
    report.fingerprints.push(FingerprintReport::new(&format!("Aut({})", row.key), &f));
    if let Some(n) = e.aut_ncl {
        out.push(Check::compare(rid, "aut_ncl", json!(n), json!(f.ncl)));
    }
    if let Some(z) = e.aut_center {
        out.push(Check::compare(rid, "aut_center", json!(z), json!(f.center_order)));
    }
    if let Some(h) = &e.aut_histogram {
        let computed: std::collections::BTreeMap<u32, u32> = f.order_histogram.clone();
        out.push(Check::compare(rid, "aut_histogram", json!(h), json!(computed)));
    }
    if let Some(label) = &e.label {
        let p = row.p.or_else(|| prime_of_order(a.table.order())).unwrap_or(0);
        let id = identify(&a.aut, Some(at), p, caps.max_elements)?;
        report.identifications.push(Identification {
            subject: format!("Aut({})", row.key),
            label: id.as_ref().map(|i| i.label.clone()),
            by_isomorphism: id.as_ref().is_some_and(|i| i.by_isomorphism),
        });
        let computed = id.map(|i| Value::from(i.label)).unwrap_or(Value::Null);
        out.push(Check::compare(rid, "label", json!(label), computed));
    }
    Ok(out)
}

fn sylow_row(rid: &str, row: &Row, caps: &Caps) -> Result<Vec<Check>> {
    let p = row.p.ok_or_else(|| Error::Usage(format!("{} has no prime", rid)))?;
    let s = sylow2_gl2(p)?;
    let t = s.group().closure(caps.max_elements)?;
    let e = &row.expect;
    let mut out = vec![Check::compare(rid, "gl2_two_part", num(two_part(gl_order(2, p as u64))), json!(t.order()))];
    if let Some(o) = e.order {
        out.push(Check::compare(rid, "order", num(o), json!(t.order())));
    }
    if let Some(classes) = &e.classes {
        let cs = class_order_structure(&t);
        for (o, text) in classes {
            let want = parse_profile(text)?;
            let got = cs.get(o);
            let mut c = Check::compare(
                rid,
                &format!("classes.{}", o),
                json!(text),
                got.map(|g| Value::from(format_profile(g))).unwrap_or(Value::Null),
            );
            c.status = if got == Some(&want) { Status::Pass } else { Status::Fail };
            out.push(c);
        }
    }
    for (k, want) in [(16usize, &e.subgroups16), (32, &e.subgroups32)] {
        let Some(want) = want else { continue };
        let got = if t.order() % k == 0 { subgroup_inventory(&t, k)?.labels() } else { Vec::new() };
        let mut want = want.clone();
        want.sort();
        out.push(Check::compare(rid, &format!("subgroups{}", k), json!(want), json!(got)));
    }
    Ok(out)
}

fn solver_row(rid: &str, row: &Row) -> Result<Vec<Check>> {
    let p = row.p.ok_or_else(|| Error::Usage(format!("{} has no prime", rid)))?;
    let set = match row.solver.as_deref() {
        Some("coxeter234") => coxeter234_search(p, Coxeter234Form::OffdiagPair)?,
        Some("iterated_radical") => {
            let n = row.n.ok_or_else(|| Error::Usage(format!("{} has no n", rid)))?;
            iterated_radical_roots(p, n)?
        }
        other => return Err(Error::Usage(format!("{}: unknown solver {:?}", rid, other))),
    };
    let mut got = set.solutions.clone();
    got.sort();
    let e = &row.expect;
    let mut out = Vec::new();
    if let Some(want) = &e.solutions {
        let mut want = want.clone();
        want.sort();
        out.push(Check::compare(rid, "solutions", json!(want), json!(got)));
    }
    if let Some(n) = e.count {
        out.push(Check::compare(rid, "count", json!(n), json!(got.len())));
    }
    if let Some(want) = &e.contains {
        let found: Vec<&Vec<i64>> = want.iter().filter(|w| got.contains(w)).collect();
        out.push(Check::compare(rid, "contains", json!(want), json!(found)));
    }
    Ok(out)
}
