use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use finaut_core::aut::{aut_tower, is_isomorphic, isomorphism, AutOptions};
use finaut_core::build::build_with;
use finaut_core::catalog::identify;
use finaut_core::matrix::{gl_order, sylow2_gl2, sylow2_gln, two_part};
use finaut_core::modular::{
    action_params, c16_action_params, coxeter234_search, holomorph_exponents, iterated_radical_roots, primitive_roots,
    singer_exponents, ActionForm, Coxeter234Form, ModularSolutionSet,
};
use finaut_core::spec::GroupSpec;
use finaut_core::subgroups::{class_order_structure, format_profile, subgroup_inventory, Labeler};
use finaut_core::table::ElementTable;
use serde_json::{json, Map, Value};

use crate::caps::Caps;
use crate::data;
use crate::error::{Error, Result};
use crate::report::{Check, FingerprintReport, Identification, Report};
use crate::verify::{analyse, prime_of_order, verify_table, Filter};

pub const GRAMMAR_HELP: &str = "\
Group spec grammar

atoms
  cyclic(n)            cyclic group of order n
  elemab(p,k)          elementary abelian group of order p^k
  order16(NAME)        NAME in C16 C8xC2 C4xC4 C4xC2xC2 E16 D4xC2 Q2xC2 C4YQ2
                       G44_22 C4sC4 M16 D8 QD8 Q4
  dihedral(n) quasidihedral(n) dicyclic(n)
                       n is the group order
combinators
  dp(A, B, ...)        direct product
  sd(P, T, action=[[..],[..]]@p, ...)
                       P @ T with one matrix per generator of T
  sd(P, T, preset=NAME)
                       named action: QD8full D8full Q4full C16full C8 Q2 Q2other
                       c4_<gens>, <u>_<v> (generators in u invert the first
                       coordinate, those in v the second), s3s3_<u>_<v>
  wr(A)                A wr C2
  yprod(A, B, zA, zB)  central product identifying the words zA and zB
  hol(A)               holomorph
  aut(A)               automorphism group
  perm(n; cycles; cycles; ...)
  pres{gens; relators; name=value, ...}
families
  fam16p(NAME, p, Ck, gens)     Cp @ NAME, the first of gens acts with order k
  fam16p2(NAME, p, preset)      (Cp x Cp) @ NAME with a named action

examples
  sd(elemab(3,2), order16(QD8), preset=QD8full)
  fam16p2(C8xC2, 3, ab_b)
  pres{a,b; a^8=b^2=a^b*a^-3=1}
";

#[derive(Parser, Debug)]
#[command(name = "finaut", version, about = "Automorphism groups of small finite groups, with table verification")]
struct Cli {
    /// Compact JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Pretty-printed JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Primes to work at, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    p: Vec<u32>,
    /// Row selectors for `verify`: row keys or `p<=N`-style bounds.
    #[arg(long, global = true, value_delimiter = ',')]
    rows: Vec<String>,
    #[arg(long, global = true)]
    include_long_running: bool,
    /// Largest automorphism group materialized as an element table.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    #[arg(long, global = true)]
    max_elements: Option<usize>,
    #[arg(long, global = true)]
    max_cosets: Option<usize>,
    /// Print the group spec grammar and exit.
    #[arg(long, global = true)]
    seed_grammar_help: bool,
    #[command(subcommand)]
    cmd: Option<Cmd>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build a group and report its order and fingerprint.
    Build { spec: String },
    /// Automorphism group of a group.
    Aut { spec: String },
    /// Isomorphism test between two groups.
    Iso { left: String, right: String },
    /// G, Aut(G), Aut(Aut(G)), ... until a complete group or a cap.
    Tower {
        spec: String,
        #[arg(long, default_value_t = 6)]
        max_steps: usize,
    },
    /// Sylow 2-subgroup of GL(n,p) for each --p.
    Sylow2 {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Subgroups of one order, by isomorphism type.
    Inventory {
        spec: String,
        #[arg(long)]
        order: usize,
    },
    /// Congruence solvers for each --p.
    Solve {
        #[arg(value_enum)]
        solver: Solver,
        /// Depth for the iterated radical.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Matrices for <2,3,4> over GF(p) for each --p.
    Coxeter234 {
        #[arg(long, value_enum, default_value_t = Form::Offdiag)]
        form: Form,
    },
    /// Verify a table (or `all`) against its expectation file.
    Verify { table: String },
    /// Small-p probes of conjectured patterns.
    ProbeConjecture {
        #[arg(value_enum)]
        name: Conjecture,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Solver {
    C16,
    Radical,
    Holomorph,
    PrimitiveRoots,
    Singer,
    D8,
    Qd8,
    Q4pair,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Form {
    Offdiag,
    General,
    TimesCq,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Conjecture {
    /// Aut(Cp @ T) = Hol(Cp) x F with F independent of p, for the C2 images.
    InvariantFactor,
    /// For p = 7 mod 8, QD16 lies in the Sylow 2-subgroup of GL(2,p) iff p != -1 mod 16.
    Qd16Sylow,
    /// For p = 7 mod 8, the 2-part of |Aut((Cp x Cp) @ C16)| is the Sylow 2-order of GL(2,p).
    C16TwoPart,
}

/// What a run prints and how it exits.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    /// 0 all checks pass, 1 some check failed, 2 usage error.
    pub code: i32,
    pub report: Option<Report>,
}

fn usage(msg: String) -> Outcome {
    Outcome { stdout: String::new(), stderr: format!("{}\n\n{}", msg.trim_end(), GRAMMAR_HELP), code: 2, report: None }
}

/// Runs one command. `argv[0]` is the program name.
pub fn run(argv: &[String]) -> Outcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { stdout: e.to_string(), stderr: String::new(), code: 0, report: None }
                }
                _ => usage(e.to_string()),
            };
        }
    };
    if cli.seed_grammar_help {
        return Outcome { stdout: GRAMMAR_HELP.into(), stderr: String::new(), code: 0, report: None };
    }
    let Some(cmd) = &cli.cmd else {
        return usage("missing subcommand".into());
    };
    let mut caps = Caps::from_env();
    if let Some(v) = cli.max_elements {
        caps.max_elements = v;
    }
    if let Some(v) = cli.max_order {
        caps.max_order = v;
    }
    if let Some(v) = cli.max_cosets {
        caps.max_cosets = v;
    }
    let start = Instant::now();
    let mut report = Report::new(&argv[1..], caps);
    let res = dispatch(cmd, &cli, &caps, &mut report);
    match res {
        Ok(()) => {}
        Err(Error::Usage(m)) | Err(Error::UnknownTable(m)) => return usage(m),
        Err(Error::Core(e @ finaut_core::Error::Parse { .. })) | Err(Error::Core(e @ finaut_core::Error::UnknownSymbol(_))) => {
            return usage(e.to_string())
        }
        Err(e) => report.push(Check::failed("command", "error", Value::Null, e.to_string())),
    }
    report.summarize();
    report.command = argv[1..].to_vec();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    let mut stdout = report.to_json(cli.pretty && !cli.json);
    stdout.push('\n');
    let code = if report.ok() { 0 } else { 1 };
    Outcome { stdout, stderr: String::new(), code, report: Some(report) }
}

fn parse(text: &str) -> Result<GroupSpec> {
    Ok(GroupSpec::parse(text)?)
}

fn table_of(spec: &GroupSpec, caps: &Caps) -> Result<ElementTable> {
    Ok(build_with(spec, &caps.build_options())?.group.closure(caps.max_elements)?)
}

fn primes(cli: &Cli, default: &[u32]) -> Result<Vec<u32>> {
    let ps = if cli.p.is_empty() { default.to_vec() } else { cli.p.clone() };
    if ps.is_empty() {
        return Err(Error::Usage("--p is required".into()));
    }
    Ok(ps)
}

fn dispatch(cmd: &Cmd, cli: &Cli, caps: &Caps, report: &mut Report) -> Result<()> {
    match cmd {
        Cmd::Build { spec } => {
            let g = parse(spec)?;
            report.input("spec", g.to_text());
            let built = build_with(&g, &caps.build_options())?;
            report.result("order", built.order as u64);
            report.result("degree", built.group.degree());
            report.result("generators", built.names.clone());
            if let Some(o) = g.predicted_order() {
                report.push(Check::compare("build", "order", json!(o as u64), json!(built.order as u64)));
            }
            if built.order <= caps.max_elements as u128 {
                let t = built.group.closure(caps.max_elements)?;
                report.fingerprints.push(FingerprintReport::new("G", &t.fingerprint()));
            }
        }
        Cmd::Aut { spec } => {
            let g = parse(spec)?;
            report.input("spec", g.to_text());
            let a = analyse(&g, caps, true)?;
            report.fingerprints.push(FingerprintReport::new("G", &a.table.fingerprint()));
            report.result("aut_order", a.aut.order as u64);
            report.result("center_order", a.aut.center_order);
            report.result("inner_order", a.aut.inner_order() as u64);
            report.result("complete", a.aut.is_complete());
            report.result("orbit_sizes", a.aut.orbit_sizes.clone());
            report.result("generators", a.aut.generators.len());
            report.result("search_nodes", a.aut.nodes);
            if let Some(at) = &a.aut_table {
                report.fingerprints.push(FingerprintReport::new("Aut(G)", &at.fingerprint()));
            }
            let p = cli.p.first().copied().or_else(|| prime_of_order(a.table.order()));
            if let Some(p) = p {
                let id = identify(&a.aut, a.aut_table.as_ref(), p, caps.max_elements)?;
                report.identifications.push(Identification {
                    subject: "Aut(G)".into(),
                    label: id.as_ref().map(|i| i.label.clone()),
                    by_isomorphism: id.as_ref().is_some_and(|i| i.by_isomorphism),
                });
            }
        }
        Cmd::Iso { left, right } => {
            let (g, h) = (parse(left)?, parse(right)?);
            report.input("left", g.to_text());
            report.input("right", h.to_text());
            let (tg, th) = (table_of(&g, caps)?, table_of(&h, caps)?);
            report.fingerprints.push(FingerprintReport::new("left", &tg.fingerprint()));
            report.fingerprints.push(FingerprintReport::new("right", &th.fingerprint()));
            let map = isomorphism(&tg, &th, &AutOptions::default())?;
            report.result("isomorphic", map.is_some());
            report.result("generator_images", map.map(Value::from).unwrap_or(Value::Null));
        }
        Cmd::Tower { spec, max_steps } => {
            let g = parse(spec)?;
            report.input("spec", g.to_text());
            report.input("max_steps", *max_steps);
            let t = table_of(&g, caps)?;
            let tower = aut_tower(&t, *max_steps, caps.max_order, &AutOptions::default())?;
            let steps: Vec<Value> = tower
                .steps
                .iter()
                .map(|s| json!({"order": s.order as u64, "center_order": s.center_order, "ncl": s.ncl, "complete": s.complete}))
                .collect();
            report.result("orders", tower.steps.iter().map(|s| s.order as u64).collect::<Vec<_>>());
            report.result("steps", steps);
            report.result("terminated", !tower.truncated);
        }
        Cmd::Sylow2 { n } => {
            let mut out = Map::new();
            for p in primes(cli, &[])? {
                let s = if *n == 2 { sylow2_gl2(p)? } else { sylow2_gln(*n, p)? };
                let want = two_part(gl_order(*n as u32, p as u64));
                report.push(Check::compare(&format!("sylow2/p={}", p), "order", json!(want as u64), json!(s.order() as u64)));
                let mut entry = Map::new();
                entry.insert("order".into(), json!(s.order() as u64));
                entry.insert("name".into(), json!(s.name));
                if s.order() <= caps.max_elements as u128 {
                    let t = s.group().closure(caps.max_elements)?;
                    let classes: Map<String, Value> = class_order_structure(&t)
                        .iter()
                        .map(|(o, prof)| (o.to_string(), Value::from(format_profile(prof))))
                        .collect();
                    entry.insert("classes".into(), Value::Object(classes));
                    if t.order() <= 64 {
                        entry.insert("label".into(), json!(Labeler::default().label(&t)?));
                    }
                }
                out.insert(p.to_string(), Value::Object(entry));
            }
            report.result("sylow2", Value::Object(out));
        }
        Cmd::Inventory { spec, order } => {
            let g = parse(spec)?;
            report.input("spec", g.to_text());
            report.input("order", *order);
            let t = table_of(&g, caps)?;
            let inv = subgroup_inventory(&t, *order)?;
            report.result("count", inv.count);
            report.result("types", json!(inv.types));
        }
        Cmd::Solve { solver, n } => {
            let mut out = Map::new();
            for p in primes(cli, &[])? {
                let set = match solver {
                    Solver::C16 => c16_action_params(p),
                    Solver::Radical => {
                        let n = n.ok_or_else(|| Error::Usage("radical needs --n".into()))?;
                        iterated_radical_roots(p, n)
                    }
                    Solver::Holomorph => holomorph_exponents(p),
                    Solver::PrimitiveRoots => primitive_roots(p),
                    Solver::Singer => singer_exponents(p),
                    Solver::D8 => Ok(action_params(p, ActionForm::D8)),
                    Solver::Qd8 => Ok(action_params(p, ActionForm::QD8)),
                    Solver::Q4pair => Ok(action_params(p, ActionForm::Q4Pair)),
                };
                out.insert(p.to_string(), solution_value(set));
            }
            report.result("solutions", Value::Object(out));
        }
        Cmd::Coxeter234 { form } => {
            let f = match form {
                Form::Offdiag => Coxeter234Form::OffdiagPair,
                Form::General => Coxeter234Form::GeneralQuadruple,
                Form::TimesCq => Coxeter234Form::TimesCq,
            };
            let mut out = Map::new();
            for p in primes(cli, &[])? {
                out.insert(p.to_string(), solution_value(coxeter234_search(p, f)));
            }
            report.result("solutions", Value::Object(out));
        }
        Cmd::Verify { table } => {
            let filter = Filter { p: cli.p.clone(), rows: cli.rows.clone(), include_long_running: cli.include_long_running };
            let ids: Vec<String> =
                if table == "all" { data::table_ids().into_iter().map(String::from).collect() } else { vec![table.clone()] };
            for id in &ids {
                let r = verify_table(id, &filter, caps)?;
                if ids.len() == 1 {
                    report.inputs = r.inputs;
                } else {
                    report.input(id, r.inputs.get("title").cloned().unwrap_or(Value::Null));
                }
                report.fingerprints.extend(r.fingerprints);
                report.identifications.extend(r.identifications);
                for c in r.checks {
                    report.push(c);
                }
            }
        }
        Cmd::ProbeConjecture { name } => probe(*name, cli, caps, report)?,
    }
    Ok(())
}

fn solution_value(set: finaut_core::Result<ModularSolutionSet>) -> Value {
    match set {
        Ok(s) => json!({"constraint": s.constraint, "solutions": s.solutions}),
        Err(e) => json!({"error": e.to_string()}),
    }
}

fn probe(name: Conjecture, cli: &Cli, caps: &Caps, report: &mut Report) -> Result<()> {
    report.input("conjecture", format!("{:?}", name));
    match name {
        Conjecture::InvariantFactor => {
            let table = data::load("table2a")?;
            for p in primes(cli, &[5, 7])? {
                for row in table.rows.iter().filter(|r| r.key.ends_with(" C2")) {
                    let spec = row.spec.as_deref().unwrap_or_default().replacen(", 3, C2", &format!(", {}, C2", p), 1);
                    let g = parse(&spec)?;
                    let a = analyse(&g, caps, true)?;
                    let id = format!("invariant-factor/p={}/{}", p, row.key);
                    let hol = p as u64 * (p as u64 - 1);
                    let want = row.expect.aut_order.unwrap_or(0) as u64 / 6 * hol;
                    report.push(Check::compare(&id, "aut_order", json!(want), json!(a.aut.order as u64)));
                    let got = identify(&a.aut, a.aut_table.as_ref(), p, caps.max_elements)?.map(|i| i.label);
                    report.push(Check::compare(&id, "label", json!(row.expect.label), json!(got)));
                }
            }
        }
        Conjecture::Qd16Sylow => {
            for p in primes(cli, &[7, 23, 31, 47, 71, 79])? {
                let id = format!("qd16-sylow/p={}", p);
                if p % 8 != 7 {
                    report.push(Check::skipped(&id, "row", "p is not 7 mod 8"));
                    continue;
                }
                let t = sylow2_gl2(p)?.group().closure(caps.max_elements)?;
                let has = subgroup_inventory(&t, 32)?.types.contains_key("QD16");
                report.push(Check::compare(&id, "contains_qd16", json!(p % 16 != 15), json!(has)));
            }
        }
        Conjecture::C16TwoPart => {
            for p in primes(cli, &[7, 23])? {
                let id = format!("c16-two-part/p={}", p);
                if p % 8 != 7 {
                    report.push(Check::skipped(&id, "row", "p is not 7 mod 8"));
                    continue;
                }
                if p > 7 && !cli.include_long_running {
                    report.push(Check::skipped(&id, "row", "long-running row; pass --include-long-running"));
                    continue;
                }
                let g = parse(&format!("sd(elemab({},2), order16(C16), preset=C16full)", p))?;
                let a = analyse(&g, caps, false)?;
                let want = two_part(gl_order(2, p as u64));
                report.push(Check::compare(&id, "aut_two_part", json!(want as u64), json!(two_part(a.aut.order) as u64)));
            }
        }
    }
    Ok(())
}

/// True when the two specs build isomorphic groups within the caps.
pub fn specs_isomorphic(left: &str, right: &str, caps: &Caps) -> Result<bool> {
    let (g, h) = (table_of(&parse(left)?, caps)?, table_of(&parse(right)?, caps)?);
    Ok(is_isomorphic(&g, &h)?)
}
