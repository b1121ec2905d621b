//! Subgroups of a fixed order, isomorphism-type labels, and the
//! class/order profile of a small group.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::aut;
use crate::build::build;
use crate::error::{Error, Result};
use crate::spec::{GroupSpec, Order16};
use crate::table::{ElementTable, Fingerprint};

/// Subgroups of one order, grouped by isomorphism type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inventory {
    pub order: usize,
    /// Number of subgroups of this order (not up to conjugacy).
    pub count: usize,
    /// Type label -> number of subgroups of that type.
    pub types: BTreeMap<String, usize>,
}

impl Inventory {
    pub fn labels(&self) -> Vec<String> {
        self.types.keys().cloned().collect()
    }
}

/// Every subgroup of order `k`, as sorted element lists.
///
/// Subgroups are grown as joins of cyclic subgroups; every intermediate join
/// lies inside the target, so only joins of order dividing `k` are kept.
pub fn subgroups_of_order(t: &ElementTable, k: usize) -> Vec<Vec<u32>> {
    let n = t.order();
    if k == 0 || n % k != 0 {
        return Vec::new();
    }
    if k == 1 {
        return alloc::vec![alloc::vec![0]];
    }
    let mut cyclic: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut seen_cyclic: BTreeSet<Vec<u32>> = BTreeSet::new();
    for x in 1..n as u32 {
        let o = t.element_order(x) as usize;
        if k % o != 0 {
            continue;
        }
        let mut c: Vec<u32> = (0..o as i64).map(|e| t.pow(x, e)).collect();
        c.sort_unstable();
        if seen_cyclic.insert(c.clone()) {
            cyclic.push((x, c));
        }
    }
    let mut all: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    for (x, c) in &cyclic {
        if all.insert(c.clone()) {
            queue.push((alloc::vec![*x], c.clone()));
        }
    }
    let mut member = alloc::vec![false; n];
    let mut i = 0;
    while i < queue.len() {
        let (gens, h) = queue[i].clone();
        i += 1;
        if h.len() == k {
            continue;
        }
        for &x in &h {
            member[x as usize] = true;
        }
        for (x, _) in &cyclic {
            if member[*x as usize] {
                continue;
            }
            let mut g2 = gens.clone();
            g2.push(*x);
            if let Some(j) = capped_closure(t, &g2, k) {
                if k % j.len() == 0 && all.insert(j.clone()) {
                    queue.push((g2, j));
                }
            }
        }
        for &x in &h {
            member[x as usize] = false;
        }
    }
    all.into_iter().filter(|h| h.len() == k).collect()
}

fn capped_closure(t: &ElementTable, gens: &[u32], cap: usize) -> Option<Vec<u32>> {
    let words: Vec<Vec<u16>> = gens.iter().map(|&g| t.word(g)).collect();
    let mut seen = hashbrown::HashSet::new();
    seen.insert(0u32);
    let mut out = alloc::vec![0u32];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        i += 1;
        for w in &words {
            let y = t.mul_word(x, w);
            if seen.insert(y) {
                if out.len() == cap {
                    return None;
                }
                out.push(y);
            }
        }
    }
    out.sort_unstable();
    Some(out)
}

/// Element table of a subgroup given by its elements in `t`.
pub fn subgroup_table(t: &ElementTable, elements: &[u32]) -> Result<ElementTable> {
    let gens = t.generating_set_of(elements);
    let gens = if gens.is_empty() { alloc::vec![0] } else { gens };
    let (sub, _) = t.subtable(&gens)?;
    Ok(sub)
}

/// Named groups used to label subgroups.
fn named_specs(order: usize) -> Vec<(String, GroupSpec)> {
    let mut out: Vec<(String, GroupSpec)> = Vec::new();
    match order {
        8 => {
            for (name, text) in [
                ("C8", "cyclic(8)"),
                ("C4xC2", "dp(cyclic(4), cyclic(2))"),
                ("E8", "elemab(2,3)"),
                ("D4", "dihedral(8)"),
                ("Q2", "dicyclic(8)"),
            ] {
                out.push((name.to_string(), GroupSpec::parse(text).expect("valid spec")));
            }
        }
        16 => {
            for g in Order16::ALL {
                out.push((g.name().to_string(), GroupSpec::Order16(g)));
            }
        }
        32 => {
            for (name, text) in [
                ("C32", "cyclic(32)"),
                ("QD16", "quasidihedral(32)"),
                ("D16", "dihedral(32)"),
                ("Q8", "dicyclic(32)"),
                ("C4wrC2", "wr(cyclic(4))"),
                ("C16xC2", "dp(cyclic(16), cyclic(2))"),
                ("C8xC4", "dp(cyclic(8), cyclic(4))"),
                ("C8YQ2", "yprod(cyclic(8), dicyclic(8), a^4, a^2)"),
            ] {
                out.push((name.to_string(), GroupSpec::parse(text).expect("valid spec")));
            }
        }
        _ => {}
    }
    out
}

/// FNV-1a over the fingerprint fields.
pub fn fingerprint_hash(f: &Fingerprint) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |v: u64| {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    eat(f.order as u64);
    eat(f.ncl as u64);
    eat(f.center_order as u64);
    for (&o, &c) in &f.order_histogram {
        eat(o as u64);
        eat(c as u64);
    }
    for &d in &f.derived_orders {
        eat(d as u64);
    }
    h
}

/// Labels tables by isomorphism type against a fixed list of named groups.
pub struct Labeler {
    named: BTreeMap<usize, Vec<(String, ElementTable, Fingerprint)>>,
    cap: usize,
}

impl Default for Labeler {
    fn default() -> Self {
        Labeler { named: BTreeMap::new(), cap: crate::DEFAULT_MAX_ELEMENTS }
    }
}

impl Labeler {
    fn named(&mut self, order: usize) -> Result<&[(String, ElementTable, Fingerprint)]> {
        if !self.named.contains_key(&order) {
            let mut list = Vec::new();
            for (name, spec) in named_specs(order) {
                let b = build(&spec)?;
                let t = b.group.closure(self.cap)?;
                let f = t.fingerprint();
                list.push((name, t, f));
            }
            self.named.insert(order, list);
        }
        Ok(&self.named[&order])
    }

    /// Name of the isomorphism type of `t`, or `order<n>-fp:<hash>`.
    pub fn label(&mut self, t: &ElementTable) -> Result<String> {
        let f = t.fingerprint();
        for (name, h, hf) in self.named(t.order())? {
            if *hf == f && aut::is_isomorphic(t, h)? {
                return Ok(name.clone());
            }
        }
        Ok(format!("order{}-fp:{:016x}", t.order(), fingerprint_hash(&f)))
    }
}

/// Isomorphism types of all subgroups of order `k`.
pub fn subgroup_inventory(t: &ElementTable, k: usize) -> Result<Inventory> {
    let mut labeler = Labeler::default();
    let subs = subgroups_of_order(t, k);
    let mut types: BTreeMap<String, usize> = BTreeMap::new();
    let mut cache: Vec<(Fingerprint, ElementTable, String)> = Vec::new();
    for h in &subs {
        let st = subgroup_table(t, h)?;
        let f = st.fingerprint();
        let mut found = None;
        for (cf, ct, cl) in &cache {
            if *cf == f && aut::is_isomorphic(&st, ct)? {
                found = Some(cl.clone());
                break;
            }
        }
        let label = match found {
            Some(l) => l,
            None => {
                let l = labeler.label(&st)?;
                cache.push((f, st, l.clone()));
                l
            }
        };
        *types.entry(label).or_default() += 1;
    }
    Ok(Inventory { order: k, count: subs.len(), types })
}

/// For each element order above 1: class size -> number of classes.
pub fn class_order_structure(t: &ElementTable) -> BTreeMap<u32, BTreeMap<usize, usize>> {
    let classes = t.conjugacy_classes();
    let mut out: BTreeMap<u32, BTreeMap<usize, usize>> = BTreeMap::new();
    for c in &classes.classes {
        let o = t.element_order(c[0]);
        if o == 1 {
            continue;
        }
        *out.entry(o).or_default().entry(c.len()).or_default() += 1;
    }
    out
}

/// Compact profile notation: `(1,4)`, `2^2`, `(1^2,2^5,8)`.
pub fn format_profile(profile: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = profile
        .iter()
        .map(|(&size, &mult)| if mult == 1 { format!("{}", size) } else { format!("{}^{}", size, mult) })
        .collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(","))
    }
}

/// Parses the notation written by [`format_profile`].
pub fn parse_profile(text: &str) -> Result<BTreeMap<usize, usize>> {
    let body = text.trim().trim_start_matches('(').trim_end_matches(')');
    let mut out = BTreeMap::new();
    for part in body.split(',') {
        let part = part.trim();
        let (size, mult) = match part.split_once('^') {
            Some((s, m)) => (s.trim(), m.trim()),
            None => (part, "1"),
        };
        let bad = || Error::Parse { pos: 0, msg: format!("bad class profile `{}`", text) };
        let size: usize = size.parse().map_err(|_| bad())?;
        let mult: usize = mult.parse().map_err(|_| bad())?;
        *out.entry(size).or_default() += mult;
    }
    Ok(out)
}
