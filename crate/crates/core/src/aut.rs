//! Automorphism groups, isomorphisms and automorphism towers of groups given
//! by element tables.
//!
//! The search fixes a short generating list `g_1..g_k` and looks for images
//! `y_1..y_k`. A partial assignment is checked against every Cayley-graph
//! edge of `<g_1..g_j>`, so a complete assignment that survives is an
//! injective homomorphism. Images are prefiltered by an invariant signature
//! (order, class size, class sizes of prime powers) and by the signatures of
//! products with earlier images.
//!
//! Automorphisms are collected as a chain: level `i` holds automorphisms
//! fixing `g_1..g_(i-1)`, and `|Aut| = prod |orbit of g_i at level i|`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::chain::PermutationGroup;
use crate::coset::todd_coxeter;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::table::{Backend, ElementTable, Signature};
use crate::words::Presentation;

#[derive(Clone, Copy, Debug)]
pub struct AutOptions {
    /// Abort after this many partial assignments.
    pub node_budget: u64,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions { node_budget: u64::MAX }
    }
}

#[derive(Clone, Debug)]
pub struct AutResult {
    pub group_order: usize,
    pub center_order: usize,
    /// `|Aut(G)|`
    pub order: u128,
    /// Base of the search, as element indices of the input table.
    pub base: Vec<u32>,
    pub orbit_sizes: Vec<usize>,
    /// Automorphisms as permutations of element indices.
    pub generators: Vec<Permutation>,
    pub nodes: u64,
}

impl AutResult {
    pub fn inner_order(&self) -> u128 {
        (self.group_order / self.center_order) as u128
    }

    pub fn is_complete(&self) -> bool {
        self.center_order == 1 && self.order == self.group_order as u128
    }

    pub fn permutation_group(&self) -> PermutationGroup {
        let gens = if self.generators.is_empty() {
            alloc::vec![Permutation::identity(self.group_order)]
        } else {
            self.generators.clone()
        };
        PermutationGroup::new(self.group_order, gens).expect("degrees agree")
    }

    /// Images of the table's generators under each automorphism generator.
    pub fn generator_images(&self, t: &ElementTable) -> Vec<Vec<u32>> {
        self.generators.iter().map(|g| t.generators().iter().map(|&x| g.apply(x)).collect()).collect()
    }
}

#[derive(Clone, Copy)]
struct Step {
    x: u32,
    s: u16,
    y: u32,
    tree: bool,
}

/// Invariant labels shared between a source and a target table.
struct SigIndex {
    ids: BTreeMap<Signature, u32>,
}

impl SigIndex {
    fn new(sigs: &[Signature]) -> SigIndex {
        let mut ids = BTreeMap::new();
        for s in sigs {
            let next = ids.len() as u32;
            ids.entry(s.clone()).or_insert(next);
        }
        SigIndex { ids }
    }

    fn label(&self, sigs: &[Signature]) -> Vec<u32> {
        sigs.iter().map(|s| self.ids.get(s).copied().unwrap_or(u32::MAX)).collect()
    }
}

fn signatures(t: &ElementTable) -> Vec<Signature> {
    let classes = t.conjugacy_classes();
    t.element_signatures(&classes)
}

/// Greedy generating list: each step takes the element enlarging the
/// subgroup most, preferring rare signatures and then higher order.
fn choose_base(t: &ElementTable, sig: &[u32]) -> Vec<u32> {
    let n = t.order();
    let mut mates: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for x in 1..n as u32 {
        mates.entry(sig[x as usize]).or_default().push(x);
    }
    let mut groups: Vec<&Vec<u32>> = mates.values().collect();
    groups.sort_by_key(|g| (core::cmp::Reverse(t.element_order(g[0])), g.len()));
    let budget = if n <= 256 { usize::MAX } else if n <= 4096 { 96 } else { 40 };
    let mut base: Vec<u32> = Vec::new();
    let mut member = alloc::vec![false; n];
    member[0] = true;
    let mut size = 1;
    while size < n {
        let mut best: Option<(usize, usize, u32, u32)> = None;
        let mut tried = 0;
        let per_group = if n <= 256 { usize::MAX } else { 2 };
        'groups: for g in &groups {
            let mut taken = 0;
            for &x in g.iter() {
                if member[x as usize] {
                    continue;
                }
                if taken == per_group || tried >= budget {
                    continue 'groups;
                }
                taken += 1;
                tried += 1;
                let mut gens = base.clone();
                gens.push(x);
                let s = t.subgroup(&gens).len();
                let key = (s, g.len(), t.element_order(x), x);
                let better = match best {
                    None => true,
                    Some((bs, bm, bo, _)) => (s, core::cmp::Reverse(g.len()), t.element_order(x))
                        > (bs, core::cmp::Reverse(bm), bo),
                };
                if better {
                    best = Some(key);
                }
            }
            if tried >= budget && best.is_some() {
                break;
            }
        }
        let (_, _, _, x) = best.expect("some element lies outside a proper subgroup");
        base.push(x);
        let h = t.subgroup(&base);
        size = h.len();
        for y in h {
            member[y as usize] = true;
        }
    }
    base
}

/// Source side of a search: the table re-indexed on the base, with the
/// edge scripts and product tests for each level.
struct Source {
    t: ElementTable,
    to_old: Vec<u32>,
    sig: Vec<u32>,
    scripts: Vec<Vec<Step>>,
    pair_tests: Vec<Vec<(usize, bool, u32)>>,
}

impl Source {
    fn new(t: &ElementTable, base: &[u32], sig_old: &[u32]) -> Result<Source> {
        let (rt, to_old) = t.retable(base)?;
        let n = rt.order();
        let sig: Vec<u32> = to_old.iter().map(|&o| sig_old[o as usize]).collect();
        let k = base.len();
        let mut scripts = Vec::with_capacity(k);
        let mut member = alloc::vec![false; n];
        member[0] = true;
        let mut elems = alloc::vec![0u32];
        for j in 0..k {
            let old_len = elems.len();
            let mut steps = Vec::new();
            let mut i = 0;
            while i < elems.len() {
                let x = elems[i];
                let is_old = i < old_len;
                i += 1;
                for s in 0..=j {
                    if is_old && s < j {
                        continue;
                    }
                    let y = rt.right_gen(x, s);
                    if member[y as usize] {
                        steps.push(Step { x, s: s as u16, y, tree: false });
                    } else {
                        member[y as usize] = true;
                        elems.push(y);
                        steps.push(Step { x, s: s as u16, y, tree: true });
                    }
                }
            }
            scripts.push(steps);
        }
        let gens = rt.generators().to_vec();
        let mut pair_tests = Vec::with_capacity(k);
        for i in 0..k {
            let mut tests = Vec::new();
            for j in 0..i {
                let a = rt.mul(gens[i], gens[j]);
                let b = rt.mul(gens[i], rt.inv(gens[j]));
                tests.push((j, false, sig[a as usize]));
                tests.push((j, true, sig[b as usize]));
            }
            pair_tests.push(tests);
        }
        Ok(Source { t: rt, to_old, sig, scripts, pair_tests })
    }

    fn k(&self) -> usize {
        self.scripts.len()
    }
}

struct Search<'a> {
    src: &'a Source,
    tgt: &'a ElementTable,
    tsig: &'a [u32],
    cands: Vec<Vec<u32>>,
    img: Vec<u32>,
    words: Vec<Vec<u16>>,
    phi: Vec<u32>,
    owner: Vec<u32>,
    assigned: Vec<Vec<u32>>,
    nodes: u64,
    budget: u64,
}

const UNSET: u32 = u32::MAX;

impl<'a> Search<'a> {
    fn new(src: &'a Source, tgt: &'a ElementTable, tsig: &'a [u32], budget: u64) -> Search<'a> {
        let k = src.k();
        let n = tgt.order();
        let mut cands = Vec::with_capacity(k);
        for &g in src.t.generators() {
            let s = src.sig[g as usize];
            cands.push((0..n as u32).filter(|&y| tsig[y as usize] == s).collect());
        }
        let mut phi = alloc::vec![UNSET; src.t.order()];
        let mut owner = alloc::vec![UNSET; n];
        phi[0] = 0;
        owner[0] = 0;
        Search {
            src,
            tgt,
            tsig,
            cands,
            img: alloc::vec![0; k],
            words: alloc::vec![Vec::new(); k],
            phi,
            owner,
            assigned: alloc::vec![Vec::new(); k],
            nodes: 0,
            budget,
        }
    }

    /// Sets the image of generator `j` and checks the edges of level `j`.
    fn try_level(&mut self, j: usize, y: u32) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudget(self.budget));
        }
        for &(i, inverse, expect) in &self.src.pair_tests[j] {
            let other = if inverse { self.tgt.inv(self.img[i]) } else { self.img[i] };
            if self.tsig[self.tgt.mul(y, other) as usize] != expect {
                return Ok(false);
            }
        }
        self.img[j] = y;
        self.words[j] = self.tgt.word(y);
        let script = &self.src.scripts[j];
        let mut ok = true;
        for st in script {
            let z = self.tgt.mul_word(self.phi[st.x as usize], &self.words[st.s as usize]);
            if st.tree {
                if self.owner[z as usize] != UNSET {
                    ok = false;
                    break;
                }
                self.phi[st.y as usize] = z;
                self.owner[z as usize] = st.y;
                self.assigned[j].push(st.y);
            } else if self.phi[st.y as usize] != z {
                ok = false;
                break;
            }
        }
        if !ok {
            self.undo(j);
        }
        Ok(ok)
    }

    fn undo(&mut self, j: usize) {
        for y in self.assigned[j].drain(..) {
            let z = self.phi[y as usize];
            self.owner[z as usize] = UNSET;
            self.phi[y as usize] = UNSET;
        }
    }

    /// Extends the current assignment of levels `< j` to all levels.
    fn dfs(&mut self, j: usize) -> Result<bool> {
        if j == self.src.k() {
            return Ok(true);
        }
        for ci in 0..self.cands[j].len() {
            let y = self.cands[j][ci];
            if self.owner[y as usize] != UNSET {
                continue;
            }
            if self.try_level(j, y)? {
                if self.dfs(j + 1)? {
                    return Ok(true);
                }
                self.undo(j);
            }
        }
        Ok(false)
    }
}

fn orbit_of(point: u32, perms: &[&Vec<u32>], n: usize) -> Vec<u32> {
    let mut seen = alloc::vec![false; n];
    seen[point as usize] = true;
    let mut out = alloc::vec![point];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        i += 1;
        for p in perms {
            let y = p[x as usize];
            if !seen[y as usize] {
                seen[y as usize] = true;
                out.push(y);
            }
        }
    }
    out
}

pub fn automorphism_group(t: &ElementTable, opts: &AutOptions) -> Result<AutResult> {
    let n = t.order();
    let center_order = t.center().len();
    if n == 1 {
        return Ok(AutResult {
            group_order: 1,
            center_order: 1,
            order: 1,
            base: Vec::new(),
            orbit_sizes: Vec::new(),
            generators: Vec::new(),
            nodes: 0,
        });
    }
    let sigs = signatures(t);
    let index = SigIndex::new(&sigs);
    let sig_old = index.label(&sigs);
    let base_old = choose_base(t, &sig_old);
    let src = Source::new(t, &base_old, &sig_old)?;
    let k = src.k();
    let gens: Vec<u32> = src.t.generators().to_vec();
    let mut search = Search::new(&src, &src.t, &src.sig, opts.node_budget);
    let mut levels: Vec<Vec<Vec<u32>>> = alloc::vec![Vec::new(); k];
    let mut orbit_sizes = alloc::vec![0usize; k];
    for i in (0..k).rev() {
        for j in 0..i {
            let ok = search.try_level(j, gens[j])?;
            debug_assert!(ok);
        }
        let deeper = |levels: &Vec<Vec<Vec<u32>>>| -> Vec<Vec<u32>> {
            levels[i..].iter().flat_map(|l| l.iter().cloned()).collect()
        };
        let mut perms = deeper(&levels);
        let mut in_orbit = alloc::vec![false; n];
        for x in orbit_of(gens[i], &perms.iter().collect::<Vec<_>>(), n) {
            in_orbit[x as usize] = true;
        }
        let mut rejected = alloc::vec![false; n];
        let cands = search.cands[i].clone();
        for &y in &cands {
            if in_orbit[y as usize] || rejected[y as usize] || search.owner[y as usize] != UNSET {
                continue;
            }
            let found = if search.try_level(i, y)? {
                let ok = search.dfs(i + 1)?;
                if !ok {
                    search.undo(i);
                }
                ok
            } else {
                false
            };
            if found {
                let phi = search.phi.clone();
                for j in (i..k).rev() {
                    search.undo(j);
                }
                levels[i].push(phi);
                perms = deeper(&levels);
                for x in orbit_of(gens[i], &perms.iter().collect::<Vec<_>>(), n) {
                    in_orbit[x as usize] = true;
                }
            } else {
                for x in orbit_of(y, &perms.iter().collect::<Vec<_>>(), n) {
                    rejected[x as usize] = true;
                }
            }
        }
        orbit_sizes[i] = in_orbit.iter().filter(|&&b| b).count();
        for j in (0..i).rev() {
            search.undo(j);
        }
    }
    let order = orbit_sizes.iter().map(|&s| s as u128).product();
    let mut generators = Vec::new();
    for level in &levels {
        for phi in level {
            let mut images = alloc::vec![0u32; n];
            for x in 0..n {
                images[src.to_old[x] as usize] = src.to_old[phi[x] as usize];
            }
            generators.push(Permutation::from_images_unchecked(images));
        }
    }
    Ok(AutResult {
        group_order: n,
        center_order,
        order,
        base: base_old,
        orbit_sizes,
        generators,
        nodes: search.nodes,
    })
}

fn cheap_invariants_match(g: &ElementTable, h: &ElementTable) -> bool {
    g.order() == h.order() && g.order_histogram() == h.order_histogram() && g.center().len() == h.center().len()
}

/// An isomorphism `g -> h`, as the images of `g`'s table generators.
pub fn isomorphism(g: &ElementTable, h: &ElementTable, opts: &AutOptions) -> Result<Option<Vec<u32>>> {
    if !cheap_invariants_match(g, h) {
        return Ok(None);
    }
    let gs = signatures(g);
    let hs = signatures(h);
    let index = SigIndex::new(&gs);
    let gl = index.label(&gs);
    let hl = index.label(&hs);
    let mut count_g: BTreeMap<u32, usize> = BTreeMap::new();
    let mut count_h: BTreeMap<u32, usize> = BTreeMap::new();
    for &s in &gl {
        *count_g.entry(s).or_default() += 1;
    }
    for &s in &hl {
        *count_h.entry(s).or_default() += 1;
    }
    if count_g != count_h {
        return Ok(None);
    }
    if g.order() == 1 {
        return Ok(Some(Vec::new()));
    }
    let base = choose_base(g, &gl);
    let src = Source::new(g, &base, &gl)?;
    let mut search = Search::new(&src, h, &hl, opts.node_budget);
    if !search.dfs(0)? {
        return Ok(None);
    }
    let mut from_old = alloc::vec![0u32; g.order()];
    for (new, &old) in src.to_old.iter().enumerate() {
        from_old[old as usize] = new as u32;
    }
    Ok(Some(g.generators().iter().map(|&x| search.phi[from_old[x as usize] as usize]).collect()))
}

pub fn is_isomorphic(g: &ElementTable, h: &ElementTable) -> Result<bool> {
    Ok(isomorphism(g, h, &AutOptions::default())?.is_some())
}

/// Checks that an element permutation is an automorphism of `t`.
pub fn is_automorphism(t: &ElementTable, images: &[u32]) -> bool {
    let n = t.order();
    if images.len() != n || images[0] != 0 {
        return false;
    }
    let mut seen = alloc::vec![false; n];
    for &y in images {
        if y as usize >= n || seen[y as usize] {
            return false;
        }
        seen[y as usize] = true;
    }
    let words: Vec<Vec<u16>> = t.generators().iter().map(|&g| t.word(images[g as usize])).collect();
    (0..n as u32).all(|x| {
        (0..t.ngens()).all(|s| images[t.right_gen(x, s) as usize] == t.mul_word(images[x as usize], &words[s]))
    })
}

/// Conjugation by each generator, as element permutations.
pub fn inner_automorphisms(t: &ElementTable) -> PermutationGroup {
    let n = t.order();
    let gens: Vec<Permutation> = (0..t.ngens())
        .map(|s| Permutation::from_images_unchecked((0..n as u32).map(|x| t.conj_gen(x, s)).collect()))
        .collect();
    let gens = if gens.is_empty() { alloc::vec![Permutation::identity(n)] } else { gens };
    PermutationGroup::new(n, gens).expect("degrees agree")
}

/// Automorphisms as tuples of images of the table generators.
struct AutBackend<'a> {
    t: &'a ElementTable,
    perms: Vec<&'a [u32]>,
    /// `word(sigma_s(t_r))` for each automorphism generator `s` and table generator `r`.
    gen_words: Vec<Vec<Vec<u16>>>,
}

impl Backend for AutBackend<'_> {
    type Elem = Vec<u32>;

    fn identity(&self) -> Vec<u32> {
        self.t.generators().to_vec()
    }

    fn ngens(&self) -> usize {
        self.perms.len()
    }

    fn mul_right(&self, x: &Vec<u32>, s: usize) -> Vec<u32> {
        x.iter().map(|&y| self.perms[s][y as usize]).collect()
    }

    fn mul_left(&self, s: usize, x: &Vec<u32>) -> Vec<u32> {
        let words: Vec<Vec<u16>> = x.iter().map(|&y| self.t.word(y)).collect();
        self.gen_words[s]
            .iter()
            .map(|w| w.iter().fold(0u32, |z, &l| self.t.mul_word(z, &words[l as usize])))
            .collect()
    }
}

/// Element table of `Aut(G)`, with the automorphism generators as generators.
pub fn aut_table(t: &ElementTable, aut: &AutResult, cap: usize) -> Result<ElementTable> {
    if aut.order > cap as u128 {
        return Err(Error::CapExceeded(cap));
    }
    let ident: Vec<u32> = (0..t.order() as u32).collect();
    let perms: Vec<&[u32]> = if aut.generators.is_empty() {
        alloc::vec![ident.as_slice()]
    } else {
        aut.generators.iter().map(|p| p.images()).collect()
    };
    let gen_words = perms
        .iter()
        .map(|p| t.generators().iter().map(|&g| t.word(p[g as usize])).collect())
        .collect();
    let backend = AutBackend { t, perms, gen_words };
    let (table, _) = ElementTable::from_backend(&backend, cap)?;
    if table.order() as u128 != aut.order {
        return Err(Error::Unsupported("automorphism generators do not close to the chain order".into()));
    }
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerStep {
    pub order: u128,
    pub center_order: usize,
    pub ncl: Option<usize>,
    pub complete: bool,
}

#[derive(Clone, Debug)]
pub struct Tower {
    pub steps: Vec<TowerStep>,
    /// Stopped by a cap or the step limit rather than by completeness.
    pub truncated: bool,
}

/// `G, Aut(G), Aut(Aut(G)), ...` until a complete group, `max_steps`
/// automorphism groups, or a group larger than `max_order`.
pub fn aut_tower(t: &ElementTable, max_steps: usize, max_order: usize, opts: &AutOptions) -> Result<Tower> {
    let mut steps = Vec::new();
    let mut current = t.clone();
    for step in 0..=max_steps {
        let ncl = current.conjugacy_classes().len();
        let aut = automorphism_group(&current, opts)?;
        let complete = aut.is_complete();
        steps.push(TowerStep { order: current.order() as u128, center_order: aut.center_order, ncl: Some(ncl), complete });
        if complete {
            return Ok(Tower { steps, truncated: false });
        }
        if step == max_steps || aut.order > max_order as u128 {
            steps.push(TowerStep { order: aut.order, center_order: 0, ncl: None, complete: false });
            return Ok(Tower { steps, truncated: true });
        }
        current = aut_table(&current, &aut, max_order)?;
    }
    unreachable!()
}

/// Checks a presentation against a concrete group: the enumerated order must
/// equal `|g|`, and some images of the presentation generators in `g` must
/// satisfy every relator and generate `g`. Returns those images.
pub fn validate_presentation(
    pres: &Presentation,
    g: &PermutationGroup,
    max_cosets: usize,
    cap: usize,
) -> Result<Option<Vec<Permutation>>> {
    let ct = todd_coxeter(pres, &[], max_cosets)?;
    if ct.index() as u128 != g.order() {
        return Ok(None);
    }
    let rt = ct.regular_group().closure(cap)?;
    let gt = g.closure(cap)?;
    let Some(images) = isomorphism(&rt, &gt, &AutOptions::default())? else {
        return Ok(None);
    };
    let perms: Vec<Permutation> = images.iter().map(|&i| gt.element(i).expect("permutation table").clone()).collect();
    if !pres.check_relators(&perms).is_empty() {
        return Err(Error::PresentationMismatch("certificate violates a relator".into()));
    }
    Ok(Some(perms))
}

/// Counts automorphisms by trying every tuple of images of a small
/// generating set. Independent of the backtracking search; only practical for
/// groups of a few dozen elements.
pub fn exhaustive_aut_order(t: &ElementTable) -> u128 {
    let n = t.order();
    let mut by_order: Vec<u32> = (0..n as u32).collect();
    by_order.sort_by_key(|&x| core::cmp::Reverse(t.element_order(x)));
    let mut gens: Vec<u32> = Vec::new();
    let mut span = alloc::vec![0u32];
    for x in by_order {
        if span.len() == n {
            break;
        }
        if !span.contains(&x) {
            gens.push(x);
            span = t.subgroup(&gens);
        }
    }
    // spanning tree over right multiplication by `gens`
    let mut parent = alloc::vec![None::<(u32, usize)>; n];
    let mut seen = alloc::vec![false; n];
    seen[0] = true;
    let mut order = alloc::vec![0u32];
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for (k, &g) in gens.iter().enumerate() {
            let y = t.mul(x, g);
            if !seen[y as usize] {
                seen[y as usize] = true;
                parent[y as usize] = Some((x, k));
                order.push(y);
            }
        }
        i += 1;
    }
    let candidates: Vec<Vec<u32>> =
        gens.iter().map(|&g| (0..n as u32).filter(|&h| t.element_order(h) == t.element_order(g)).collect()).collect();
    let mut pick = alloc::vec![0usize; gens.len()];
    let mut count = 0;
    let mut images = alloc::vec![0u32; n];
    let mut hit = alloc::vec![false; n];
    'outer: loop {
        let h: Vec<u32> = pick.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        hit.iter_mut().for_each(|b| *b = false);
        let mut ok = true;
        for &y in &order {
            let img = match parent[y as usize] {
                None => 0,
                Some((x, k)) => t.mul(images[x as usize], h[k]),
            };
            if hit[img as usize] {
                ok = false;
                break;
            }
            hit[img as usize] = true;
            images[y as usize] = img;
        }
        if ok && (0..n as u32).all(|x| gens.iter().zip(&h).all(|(&g, &hg)| images[t.mul(x, g) as usize] == t.mul(images[x as usize], hg))) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == pick.len() {
                break 'outer;
            }
            pick[k] += 1;
            if pick[k] < candidates[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::closure;

    fn table(degree: usize, cycles: &[&str]) -> ElementTable {
        let gens: Vec<Permutation> = cycles.iter().map(|c| Permutation::parse_cycles(c, degree).unwrap()).collect();
        closure(degree, &gens, 100_000).unwrap()
    }

    #[test]
    fn small_groups_match_brute_force() {
        let cases: Vec<ElementTable> = alloc::vec![
            table(2, &["(1,2)"]),
            table(3, &["(1,2,3)", "(1,2)"]),
            table(4, &["(1,2,3,4)", "(1,3)"]),
            table(8, &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"]),
            table(6, &["(1,2)", "(3,4)", "(5,6)"]),
            table(5, &["(1,2,3,4,5)", "(2,3,5,4)"]),
            table(7, &["(1,2,3,4)", "(5,6,7)"]),
        ];
        for t in &cases {
            let aut = automorphism_group(t, &AutOptions::default()).unwrap();
            assert_eq!(aut.order, exhaustive_aut_order(t), "order {}", t.order());
            for g in &aut.generators {
                assert!(is_automorphism(t, g.images()));
            }
            assert_eq!(aut.permutation_group().order(), aut.order);
        }
    }

    #[test]
    fn s3_is_complete_and_c2_has_trivial_aut() {
        let s3 = table(3, &["(1,2,3)", "(1,2)"]);
        let aut = automorphism_group(&s3, &AutOptions::default()).unwrap();
        assert_eq!(aut.order, 6);
        assert!(aut.is_complete());
        assert_eq!(inner_automorphisms(&s3).order(), 6);
        let c2 = table(2, &["(1,2)"]);
        assert_eq!(automorphism_group(&c2, &AutOptions::default()).unwrap().order, 1);
    }

    #[test]
    fn d4_and_q8_are_not_isomorphic() {
        let d4 = table(4, &["(1,2,3,4)", "(1,3)"]);
        let q8 = table(8, &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"]);
        assert!(!is_isomorphic(&d4, &q8).unwrap());
        let d4b = table(8, &["(1,2,3,4)(5,6,7,8)", "(1,5)(2,8)(3,7)(4,6)"]);
        let cert = isomorphism(&d4, &d4b, &AutOptions::default()).unwrap().unwrap();
        assert_eq!(cert.len(), 2);
        assert!(is_isomorphic(&d4, &d4).unwrap());
    }

    #[test]
    fn aut_table_and_tower() {
        let c2c2 = table(4, &["(1,2)", "(3,4)"]);
        let aut = automorphism_group(&c2c2, &AutOptions::default()).unwrap();
        assert_eq!(aut.order, 6);
        let at = aut_table(&c2c2, &aut, 100).unwrap();
        assert_eq!(at.order(), 6);
        assert_eq!(at.center().len(), 1);
        let tower = aut_tower(&c2c2, 4, 1000, &AutOptions::default()).unwrap();
        let orders: Vec<u128> = tower.steps.iter().map(|s| s.order).collect();
        assert_eq!(orders, alloc::vec![4, 6]);
        assert!(!tower.truncated);
    }

    #[test]
    fn generating_set_does_not_change_the_order() {
        let a = table(4, &["(1,2,3,4)", "(1,2)"]);
        let b = table(4, &["(1,2)", "(2,3)", "(3,4)"]);
        let oa = automorphism_group(&a, &AutOptions::default()).unwrap().order;
        let ob = automorphism_group(&b, &AutOptions::default()).unwrap().order;
        assert_eq!(oa, 24);
        assert_eq!(oa, ob);
    }

    #[test]
    fn presentations_validate_against_concrete_groups() {
        let d8 = Presentation::new(&["a", "b"], "a^8=b^2=a^b*a=1", &[]).unwrap();
        let g = PermutationGroup::new(8, alloc::vec![
            Permutation::parse_cycles("(1,2,3,4,5,6,7,8)", 8).unwrap(),
            Permutation::parse_cycles("(2,8)(3,7)(4,6)", 8).unwrap(),
        ])
        .unwrap();
        let cert = validate_presentation(&d8, &g, 1000, 1000).unwrap().unwrap();
        assert!(d8.check_relators(&cert).is_empty());
        let q4 = Presentation::new(&["a", "b"], "a^8=b^4=a^4*b^-2=a^b*a=1", &[]).unwrap();
        assert!(validate_presentation(&q4, &g, 1000, 1000).unwrap().is_none());
    }
}
