//! Todd-Coxeter coset enumeration, HLT strategy with coincidence handling.

use alloc::vec::Vec;

use crate::chain::PermutationGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::words::{Presentation, Word};

const NONE: u32 = u32::MAX;

/// A complete coset table: `image(c, g)` is coset `c` times generator `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    rows: Vec<u32>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len() / (2 * self.ngens).max(1)
    }

    pub fn image(&self, coset: u32, gen: usize) -> u32 {
        self.rows[coset as usize * 2 * self.ngens + 2 * gen]
    }

    pub fn generator_permutations(&self) -> Vec<Permutation> {
        let n = self.index();
        (0..self.ngens)
            .map(|g| Permutation::from_images_unchecked((0..n as u32).map(|c| self.image(c, g)).collect()))
            .collect()
    }

    pub fn permutation_group(&self) -> PermutationGroup {
        PermutationGroup::new(self.index(), self.generator_permutations()).expect("degrees agree")
    }

    /// The action on cosets of the trivial subgroup, which is regular.
    pub fn regular_group(&self) -> PermutationGroup {
        PermutationGroup::regular(self.index(), self.generator_permutations()).expect("coset action is transitive")
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` (the trivial
/// subgroup when empty). Fails if more than `max_cosets` cosets are defined.
pub fn todd_coxeter(pres: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetTable> {
    let k = pres.generators.len();
    let mut e = Enumerator::new(k, max_cosets);
    let rels: Vec<Vec<u32>> = pres.relators.iter().map(columns).filter(|r| !r.is_empty()).collect();
    let subs: Vec<Vec<u32>> = subgroup.iter().map(columns).filter(|r| !r.is_empty()).collect();
    for s in &subs {
        e.scan_and_fill(0, s)?;
    }
    let mut c = 0u32;
    while (c as usize) < e.allocated() {
        if e.live(c) {
            for r in &rels {
                if !e.live(c) {
                    break;
                }
                e.scan_and_fill(c, r)?;
            }
            if e.live(c) {
                for x in 0..2 * k as u32 {
                    if e.get(c, x) == NONE {
                        e.define(c, x)?;
                    }
                }
            }
        }
        c += 1;
    }
    Ok(e.standardize())
}

/// Order of the presented group.
pub fn enumerate_order(pres: &Presentation, max_cosets: usize) -> Result<usize> {
    Ok(todd_coxeter(pres, &[], max_cosets)?.index())
}

/// Regular permutation representation of the presented group.
pub fn regular_representation(pres: &Presentation, max_cosets: usize) -> Result<PermutationGroup> {
    Ok(todd_coxeter(pres, &[], max_cosets)?.regular_group())
}

fn columns(w: &Word) -> Vec<u32> {
    w.syllables().map(|(g, s)| 2 * g as u32 + if s > 0 { 0 } else { 1 }).collect()
}

#[inline]
fn inv_col(x: u32) -> u32 {
    x ^ 1
}

struct Enumerator {
    width: usize,
    table: Vec<u32>,
    forward: Vec<u32>,
    queue: Vec<u32>,
    max: usize,
}

impl Enumerator {
    fn new(k: usize, max: usize) -> Self {
        let width = 2 * k;
        Enumerator { width, table: alloc::vec![NONE; width], forward: alloc::vec![0], queue: Vec::new(), max }
    }

    fn allocated(&self) -> usize {
        self.forward.len()
    }

    #[inline]
    fn live(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    #[inline]
    fn get(&self, c: u32, x: u32) -> u32 {
        self.table[c as usize * self.width + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: u32, d: u32) {
        self.table[c as usize * self.width + x as usize] = d;
    }

    fn define(&mut self, c: u32, x: u32) -> Result<u32> {
        if self.forward.len() >= self.max {
            return Err(Error::CosetLimitExceeded(self.max));
        }
        let d = self.forward.len() as u32;
        self.forward.push(d);
        self.table.extend(core::iter::repeat(NONE).take(self.width));
        self.set(c, x, d);
        self.set(d, inv_col(x), c);
        Ok(d)
    }

    fn scan_and_fill(&mut self, c: u32, w: &[u32]) -> Result<()> {
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len();
        loop {
            while i < j {
                let nf = self.get(f, w[i]);
                if nf == NONE {
                    break;
                }
                f = nf;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let nb = self.get(b, inv_col(w[j - 1]));
                if nb == NONE {
                    break;
                }
                b = nb;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, inv_col(w[i]), f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut l = c;
        while self.forward[l as usize] != l {
            l = self.forward[l as usize];
        }
        let mut m = c;
        while self.forward[m as usize] != l {
            let next = self.forward[m as usize];
            self.forward[m as usize] = l;
            m = next;
        }
        l
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.forward[drop as usize] = keep;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut qi = 0;
        while qi < self.queue.len() {
            let g = self.queue[qi];
            qi += 1;
            for x in 0..self.width as u32 {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, inv_col(x), NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != NONE {
                    self.merge(nu, mx);
                } else {
                    let nx = self.get(nu, inv_col(x));
                    if nx != NONE {
                        self.merge(mu, nx);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, inv_col(x), mu);
                    }
                }
            }
        }
    }

    /// Renumbers live cosets in breadth-first order from coset 0.
    fn standardize(&self) -> CosetTable {
        let n = self.allocated();
        let mut new_of = alloc::vec![NONE; n];
        let mut order = alloc::vec![0u32];
        new_of[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            i += 1;
            for x in 0..self.width as u32 {
                let d = self.get(c, x);
                if new_of[d as usize] == NONE {
                    new_of[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
        }
        let mut rows = Vec::with_capacity(order.len() * self.width);
        for &c in &order {
            for x in 0..self.width as u32 {
                rows.push(new_of[self.get(c, x) as usize]);
            }
        }
        CosetTable { ngens: self.width / 2, rows }
    }
}
