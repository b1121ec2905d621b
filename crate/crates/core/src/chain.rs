//! Permutation groups given by generators, with a deterministic Schreier-Sims
//! stabilizer chain for order and membership.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    /// Known to act regularly, so the chain has a single level.
    regular: bool,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(PermutationGroup { degree, generators, regular: false })
    }

    /// A group known to act regularly, e.g. on the cosets of the trivial
    /// subgroup. Transitivity is checked; regularity is trusted.
    pub fn regular(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        let mut g = Self::new(degree, generators)?;
        if degree > 0 && g.orbit(0).len() != degree {
            return Err(Error::Unsupported("regular action must be transitive".into()));
        }
        g.regular = true;
        Ok(g)
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup { degree, generators: Vec::new(), regular: false }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn stabilizer_chain(&self) -> StabilizerChain {
        if self.regular && self.degree > 1 {
            let mut lv = Level::new(self.degree, 0);
            lv.inverses = self.generators.iter().map(|g| g.inverse()).collect();
            lv.gens = self.generators.clone();
            lv.rebuild();
            return StabilizerChain { degree: self.degree, levels: alloc::vec![lv] };
        }
        StabilizerChain::build(self.degree, &self.generators, &[])
    }

    pub fn order(&self) -> u128 {
        self.stabilizer_chain().order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.stabilizer_chain().contains(p)
    }

    /// Orbit of `point` in discovery order.
    pub fn orbit(&self, point: u32) -> Vec<u32> {
        orbit(self.degree, &self.generators, point)
    }
}

pub fn orbit(degree: usize, gens: &[Permutation], point: u32) -> Vec<u32> {
    let mut seen = alloc::vec![false; degree];
    seen[point as usize] = true;
    let mut out = alloc::vec![point];
    let mut k = 0;
    while k < out.len() {
        let x = out[k];
        k += 1;
        for g in gens {
            let y = g.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                out.push(y);
            }
        }
    }
    out
}

const NONE: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Clone, Debug)]
struct Level {
    point: u32,
    gens: Vec<Permutation>,
    inverses: Vec<Permutation>,
    /// Generator index that first reached each point, or NONE / ROOT.
    label: Vec<u32>,
    orbit: Vec<u32>,
}

impl Level {
    fn new(degree: usize, point: u32) -> Self {
        let mut lv = Level {
            point,
            gens: Vec::new(),
            inverses: Vec::new(),
            label: alloc::vec![NONE; degree],
            orbit: Vec::new(),
        };
        lv.rebuild();
        lv
    }

    fn rebuild(&mut self) {
        for x in self.label.iter_mut() {
            *x = NONE;
        }
        self.label[self.point as usize] = ROOT;
        self.orbit.clear();
        self.orbit.push(self.point);
        let mut k = 0;
        while k < self.orbit.len() {
            let x = self.orbit[k];
            k += 1;
            for (gi, g) in self.gens.iter().enumerate() {
                let y = g.apply(x);
                if self.label[y as usize] == NONE {
                    self.label[y as usize] = gi as u32;
                    self.orbit.push(y);
                }
            }
        }
    }

    fn add_gen(&mut self, g: Permutation) {
        self.inverses.push(g.inverse());
        self.gens.push(g);
        self.rebuild();
    }

    fn in_orbit(&self, x: u32) -> bool {
        self.label[x as usize] != NONE
    }

    /// Right-multiplies `h` by the inverse of the transversal element for `x`.
    fn strip(&self, h: &mut Permutation, mut x: u32) {
        loop {
            let l = self.label[x as usize];
            if l == ROOT {
                return;
            }
            let inv = &self.inverses[l as usize];
            *h = h.compose(inv);
            x = inv.apply(x);
        }
    }

    /// Transversal element mapping the level point to `x`.
    fn transversal(&self, degree: usize, mut x: u32) -> Permutation {
        let mut word = Vec::new();
        loop {
            let l = self.label[x as usize];
            if l == ROOT {
                break;
            }
            word.push(l as usize);
            x = self.inverses[l as usize].apply(x);
        }
        let mut u = Permutation::identity(degree);
        for &l in word.iter().rev() {
            u = u.compose(&self.gens[l]);
        }
        u
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Deterministic Schreier-Sims. `base_prefix` fixes the first base points.
    pub fn build(degree: usize, gens: &[Permutation], base_prefix: &[u32]) -> Self {
        let mut chain = StabilizerChain { degree, levels: Vec::new() };
        for &b in base_prefix {
            chain.levels.push(Level::new(degree, b));
        }
        for g in gens {
            if g.is_identity() {
                continue;
            }
            if !chain.levels.iter().any(|lv| g.apply(lv.point) != lv.point) {
                let moved = first_moved(g).unwrap();
                chain.levels.push(Level::new(degree, moved));
            }
            chain.levels[0].gens.push(g.clone());
            chain.levels[0].inverses.push(g.inverse());
        }
        if chain.levels.is_empty() {
            return chain;
        }
        chain.levels[0].rebuild();
        chain.complete_from(chain.levels.len() - 1);
        chain
    }

    fn complete_from(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let lvl = i as usize;
            let mut restart = None;
            'scan: for oi in 0..self.levels[lvl].orbit.len() {
                let beta = self.levels[lvl].orbit[oi];
                for si in 0..self.levels[lvl].gens.len() {
                    let u_beta = self.levels[lvl].transversal(self.degree, beta);
                    let s = &self.levels[lvl].gens[si];
                    let mut h = u_beta.compose(s);
                    let img = s.apply(beta);
                    self.levels[lvl].strip(&mut h, img);
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, j) = self.sift_from(h, lvl + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let moved = first_moved(&residue).unwrap();
                        self.levels.push(Level::new(self.degree, moved));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].add_gen(residue.clone());
                    }
                    restart = Some(j);
                    break 'scan;
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    /// Sifts from level `from`; returns the residue and the level where it stopped.
    fn sift_from(&self, mut h: Permutation, from: usize) -> (Permutation, usize) {
        for l in from..self.levels.len() {
            let lv = &self.levels[l];
            let x = h.apply(lv.point);
            if !lv.in_orbit(x) {
                return (h, l);
            }
            lv.strip(&mut h, x);
        }
        let n = self.levels.len();
        (h, n)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (r, _) = self.sift_from(p.clone(), 0);
        r.is_identity()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

fn first_moved(p: &Permutation) -> Option<u32> {
    p.images().iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..8usize {
            let cyc: Vec<u32> = (0..n as u32).collect();
            let a = Permutation::from_cycles(n, &[&cyc]).unwrap();
            let b = Permutation::from_cycles(n, &[&[0, 1]]).unwrap();
            let g = PermutationGroup::new(n, alloc::vec![a, b]).unwrap();
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(g.order(), fact);
        }
    }

    #[test]
    fn membership() {
        let g = PermutationGroup::new(4, alloc::vec![p("(1,2,3)", 4), p("(2,3,4)", 4)]).unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.contains(&p("(1,2)(3,4)", 4)));
        assert!(!g.contains(&p("(1,2)", 4)));
    }

    #[test]
    fn complete_group_of_order_144() {
        let g = PermutationGroup::new(
            9,
            alloc::vec![
                p("(2,9,4,6,3,7,5,8)", 9),
                p("(4,5)(6,9)(7,8)", 9),
                p("(1,3,2)(4,7,6)(5,8,9)", 9),
                p("(1,5,4)(2,9,6)(3,8,7)", 9),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), 144);
    }
}
