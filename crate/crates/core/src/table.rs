//! Explicit element tables: every element indexed, with left and right
//! multiplication tables for a fixed generating list.
//!
//! Element 0 is the identity. Elements are numbered in breadth-first order
//! from the identity, right-multiplying by generators in list order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::hash::Hash;

use hashbrown::HashMap;

use crate::chain::PermutationGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Something that can multiply its elements by a fixed list of generators.
pub trait Backend {
    type Elem: Clone + Eq + Hash;
    fn identity(&self) -> Self::Elem;
    fn ngens(&self) -> usize;
    /// `x * g_s`
    fn mul_right(&self, x: &Self::Elem, s: usize) -> Self::Elem;
    /// `g_s * x`
    fn mul_left(&self, s: usize, x: &Self::Elem) -> Self::Elem;
}

pub struct PermBackend<'a> {
    pub degree: usize,
    pub gens: &'a [Permutation],
}

impl Backend for PermBackend<'_> {
    type Elem = Permutation;
    fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }
    fn ngens(&self) -> usize {
        self.gens.len()
    }
    fn mul_right(&self, x: &Permutation, s: usize) -> Permutation {
        x.compose(&self.gens[s])
    }
    fn mul_left(&self, s: usize, x: &Permutation) -> Permutation {
        self.gens[s].compose(x)
    }
}

/// Elements of an existing table, multiplied by a new generating list.
struct RetableBackend<'a> {
    base: &'a ElementTable,
    gens: &'a [u32],
}

impl Backend for RetableBackend<'_> {
    type Elem = u32;
    fn identity(&self) -> u32 {
        0
    }
    fn ngens(&self) -> usize {
        self.gens.len()
    }
    fn mul_right(&self, x: &u32, s: usize) -> u32 {
        self.base.mul(*x, self.gens[s])
    }
    fn mul_left(&self, s: usize, x: &u32) -> u32 {
        self.base.mul(self.gens[s], *x)
    }
}

#[derive(Clone, Debug)]
pub struct ElementTable {
    n: usize,
    k: usize,
    right: Vec<u32>,
    left: Vec<u32>,
    left_inv: Vec<u32>,
    parent: Vec<u32>,
    pgen: Vec<u16>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    gen_index: Vec<u32>,
    perms: Option<PermData>,
}

#[derive(Clone, Debug)]
struct PermData {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

/// Builds the element table of the group generated by `generators`.
pub fn closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<ElementTable> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }
    let backend = PermBackend { degree, gens: generators };
    let (mut t, elems, index) = ElementTable::from_backend_with_index(&backend, cap)?;
    t.perms = Some(PermData { degree, elements: elems, index });
    Ok(t)
}

impl ElementTable {
    pub fn from_backend<B: Backend>(backend: &B, cap: usize) -> Result<(ElementTable, Vec<B::Elem>)> {
        let (t, e, _) = Self::from_backend_with_index(backend, cap)?;
        Ok((t, e))
    }

    fn from_backend_with_index<B: Backend>(
        backend: &B,
        cap: usize,
    ) -> Result<(ElementTable, Vec<B::Elem>, HashMap<B::Elem, u32>)> {
        let k = backend.ngens();
        let id = backend.identity();
        let mut index: HashMap<B::Elem, u32> = HashMap::new();
        let mut elems = alloc::vec![id.clone()];
        index.insert(id, 0);
        let mut parent = alloc::vec![0u32];
        let mut pgen = alloc::vec![0u16];
        let mut right_rows: Vec<u32> = Vec::new();
        let mut i = 0;
        while i < elems.len() {
            for s in 0..k {
                let y = backend.mul_right(&elems[i], s);
                let j = match index.get(&y) {
                    Some(&j) => j,
                    None => {
                        let j = elems.len() as u32;
                        if elems.len() >= cap {
                            return Err(Error::CapExceeded(cap));
                        }
                        index.insert(y.clone(), j);
                        elems.push(y);
                        parent.push(i as u32);
                        pgen.push(s as u16);
                        j
                    }
                };
                right_rows.push(j);
            }
            i += 1;
        }
        let n = elems.len();
        let mut right = alloc::vec![0u32; k * n];
        for x in 0..n {
            for s in 0..k {
                right[s * n + x] = right_rows[x * k + s];
            }
        }
        let mut left = alloc::vec![0u32; k * n];
        for x in 0..n {
            for s in 0..k {
                let y = backend.mul_left(s, &elems[x]);
                left[s * n + x] = *index.get(&y).expect("left product outside group");
            }
        }
        let mut gen_index = Vec::with_capacity(k);
        for s in 0..k {
            gen_index.push(right[s * n]);
        }
        let t = ElementTable::assemble(n, k, right, left, parent, pgen, gen_index);
        Ok((t, elems, index))
    }

    fn assemble(
        n: usize,
        k: usize,
        right: Vec<u32>,
        left: Vec<u32>,
        parent: Vec<u32>,
        pgen: Vec<u16>,
        gen_index: Vec<u32>,
    ) -> ElementTable {
        let mut left_inv = alloc::vec![0u32; k * n];
        for s in 0..k {
            for x in 0..n {
                left_inv[s * n + left[s * n + x] as usize] = x as u32;
            }
        }
        let mut t = ElementTable {
            n,
            k,
            right,
            left,
            left_inv,
            parent,
            pgen,
            inverse: alloc::vec![0; n],
            orders: alloc::vec![0; n],
            gen_index,
            perms: None,
        };
        for x in 1..n {
            let p = t.parent[x] as usize;
            let s = t.pgen[x] as usize;
            t.inverse[x] = t.left_inv[s * n + t.inverse[p] as usize];
        }
        for x in 0..n {
            let mut o = 1u32;
            let mut y = x as u32;
            while y != 0 {
                y = t.mul(y, x as u32);
                o += 1;
            }
            t.orders[x] = o;
        }
        t
    }

    /// Same group, tabulated against a different generating list.
    /// Returns the new table and the map from new indices to old ones.
    pub fn retable(&self, gens: &[u32]) -> Result<(ElementTable, Vec<u32>)> {
        let (t, old) = self.subtable(gens)?;
        if t.n != self.n {
            return Err(Error::Unsupported("generators do not generate the group".into()));
        }
        Ok((t, old))
    }

    /// Table of the subgroup generated by `gens`, with the map from its
    /// indices to indices of `self`.
    pub fn subtable(&self, gens: &[u32]) -> Result<(ElementTable, Vec<u32>)> {
        let backend = RetableBackend { base: self, gens };
        let (mut t, old, _) = Self::from_backend_with_index(&backend, self.n)?;
        if let Some(pd) = &self.perms {
            let elements: Vec<Permutation> = old.iter().map(|&o| pd.elements[o as usize].clone()).collect();
            let mut index = HashMap::with_capacity(self.n);
            for (i, p) in elements.iter().enumerate() {
                index.insert(p.clone(), i as u32);
            }
            t.perms = Some(PermData { degree: pd.degree, elements, index });
        }
        Ok((t, old))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ngens(&self) -> usize {
        self.k
    }

    /// Element indices of the generators.
    pub fn generators(&self) -> &[u32] {
        &self.gen_index
    }

    pub fn element(&self, i: u32) -> Option<&Permutation> {
        self.perms.as_ref().map(|p| &p.elements[i as usize])
    }

    pub fn elements(&self) -> Option<&[Permutation]> {
        self.perms.as_ref().map(|p| p.elements.as_slice())
    }

    pub fn degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|p| p.degree)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.perms.as_ref().and_then(|d| d.index.get(p).copied())
    }

    #[inline]
    pub fn right_gen(&self, x: u32, s: usize) -> u32 {
        self.right[s * self.n + x as usize]
    }

    #[inline]
    pub fn left_gen(&self, s: usize, x: u32) -> u32 {
        self.left[s * self.n + x as usize]
    }

    #[inline]
    pub fn left_gen_inv(&self, s: usize, x: u32) -> u32 {
        self.left_inv[s * self.n + x as usize]
    }

    /// `x * y`, walking the tree word of `x`.
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        let mut z = y;
        let mut cur = x;
        while cur != 0 {
            let c = cur as usize;
            z = self.left[self.pgen[c] as usize * self.n + z as usize];
            cur = self.parent[c];
        }
        z
    }

    pub fn inv(&self, x: u32) -> u32 {
        self.inverse[x as usize]
    }

    pub fn element_order(&self, x: u32) -> u32 {
        self.orders[x as usize]
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn pow(&self, x: u32, e: i64) -> u32 {
        let o = self.orders[x as usize] as i64;
        let e = e.rem_euclid(o);
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Shortest word in the generators (generator positions) for `x`.
    pub fn word(&self, x: u32) -> Vec<u16> {
        let mut w = Vec::new();
        let mut cur = x;
        while cur != 0 {
            w.push(self.pgen[cur as usize]);
            cur = self.parent[cur as usize];
        }
        w.reverse();
        w
    }

    /// `x * y` using a precomputed word of `y`.
    #[inline]
    pub fn mul_word(&self, x: u32, word: &[u16]) -> u32 {
        let mut z = x;
        for &s in word {
            z = self.right[s as usize * self.n + z as usize];
        }
        z
    }

    /// `h^-1 x h`.
    pub fn conj(&self, x: u32, h: u32) -> u32 {
        self.mul(self.mul(self.inverse[h as usize], x), h)
    }

    /// `x^-1 y^-1 x y`.
    pub fn comm(&self, x: u32, y: u32) -> u32 {
        let a = self.mul(self.inverse[x as usize], self.inverse[y as usize]);
        self.mul(self.mul(a, x), y)
    }

    #[inline]
    pub fn conj_gen(&self, x: u32, s: usize) -> u32 {
        self.left_gen_inv(s, self.right_gen(x, s))
    }

    pub fn conjugacy_classes(&self) -> Classes {
        let n = self.n;
        let mut class_of = alloc::vec![u32::MAX; n];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = classes.len() as u32;
            class_of[start] = c;
            let mut members = alloc::vec![start as u32];
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                i += 1;
                for s in 0..self.k {
                    let y = self.conj_gen(x, s);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = c;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        Classes { class_of, classes }
    }

    pub fn center(&self) -> Vec<u32> {
        (0..self.n as u32)
            .filter(|&x| (0..self.k).all(|s| self.right_gen(x, s) == self.left_gen(s, x)))
            .collect()
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn subgroup(&self, gens: &[u32]) -> Vec<u32> {
        let mut mark = alloc::vec![false; self.n];
        self.subgroup_marked(gens, &mut mark)
    }

    fn subgroup_marked(&self, gens: &[u32], mark: &mut [bool]) -> Vec<u32> {
        let words: Vec<Vec<u16>> = gens.iter().filter(|&&g| g != 0).map(|&g| self.word(g)).collect();
        let mut out = alloc::vec![0u32];
        mark[0] = true;
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            i += 1;
            for w in &words {
                let y = self.mul_word(x, w);
                if !mark[y as usize] {
                    mark[y as usize] = true;
                    out.push(y);
                }
            }
        }
        for &x in &out {
            mark[x as usize] = false;
        }
        out.sort_unstable();
        out
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut gs: Vec<u32> = gens.iter().copied().filter(|&g| g != 0).collect();
        loop {
            let h = self.subgroup(&gs);
            let mut member = alloc::vec![false; self.n];
            for &x in &h {
                member[x as usize] = true;
            }
            let mut added = false;
            for gi in 0..gs.len() {
                for s in 0..self.k {
                    let c = self.conj_gen(gs[gi], s);
                    if !member[c as usize] {
                        gs.push(c);
                        added = true;
                        break;
                    }
                }
                if added {
                    break;
                }
            }
            if !added {
                return h;
            }
        }
    }

    pub fn is_normal(&self, sub: &[u32]) -> bool {
        let mut member = alloc::vec![false; self.n];
        for &x in sub {
            member[x as usize] = true;
        }
        sub.iter().all(|&x| (0..self.k).all(|s| member[self.conj_gen(x, s) as usize]))
    }

    /// A short generating list for the subgroup with the given elements.
    pub fn generating_set_of(&self, sub: &[u32]) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut have = alloc::vec![false; self.n];
        have[0] = true;
        let mut count = 1;
        let mut by_order: Vec<u32> = sub.to_vec();
        by_order.sort_by_key(|&x| (core::cmp::Reverse(self.orders[x as usize]), x));
        for &x in &by_order {
            if count == sub.len() {
                break;
            }
            if have[x as usize] {
                continue;
            }
            gens.push(x);
            let h = self.subgroup(&gens);
            count = h.len();
            for &y in &h {
                have[y as usize] = true;
            }
        }
        gens
    }

    /// Derived subgroup of the subgroup generated by `gens`.
    pub fn derived_of(&self, gens: &[u32]) -> Vec<u32> {
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.comm(a, b);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        // normal closure inside <gens>
        let mut gs = comms;
        loop {
            let h = self.subgroup(&gs);
            let mut member = alloc::vec![false; self.n];
            for &x in &h {
                member[x as usize] = true;
            }
            let mut extra = None;
            'outer: for &x in &gs {
                for &g in gens {
                    let c = self.conj(x, g);
                    if !member[c as usize] {
                        extra = Some(c);
                        break 'outer;
                    }
                }
            }
            match extra {
                Some(c) => gs.push(c),
                None => return h,
            }
        }
    }

    pub fn derived_subgroup(&self) -> Vec<u32> {
        self.derived_of(&self.gen_index)
    }

    /// Orders of G, G', G'', ... until the series stabilizes.
    pub fn derived_series_orders(&self) -> Vec<usize> {
        let mut out = alloc::vec![self.n];
        let mut gens = self.gen_index.clone();
        loop {
            let d = self.derived_of(&gens);
            if d.len() == *out.last().unwrap() {
                return out;
            }
            out.push(d.len());
            if d.len() == 1 {
                return out;
            }
            gens = self.generating_set_of(&d);
        }
    }

    /// Right cosets of a normal subgroup: coset label per element, and count.
    pub fn coset_labels(&self, normal: &[u32]) -> Result<(Vec<u32>, usize)> {
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let mut label = alloc::vec![u32::MAX; self.n];
        let mut count = 0u32;
        for x in 0..self.n as u32 {
            if label[x as usize] != u32::MAX {
                continue;
            }
            for &h in normal {
                label[self.mul(h, x) as usize] = count;
            }
            count += 1;
        }
        Ok((label, count as usize))
    }

    /// The permutation action of G on the cosets of `normal`.
    pub fn quotient_by_normal(&self, normal: &[u32]) -> Result<PermutationGroup> {
        let (label, m) = self.coset_labels(normal)?;
        let mut rep = alloc::vec![0u32; m];
        for x in (0..self.n).rev() {
            rep[label[x] as usize] = x as u32;
        }
        let mut gens = Vec::new();
        for s in 0..self.k {
            let images: Vec<u32> = rep.iter().map(|&r| label[self.right_gen(r, s) as usize]).collect();
            gens.push(Permutation::from_images(images)?);
        }
        PermutationGroup::new(m, gens)
    }

    pub fn order_histogram(&self) -> BTreeMap<u32, u32> {
        let mut h = BTreeMap::new();
        for &o in &self.orders {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let classes = self.conjugacy_classes();
        Fingerprint {
            order: self.n,
            ncl: classes.len(),
            center_order: self.center().len(),
            order_histogram: self.order_histogram(),
            derived_orders: self.derived_series_orders(),
        }
    }

    /// Automorphism-invariant label for each element: order, class size and
    /// the class sizes of its prime powers.
    pub fn element_signatures(&self, classes: &Classes) -> Vec<Signature> {
        let mut sig = Vec::with_capacity(self.n);
        for x in 0..self.n as u32 {
            let o = self.orders[x as usize];
            let mut powers = Vec::new();
            for q in prime_divisors(o) {
                let y = self.pow(x, q as i64);
                powers.push(classes.size_of(y) as u32);
            }
            sig.push(Signature { order: o, class_size: classes.size_of(x) as u32, power_classes: powers });
        }
        sig
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub order: u32,
    pub class_size: u32,
    pub power_classes: Vec<u32>,
}

pub fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Clone, Debug)]
pub struct Classes {
    pub class_of: Vec<u32>,
    /// Sorted members; the representative is the first (least index).
    pub classes: Vec<Vec<u32>>,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn size_of(&self, x: u32) -> usize {
        self.classes[self.class_of[x as usize] as usize].len()
    }

    pub fn representatives(&self) -> Vec<u32> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub ncl: usize,
    pub center_order: usize,
    pub order_histogram: BTreeMap<u32, u32>,
    pub derived_orders: Vec<usize>,
}

impl PermutationGroup {
    pub fn closure(&self, cap: usize) -> Result<ElementTable> {
        closure(self.degree(), self.generators(), cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dihedral(n: usize) -> ElementTable {
        let cyc: Vec<u32> = (0..n as u32).collect();
        let r = Permutation::from_cycles(n, &[&cyc]).unwrap();
        let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
        let s = Permutation::from_images(refl).unwrap();
        closure(n, &[r, s], 5000).unwrap()
    }

    #[test]
    fn identity_is_first_and_multiplication_matches_perms() {
        let t = dihedral(5);
        assert_eq!(t.order(), 10);
        assert!(t.element(0).unwrap().is_identity());
        for x in 0..10 {
            for y in 0..10 {
                let p = t.element(x).unwrap().compose(t.element(y).unwrap());
                assert_eq!(t.index_of(&p), Some(t.mul(x, y)));
            }
            assert_eq!(t.mul(x, t.inv(x)), 0);
        }
    }

    #[test]
    fn s3_fingerprint() {
        let t = dihedral(3);
        let f = t.fingerprint();
        assert_eq!(f.ncl, 3);
        assert_eq!(f.center_order, 1);
        assert_eq!(f.derived_orders, alloc::vec![6, 3, 1]);
        assert_eq!(f.order_histogram.get(&2), Some(&3));
    }

    #[test]
    fn c2_derived_series() {
        let a = Permutation::from_cycles(2, &[&[0, 1]]).unwrap();
        let t = closure(2, &[a], 10).unwrap();
        assert_eq!(t.fingerprint().derived_orders, alloc::vec![2, 1]);
    }

    #[test]
    fn quotient_of_d4_by_center() {
        let t = dihedral(4);
        let z = t.center();
        assert_eq!(z.len(), 2);
        let q = t.quotient_by_normal(&z).unwrap();
        assert_eq!(q.order(), 4);
        let r = t.subgroup(&[t.generators()[1]]);
        assert!(t.quotient_by_normal(&r).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let cyc: Vec<u32> = (0..7).collect();
        let a = Permutation::from_cycles(7, &[&cyc]).unwrap();
        let b = Permutation::from_cycles(7, &[&[0, 1]]).unwrap();
        assert_eq!(closure(7, &[a, b], 100).unwrap_err(), Error::CapExceeded(100));
    }
}
