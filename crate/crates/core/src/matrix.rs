//! Square matrices over GF(p) (and 1x1 over Z/p^2), matrix groups as
//! permutation groups on row vectors, and Sylow 2-subgroups of GL(n, p).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::chain::PermutationGroup;
use crate::error::{Error, Result};
use crate::modular;
use crate::perm::Permutation;

/// Row-major matrix; vectors are rows and act by `v -> v M`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatGF {
    modulus: u32,
    n: usize,
    entries: Vec<u32>,
}

impl MatGF {
    pub fn new(modulus: u32, n: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidMatrix(alloc::format!("expected {} entries", n * n)));
        }
        if modulus < 2 {
            return Err(Error::InvalidMatrix("modulus below 2".into()));
        }
        let m = modulus as i64;
        Ok(MatGF { modulus, n, entries: entries.iter().map(|&e| e.rem_euclid(m) as u32).collect() })
    }

    pub fn from_rows(modulus: u32, rows: &[&[i64]]) -> Result<Self> {
        let n = rows.len();
        let flat: Vec<i64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        MatGF::new(modulus, n, &flat)
    }

    pub fn identity(modulus: u32, n: usize) -> Self {
        MatGF::scalar(modulus, n, 1)
    }

    pub fn scalar(modulus: u32, n: usize, s: i64) -> Self {
        let mut e = alloc::vec![0i64; n * n];
        for i in 0..n {
            e[i * n + i] = s;
        }
        MatGF::new(modulus, n, &e).unwrap()
    }

    pub fn diag(modulus: u32, d: &[i64]) -> Self {
        let n = d.len();
        let mut e = alloc::vec![0i64; n * n];
        for i in 0..n {
            e[i * n + i] = d[i];
        }
        MatGF::new(modulus, n, &e).unwrap()
    }

    /// Anti-diagonal identity of size `n`.
    pub fn anti_identity(modulus: u32, n: usize) -> Self {
        let mut e = alloc::vec![0i64; n * n];
        for i in 0..n {
            e[i * n + (n - 1 - i)] = 1;
        }
        MatGF::new(modulus, n, &e).unwrap()
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[MatGF]) -> Self {
        let modulus = blocks[0].modulus;
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut e = alloc::vec![0i64; n * n];
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    e[(off + i) * n + off + j] = b.get(i, j) as i64;
                }
            }
            off += b.n;
        }
        MatGF::new(modulus, n, &e).unwrap()
    }

    /// Embeds in the top-left corner of an identity of size `n`.
    pub fn embed(&self, n: usize) -> Self {
        let mut blocks = alloc::vec![self.clone()];
        if n > self.n {
            blocks.push(MatGF::identity(self.modulus, n - self.n));
        }
        MatGF::block_diag(&blocks)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entries with values above `modulus/2` shown as negatives.
    pub fn signed_rows(&self) -> Vec<Vec<i64>> {
        let m = self.modulus as i64;
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let v = self.get(i, j) as i64;
                        if v > m / 2 {
                            v - m
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn mul(&self, other: &MatGF) -> MatGF {
        assert_eq!(self.n, other.n);
        assert_eq!(self.modulus, other.modulus);
        let n = self.n;
        let m = self.modulus as u64;
        let mut e = alloc::vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                e[i * n + j] = (acc % m) as u32;
            }
        }
        MatGF { modulus: self.modulus, n, entries: e }
    }

    pub fn is_identity(&self) -> bool {
        *self == MatGF::identity(self.modulus, self.n)
    }

    pub fn det(&self) -> i64 {
        let m = self.modulus as i64;
        let mut a: Vec<i64> = self.entries.iter().map(|&x| x as i64).collect();
        let n = self.n;
        if n == 1 {
            return a[0];
        }
        let mut det = 1i64;
        for col in 0..n {
            let piv = match (col..n).find(|&r| a[r * n + col] % m != 0 && modular::inv_mod(a[r * n + col], m).is_some()) {
                Some(r) => r,
                None => return 0,
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = (m - det) % m;
            }
            let pv = a[col * n + col];
            det = det * pv % m;
            let inv = modular::inv_mod(pv, m).unwrap();
            for r in col + 1..n {
                let f = a[r * n + col] * inv % m;
                for j in col..n {
                    a[r * n + j] = (a[r * n + j] - f * a[col * n + j]).rem_euclid(m);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<MatGF> {
        let m = self.modulus as i64;
        let n = self.n;
        let mut a: Vec<i64> = self.entries.iter().map(|&x| x as i64).collect();
        let mut b: Vec<i64> = MatGF::identity(self.modulus, n).entries.iter().map(|&x| x as i64).collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| modular::inv_mod(a[r * n + col], m).is_some())
                .ok_or_else(|| Error::InvalidMatrix("singular".into()))?;
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
                b.swap(piv * n + j, col * n + j);
            }
            let inv = modular::inv_mod(a[col * n + col], m).unwrap();
            for j in 0..n {
                a[col * n + j] = a[col * n + j] * inv % m;
                b[col * n + j] = b[col * n + j] * inv % m;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = (a[r * n + j] - f * a[col * n + j]).rem_euclid(m);
                    b[r * n + j] = (b[r * n + j] - f * b[col * n + j]).rem_euclid(m);
                }
            }
        }
        MatGF::new(self.modulus, n, &b)
    }

    pub fn pow(&self, e: i64) -> MatGF {
        let base = if e < 0 { self.inverse().expect("invertible") } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = MatGF::identity(self.modulus, self.n);
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// Multiplicative order, or an error for singular matrices.
    pub fn order(&self) -> Result<u64> {
        self.inverse()?;
        let mut acc = self.clone();
        let mut k = 1u64;
        let limit = (self.modulus as u64).pow((self.n * self.n) as u32).max(2);
        while !acc.is_identity() {
            acc = acc.mul(self);
            k += 1;
            if k > limit {
                return Err(Error::InvalidMatrix("order search exceeded bound".into()));
            }
        }
        Ok(k)
    }

    /// `v M` for a row vector.
    pub fn apply_row(&self, v: &[u32]) -> Vec<u32> {
        let m = self.modulus as u64;
        (0..self.n)
            .map(|j| ((0..self.n).map(|i| v[i] as u64 * self.get(i, j) as u64).sum::<u64>() % m) as u32)
            .collect()
    }
}

impl fmt::Debug for MatGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.signed_rows(), self.modulus)
    }
}

/// Index of a row vector: `sum v_i * m^i`.
pub fn vector_index(v: &[u32], modulus: u32) -> u32 {
    v.iter().rev().fold(0u32, |acc, &x| acc * modulus + x)
}

pub fn vector_of(mut idx: u32, modulus: u32, n: usize) -> Vec<u32> {
    let mut v = Vec::with_capacity(n);
    for _ in 0..n {
        v.push(idx % modulus);
        idx /= modulus;
    }
    v
}

/// Permutation of the `m^n` row vectors induced by `v -> v M`.
pub fn matrix_permutation(m: &MatGF) -> Permutation {
    let q = m.modulus;
    let size = (q as usize).pow(m.n as u32);
    let images: Vec<u32> = (0..size as u32).map(|i| vector_index(&m.apply_row(&vector_of(i, q, m.n)), q)).collect();
    Permutation::from_images_unchecked(images)
}

/// The faithful action on all vectors; point 0 (the zero vector) is fixed.
pub fn matrix_group_to_perm(gens: &[MatGF]) -> Result<PermutationGroup> {
    let first = gens.first().ok_or_else(|| Error::InvalidMatrix("no generators".into()))?;
    for g in gens {
        if g.n != first.n || g.modulus != first.modulus {
            return Err(Error::InvalidMatrix("generators of different shape".into()));
        }
        g.inverse()?;
    }
    let degree = (first.modulus as usize).pow(first.n as u32);
    PermutationGroup::new(degree, gens.iter().map(matrix_permutation).collect())
}

pub fn gl_order(n: u32, p: u64) -> u128 {
    let q = p as u128;
    let qn = q.pow(n);
    (0..n).map(|i| qn - q.pow(i)).product()
}

/// Largest power of 2 dividing `x`.
pub fn two_part(x: u128) -> u128 {
    if x == 0 {
        return 0;
    }
    1u128 << x.trailing_zeros()
}

#[derive(Clone, Debug)]
pub struct Sylow2 {
    pub p: u32,
    pub n: usize,
    pub generators: Vec<MatGF>,
    /// Structural name, e.g. `QD16` or `C4 wr C2`.
    pub name: String,
}

impl Sylow2 {
    pub fn group(&self) -> PermutationGroup {
        matrix_group_to_perm(&self.generators).expect("valid generators")
    }

    pub fn order(&self) -> u128 {
        self.group().order()
    }
}

/// Sylow 2-subgroup of GL(2, p), p odd.
///
/// For p = -1 mod 2^n (n maximal, n >= 2) the group is quasidihedral of order
/// 2^(n+2), generated by `[[0,1],[1,x]]` and `[[1,0],[x,-1]]`. For p = 1 mod 2^n
/// it is `C_{2^n} wr C2`, generated by `diag(1, z)` and the swap.
pub fn sylow2_gl2(p: u32) -> Result<Sylow2> {
    if p < 3 || !modular::is_prime(p as u64) {
        return Err(Error::Unsupported(alloc::format!("p = {} must be an odd prime", p)));
    }
    let m = p as i64;
    if p % 4 == 3 {
        let n = (p as u128 + 1).trailing_zeros();
        let roots = modular::iterated_radical_roots(p, n)?;
        let x = roots.solutions[0][0];
        let a = MatGF::from_rows(p, &[&[0, 1], &[1, x]])?;
        let b = MatGF::from_rows(p, &[&[1, 0], &[x, m - 1]])?;
        let order = 1u64 << (n + 2);
        Ok(Sylow2 { p, n: 2, generators: alloc::vec![a, b], name: alloc::format!("QD{}", order / 2) })
    } else {
        let n = (p as u128 - 1).trailing_zeros();
        let z = modular::primitive_root_of_unity(p, 1 << n).expect("root exists");
        let a = MatGF::diag(p, &[1, z]);
        let b = MatGF::from_rows(p, &[&[0, 1], &[1, 0]])?;
        Ok(Sylow2 { p, n: 2, generators: alloc::vec![a, b], name: alloc::format!("C{} wr C2", 1u32 << n) })
    }
}

/// Sylow 2-subgroup of GL(n, p): `S2(2,p)` wreathed by anti-diagonal swaps on
/// blocks of size 2^k, with a scalar 2-part of `p - 1` on a leftover 1-block.
pub fn sylow2_gln(n: usize, p: u32) -> Result<Sylow2> {
    if n == 0 || n > 8 {
        return Err(Error::Unsupported(alloc::format!("dimension {}", n)));
    }
    if p < 3 || !modular::is_prime(p as u64) {
        return Err(Error::Unsupported(alloc::format!("p = {} must be an odd prime", p)));
    }
    let two_pm1 = 1u32 << (p - 1).trailing_zeros();
    let scalar = modular::primitive_root_of_unity(p, two_pm1 as u64).expect("root exists");
    if n == 1 {
        return Ok(Sylow2 {
            p,
            n,
            generators: alloc::vec![MatGF::diag(p, &[scalar])],
            name: alloc::format!("C{}", two_pm1),
        });
    }
    let s2 = sylow2_gl2(p)?;
    let mut generators = Vec::new();
    let mut names = Vec::new();
    let mut offset = 0usize;
    let mut remaining = n;
    while remaining >= 2 {
        let k = usize::BITS - 1 - remaining.leading_zeros();
        let size = 1usize << k;
        let mut block_gens: Vec<MatGF> = s2.generators.iter().map(|g| g.embed(size)).collect();
        let mut name = s2.name.clone();
        let mut s = 4;
        while s <= size {
            block_gens.push(MatGF::anti_identity(p, s).embed(size));
            name = alloc::format!("({}) wr C2", name);
            s *= 2;
        }
        for g in block_gens {
            generators.push(place_block(&g, offset, n));
        }
        names.push(name);
        offset += size;
        remaining -= size;
    }
    if remaining == 1 {
        generators.push(place_block(&MatGF::diag(p, &[scalar]), offset, n));
        names.push(alloc::format!("C{}", two_pm1));
    }
    Ok(Sylow2 { p, n, generators, name: names.join(" x ") })
}

fn place_block(b: &MatGF, offset: usize, n: usize) -> MatGF {
    let q = b.modulus;
    let mut blocks = Vec::new();
    if offset > 0 {
        blocks.push(MatGF::identity(q, offset));
    }
    blocks.push(b.clone());
    if offset + b.n < n {
        blocks.push(MatGF::identity(q, n - offset - b.n));
    }
    MatGF::block_diag(&blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = MatGF::from_rows(7, &[&[1, 2], &[3, 4]]).unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(a.det(), (4 - 6i64).rem_euclid(7));
        let c = MatGF::from_rows(3, &[&[0, -1], &[-1, -1]]).unwrap();
        assert_eq!(c.order().unwrap(), 8);
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(2, 3), 48);
        assert_eq!(gl_order(4, 2), 20160);
        assert_eq!(gl_order(3, 5), 1_488_000);
    }

    #[test]
    fn faithful_action_fixes_zero() {
        let a = MatGF::from_rows(3, &[&[0, 1], &[1, 1]]).unwrap();
        let g = matrix_group_to_perm(&[a.clone()]).unwrap();
        assert_eq!(g.degree(), 9);
        assert_eq!(g.generators()[0].apply(0), 0);
        assert_eq!(g.order(), a.order().unwrap() as u128);
    }

    #[test]
    fn sylow_orders_match_two_part() {
        for p in [3u32, 5, 7, 17, 23, 31, 41, 47] {
            let s = sylow2_gl2(p).unwrap();
            assert_eq!(s.order(), two_part(gl_order(2, p as u64)), "p = {}", p);
        }
    }

    #[test]
    fn higher_rank_sylow_orders() {
        for p in [3u32, 5, 7] {
            for n in 1..=3usize {
                let s = sylow2_gln(n, p).unwrap();
                assert_eq!(s.order(), two_part(gl_order(n as u32, p as u64)), "n = {} p = {}", n, p);
            }
        }
        let s = sylow2_gln(4, 3).unwrap();
        assert_eq!(s.order(), 512);
    }
}
