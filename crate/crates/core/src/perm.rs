//! Permutations on `0..n` stored as image lists.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees `images` is a bijection.
    pub fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = alloc::vec![false; degree];
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                let x = x as usize;
                if x >= degree || touched[x] {
                    return Err(Error::InvalidPermutation(degree));
                }
                touched[x] = true;
                images[x] = cyc[(k + 1) % cyc.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1,2,3)(4,5)`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut current: Option<Vec<u32>> = None;
        let mut number = alloc::string::String::new();
        for (pos, ch) in text.char_indices() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(parse_err(pos, "nested cycle"));
                    }
                    current = Some(Vec::new());
                }
                ',' | ')' => {
                    let cyc = current.as_mut().ok_or_else(|| parse_err(pos, "stray delimiter"))?;
                    let v: u32 = number.trim().parse().map_err(|_| parse_err(pos, "bad point"))?;
                    if v == 0 {
                        return Err(parse_err(pos, "points are 1-based"));
                    }
                    cyc.push(v - 1);
                    number.clear();
                    if ch == ')' {
                        cycles.push(current.take().unwrap());
                    }
                }
                c if c.is_ascii_digit() => number.push(c),
                c if c.is_whitespace() => {}
                _ => return Err(parse_err(pos, "unexpected character")),
            }
        }
        if current.is_some() {
            return Err(parse_err(text.len(), "unterminated cycle"));
        }
        let max = cycles.iter().flatten().map(|&x| x as usize + 1).max().unwrap_or(0);
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(degree.max(max), &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn into_images(self) -> Vec<u32> {
        self.images
    }

    #[inline]
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `a` then `b`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.compose(&sq);
            }
        }
        acc
    }

    /// `b^-1 a b`.
    pub fn conjugate(&self, by: &Permutation) -> Permutation {
        by.inverse().compose(self).compose(by)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse().compose(&other.inverse()).compose(self).compose(other)
    }

    /// Non-trivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as u32);
                x = self.images[x] as usize;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Same action on a larger point set, fixing the new points.
    pub fn extend(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Permutation { images }
    }

    /// Moves the action to points `offset..offset+degree` of a set of size `total`.
    pub fn shifted(&self, offset: usize, total: usize) -> Permutation {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = x + offset as u32;
        }
        Permutation { images }
    }
}

fn parse_err(pos: usize, msg: &str) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// 1-based cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::parse_cycles("(1,2)", 3).unwrap();
        let b = Permutation::parse_cycles("(2,3)", 3).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.compose(&b).apply(0), 2);
        assert_eq!(a.compose(&b).to_string(), "(1,3,2)");
    }

    #[test]
    fn conjugation_and_commutator() {
        let a = Permutation::parse_cycles("(1,2,3)", 4).unwrap();
        let b = Permutation::parse_cycles("(3,4)", 4).unwrap();
        assert_eq!(a.conjugate(&b).to_string(), "(1,2,4)");
        let c = a.commutator(&b);
        assert_eq!(c, a.inverse().compose(&b.inverse()).compose(&a).compose(&b));
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(alloc::vec![0, 0, 1]).is_err());
        assert!(Permutation::parse_cycles("(1,2)(2,3)", 3).is_err());
    }

    #[test]
    fn order_and_powers() {
        let a = Permutation::parse_cycles("(2,9,4,6,3,7,5,8)", 9).unwrap();
        assert_eq!(a.order(), 8);
        assert!(a.pow(8).is_identity());
        assert_eq!(a.pow(-1), a.inverse());
        assert_eq!(a.pow(3).compose(&a.pow(5)), Permutation::identity(9));
    }
}
