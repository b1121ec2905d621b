//! Brute-force congruence solvers over Z/p.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::MatGF;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularSolutionSet {
    pub p: u32,
    pub constraint: String,
    /// Each solution is a tuple of residues in `0..p`, sorted ascending.
    pub solutions: Vec<Vec<i64>>,
}

impl ModularSolutionSet {
    fn new(p: u32, constraint: &str, mut solutions: Vec<Vec<i64>>) -> Self {
        solutions.sort();
        solutions.dedup();
        ModularSolutionSet { p, constraint: constraint.into(), solutions }
    }

    pub fn contains(&self, tuple: &[i64]) -> bool {
        let m = self.p as i64;
        let t: Vec<i64> = tuple.iter().map(|x| x.rem_euclid(m)).collect();
        self.solutions.iter().any(|s| *s == t)
    }

    pub fn firsts(&self) -> Vec<i64> {
        self.solutions.iter().map(|s| s[0]).collect()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn pow_mod(base: i64, exp: u64, m: i64) -> i64 {
    let m128 = m as i128;
    let mut b = base.rem_euclid(m) as i128;
    let mut e = exp;
    let mut acc: i128 = 1 % m128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    acc as i64
}

/// Inverse modulo `m`, if `a` is a unit.
pub fn inv_mod(a: i64, m: i64) -> Option<i64> {
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 == 1 {
        Some(s0.rem_euclid(m))
    } else {
        None
    }
}

/// Multiplicative order of a unit modulo `m`.
pub fn mult_order(a: i64, m: i64) -> Option<u64> {
    inv_mod(a, m)?;
    let a = a.rem_euclid(m);
    let mut x = a;
    let mut k = 1u64;
    while x != 1 % m {
        x = x * a % m;
        k += 1;
    }
    Some(k)
}

pub fn primitive_root(p: u32) -> Result<i64> {
    if !is_prime(p as u64) {
        return Err(Error::Unsupported(alloc::format!("{} is not prime", p)));
    }
    let m = p as i64;
    (1..m)
        .find(|&g| mult_order(g, m) == Some(p as u64 - 1))
        .ok_or_else(|| Error::NoSolution("primitive root".into()))
}

/// Residues `x` with `-x` primitive, so that `a^b * a^x = 1` makes `b` act
/// as a generator of Aut(Cp).
pub fn holomorph_exponents(p: u32) -> Result<ModularSolutionSet> {
    if !is_prime(p as u64) {
        return Err(Error::Unsupported(alloc::format!("{} is not prime", p)));
    }
    let m = p as i64;
    let sols = (1..m)
        .filter(|&x| mult_order(m - x, m) == Some(p as u64 - 1))
        .map(|x| alloc::vec![x])
        .collect();
    Ok(ModularSolutionSet::new(p, "-x is a primitive root", sols))
}

/// Residues `x` that are primitive roots mod p.
pub fn primitive_roots(p: u32) -> Result<ModularSolutionSet> {
    if !is_prime(p as u64) {
        return Err(Error::Unsupported(alloc::format!("{} is not prime", p)));
    }
    let m = p as i64;
    let sols = (1..m).filter(|&x| mult_order(x, m) == Some(p as u64 - 1)).map(|x| alloc::vec![x]).collect();
    Ok(ModularSolutionSet::new(p, "x has order p - 1", sols))
}

/// Residues `x` for which `[[0,-1],[-x,-x^2]]` has order `p^2 - 1`, i.e. the
/// relators `a^c*b = b^c*a^x*b^(x^2) = 1` make `c` a Singer cycle.
pub fn singer_exponents(p: u32) -> Result<ModularSolutionSet> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::Unsupported(alloc::format!("p = {} must be an odd prime", p)));
    }
    let m = p as i64;
    let target = (p as u64) * (p as u64) - 1;
    let mut sols = Vec::new();
    for x in 1..m {
        let c = MatGF::from_rows(p, &[&[0, -1], &[-x, -x * x]])?;
        if c.order()? == target {
            sols.push(alloc::vec![x]);
        }
    }
    Ok(ModularSolutionSet::new(p, "[[0,-1],[-x,-x^2]] has order p^2 - 1", sols))
}

/// All `x` with `x^n = 1`.
pub fn roots_of_unity(p: u32, n: u64) -> Vec<i64> {
    let m = p as i64;
    (1..m).filter(|&x| pow_mod(x, n, m) == 1).collect()
}

/// Least `x` of multiplicative order exactly `n`.
pub fn primitive_root_of_unity(p: u32, n: u64) -> Option<i64> {
    let m = p as i64;
    (1..m).find(|&x| mult_order(x, m) == Some(n))
}

pub fn sqrt_mod(a: i64, p: u32) -> Vec<i64> {
    let m = p as i64;
    let a = a.rem_euclid(m);
    (0..m).filter(|&x| x * x % m == a).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionForm {
    /// `2x^2 = 1`
    D8,
    /// `2x^2 = -1`
    QD8,
    /// pairs `(a, b)` with `a^2 + b^2 = -1`
    Q4Pair,
}

pub fn action_params(p: u32, form: ActionForm) -> ModularSolutionSet {
    let m = p as i64;
    match form {
        ActionForm::D8 => {
            let sols = (1..m).filter(|&x| (2 * x * x - 1).rem_euclid(m) == 0).map(|x| alloc::vec![x]).collect();
            ModularSolutionSet::new(p, "2*x^2 = 1", sols)
        }
        ActionForm::QD8 => {
            let sols = (1..m).filter(|&x| (2 * x * x + 1).rem_euclid(m) == 0).map(|x| alloc::vec![x]).collect();
            ModularSolutionSet::new(p, "2*x^2 = -1", sols)
        }
        ActionForm::Q4Pair => {
            let mut sols = Vec::new();
            for a in 0..m {
                for b in 0..m {
                    if (a * a + b * b + 1).rem_euclid(m) == 0 {
                        sols.push(alloc::vec![a, b]);
                    }
                }
            }
            ModularSolutionSet::new(p, "a^2 + b^2 = -1", sols)
        }
    }
}

/// Pairs `(x, y)` for which `[[0,1],[x,y]]` has order 16.
///
/// For p = 7 mod 8 the candidates are `x = 1` with `(y^2+2)^2 = 2` and
/// `x = -1` with `(y^2-2)^2 = 2`; for p = 9 mod 16 they are `y = 0` with `x`
/// an 8th root of unity. Every candidate is kept only if the matrix order is 16.
pub fn c16_action_params(p: u32) -> Result<ModularSolutionSet> {
    let m = p as i64;
    let mut cands: Vec<(i64, i64)> = Vec::new();
    if p % 8 == 7 {
        for y in 0..m {
            let s = y * y % m;
            if ((s + 2) * (s + 2) - 2).rem_euclid(m) == 0 {
                cands.push((1, y));
            }
            if ((s - 2) * (s - 2) - 2).rem_euclid(m) == 0 {
                cands.push((m - 1, y));
            }
        }
    } else if p % 16 == 9 {
        for x in roots_of_unity(p, 8) {
            cands.push((x, 0));
        }
    } else {
        return Err(Error::Unsupported(alloc::format!("p = {} is neither 7 mod 8 nor 9 mod 16", p)));
    }
    let mut sols = Vec::new();
    for (x, y) in cands {
        let mat = MatGF::from_rows(p, &[&[0, 1], &[x, y]])?;
        if mat.order()? == 16 {
            sols.push(alloc::vec![x, y]);
        }
    }
    Ok(ModularSolutionSet::new(p, "[[0,1],[x,y]] has order 16", sols))
}

/// Roots of the nested polynomial for an element of order 2^(n+1) in
/// `[[0,1],[1,x]]`: `x^2 + 2 = 0` for n = 2, `(x^2+2)^2 = 2` for n = 3,
/// `((x^2+2)^2-2)^2 = 2` for n = 4, and so on.
pub fn iterated_radical_roots(p: u32, n: u32) -> Result<ModularSolutionSet> {
    if n < 2 {
        return Err(Error::Unsupported("n must be at least 2".into()));
    }
    let m = p as i64;
    if (m + 1) % (1i64 << n) != 0 {
        return Err(Error::Unsupported(alloc::format!("p = {} is not -1 mod 2^{}", p, n)));
    }
    let mut sols = Vec::new();
    for x in 0..m {
        let mut t = (x * x + 2) % m;
        let ok = if n == 2 {
            t == 0
        } else {
            for _ in 0..n - 3 {
                t = (t * t - 2).rem_euclid(m);
            }
            (t * t - 2).rem_euclid(m) == 0
        };
        if ok {
            sols.push(alloc::vec![x]);
        }
    }
    let constraint = match n {
        2 => String::from("x^2 + 2 = 0"),
        _ => alloc::format!("nested depth {} radical = 2", n - 2),
    };
    Ok(ModularSolutionSet::new(p, &constraint, sols))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coxeter234Form {
    /// `b = [[1,x],[y,-1]]` with the binary octahedral relators.
    OffdiagPair,
    /// `b = [[v,x],[y,w]]` with the binary octahedral relators.
    GeneralQuadruple,
    /// `b = [[1,x],[y,-1]]` of order `2(p-1)`, generating `<2,3,4> x Cq`.
    TimesCq,
}

/// The fixed order-3 matrix `[[-1,1],[-1,0]]`.
pub fn coxeter_a(p: u32) -> MatGF {
    MatGF::from_rows(p, &[&[-1, 1], &[-1, 0]]).unwrap()
}

fn comm(a: &MatGF, b: &MatGF) -> Result<MatGF> {
    Ok(a.inverse()?.mul(&b.inverse()?).mul(a).mul(b))
}

/// `a^3 = b^4 = (a,b^2) = a*b*(a*b^-1)^3 = 1`
pub fn satisfies_234(a: &MatGF, b: &MatGF) -> Result<bool> {
    let bi = b.inverse()?;
    let b2 = b.mul(b);
    Ok(a.pow(3).is_identity()
        && b2.mul(&b2).is_identity()
        && comm(a, &b2)?.is_identity()
        && a.mul(b).mul(&a.mul(&bi).pow(3)).is_identity())
}

/// Relators of `<2,3,4> x Cq` for the `[[1,x],[y,-1]]` form.
pub fn satisfies_234_times_cq(p: u32, a: &MatGF, b: &MatGF) -> Result<bool> {
    let bi = b.inverse()?;
    let b2 = b.mul(b);
    let ab = a.mul(b);
    let abi = a.mul(&bi);
    let ai = a.inverse()?;
    let long = ab.pow(2).mul(&ai).mul(&bi).mul(&abi.pow(2)).mul(&ai).mul(b);
    if !(a.pow(3).is_identity() && comm(a, &b2)?.is_identity() && long.is_identity()) {
        return Ok(false);
    }
    if p == 7 {
        Ok(ab.pow(4).mul(&b2).is_identity() && abi.pow(4).mul(&bi.pow(2)).is_identity())
    } else {
        Ok(abi.pow(4).mul(&b.pow(-(p as i64 - 5))).is_identity())
    }
}

pub fn coxeter234_search(p: u32, form: Coxeter234Form) -> Result<ModularSolutionSet> {
    if !is_prime(p as u64) || p < 5 {
        return Err(Error::Unsupported(alloc::format!("p = {}", p)));
    }
    let m = p as i64;
    let a = coxeter_a(p);
    match form {
        Coxeter234Form::OffdiagPair => {
            let mut sols = Vec::new();
            for x in 1..m {
                let y = (-2 * inv_mod(x, m).unwrap()).rem_euclid(m);
                let b = MatGF::from_rows(p, &[&[1, x], &[y, -1]])?;
                if satisfies_234(&a, &b)? {
                    debug_assert_eq!((x * y + 2).rem_euclid(m), 0);
                    sols.push(alloc::vec![x, y]);
                }
            }
            Ok(ModularSolutionSet::new(p, "b=[[1,x],[y,-1]], x*y = -2, <2,3,4> relators", sols))
        }
        Coxeter234Form::TimesCq => {
            let mut sols = Vec::new();
            for x in 0..m {
                for y in 0..m {
                    let s = (1 + x * y) % m;
                    // b^2 = s I, so b has order 2 ord(s)
                    if mult_order(s, m) != Some(p as u64 - 1) {
                        continue;
                    }
                    let b = MatGF::from_rows(p, &[&[1, x], &[y, -1]])?;
                    if satisfies_234_times_cq(p, &a, &b)? {
                        sols.push(alloc::vec![x, y]);
                    }
                }
            }
            Ok(ModularSolutionSet::new(p, "b=[[1,x],[y,-1]] of order 2(p-1), <2,3,4> x Cq relators", sols))
        }
        Coxeter234Form::GeneralQuadruple => {
            let mut sols = Vec::new();
            for b in order_four_candidates(p, &a)? {
                if satisfies_234(&a, &b)? {
                    sols.push(b.entries().iter().map(|&e| e as i64).collect());
                }
            }
            Ok(ModularSolutionSet::new(p, "b=[[v,x],[y,w]], <2,3,4> relators", sols))
        }
    }
}

/// Matrices `b` whose square is an involution commuting with `a`.
fn order_four_candidates(p: u32, a: &MatGF) -> Result<Vec<MatGF>> {
    let m = p as i64;
    let mut out = Vec::new();
    // b^2 = -I: trace 0 and determinant 1.
    for v in 0..m {
        for x in 0..m {
            let w = (m - v) % m;
            if x != 0 {
                let y = (-(1 + v * v) * inv_mod(x, m).unwrap()).rem_euclid(m);
                out.push(MatGF::from_rows(p, &[&[v, x], &[y, w]])?);
            } else if (v * v + 1) % m == 0 {
                for y in 0..m {
                    out.push(MatGF::from_rows(p, &[&[v, 0], &[y, w]])?);
                }
            }
        }
    }
    // b^2 = z, a non-scalar involution commuting with a: trace 0, det -1.
    for s in 0..m {
        for t in 0..m {
            let rhs = (1 - s * s).rem_euclid(m);
            let us: Vec<i64> = if t == 0 {
                if rhs == 0 {
                    (0..m).collect()
                } else {
                    Vec::new()
                }
            } else {
                alloc::vec![rhs * inv_mod(t, m).unwrap() % m]
            };
            for u in us {
                let z = MatGF::from_rows(p, &[&[s, t], &[u, -s]])?;
                if z.mul(a) != a.mul(&z) {
                    continue;
                }
                for b in centralizer_square_roots(p, &z)? {
                    out.push(b);
                }
            }
        }
    }
    Ok(out)
}

/// Matrices commuting with `z` whose square is `z`.
fn centralizer_square_roots(p: u32, z: &MatGF) -> Result<Vec<MatGF>> {
    let m = p as i64;
    let mut out = Vec::new();
    // Centralizer of a non-scalar 2x2 matrix is {alpha I + beta z}.
    for alpha in 0..m {
        for beta in 0..m {
            let bz = z.mul(&MatGF::scalar(p, 2, beta));
            let e: Vec<i64> = bz.entries().iter().map(|&y| y as i64).collect();
            let cand = MatGF::new(p, 2, &[e[0] + alpha, e[1], e[2], e[3] + alpha])?;
            if cand.mul(&cand) == *z {
                out.push(cand);
            }
        }
    }
    Ok(out)
}
