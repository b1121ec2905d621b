//! Concrete permutation realizations of [`GroupSpec`] descriptions.
//!
//! Semidirect products act on the disjoint union of the p-part (as vectors,
//! translations for its generators) and the points of the acting group.
//! Order-16 groups, quasidihedral and dicyclic groups use their regular
//! representation from coset enumeration.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::aut::{automorphism_group, AutOptions};
use crate::chain::PermutationGroup;
use crate::coset::regular_representation;
use crate::error::{Error, Result};
use crate::matrix::{vector_index, vector_of, MatGF};
use crate::modular::{action_params, c16_action_params, is_prime, primitive_root_of_unity, ActionForm};
use crate::perm::{gcd, Permutation};
use crate::spec::{default_names, Action, GroupSpec, Order16};
use crate::words::{parse_word, Presentation, Word};
use crate::{DEFAULT_MAX_COSETS, DEFAULT_MAX_ELEMENTS};

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub max_elements: usize,
    pub max_cosets: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_elements: DEFAULT_MAX_ELEMENTS, max_cosets: DEFAULT_MAX_COSETS }
    }
}

#[derive(Clone, Debug)]
pub struct Built {
    pub group: PermutationGroup,
    /// One name per generator, in generator order.
    pub names: Vec<String>,
    pub order: u128,
}

impl Built {
    fn new(group: PermutationGroup, names: Vec<String>) -> Built {
        let order = group.order();
        Built { group, names, order }
    }
}

pub fn build(spec: &GroupSpec) -> Result<Built> {
    build_with(spec, &BuildOptions::default())
}

pub fn build_with(spec: &GroupSpec, opts: &BuildOptions) -> Result<Built> {
    let built = match spec {
        GroupSpec::Cyclic(n) => cyclic(*n as usize),
        GroupSpec::ElemAbelian { p, k } => elem_abelian(*p, *k)?,
        GroupSpec::Order16(o) => order16(*o, opts)?,
        GroupSpec::Dihedral(n) => dihedral(*n, opts)?,
        GroupSpec::Quasidihedral(n) => presented(&quasidihedral_presentation(*n)?, opts)?,
        GroupSpec::Dicyclic(n) => presented(&dicyclic_presentation(*n)?, opts)?,
        GroupSpec::Direct(parts) => {
            let built: Vec<Built> = parts.iter().map(|p| build_with(p, opts)).collect::<Result<_>>()?;
            direct(&built)
        }
        GroupSpec::Semidirect { base, top, action } => semidirect(base, top, action, opts)?,
        GroupSpec::Wreath(b) => wreath(&build_with(b, opts)?),
        GroupSpec::Central { left, right, zl, zr } => {
            central(&build_with(left, opts)?, &build_with(right, opts)?, zl, zr, opts)?
        }
        GroupSpec::Holomorph(b) => holomorph(&build_with(b, opts)?, opts)?,
        GroupSpec::Presented(pres) => presented(pres, opts)?,
        GroupSpec::Perms { degree, gens } => {
            Built::new(PermutationGroup::new(*degree, gens.clone())?, default_names(gens.len()))
        }
        GroupSpec::AutOf(b) => aut_of(&build_with(b, opts)?, opts)?,
        GroupSpec::Family16p { two, p, image, gens } => {
            let mats = family16p_matrices(*two, *p, *image, gens)?;
            semidirect(
                &GroupSpec::Cyclic(*p),
                &GroupSpec::Order16(*two),
                &Action::Matrices(mats),
                opts,
            )?
        }
        GroupSpec::Family16p2 { two, p, preset } => semidirect(
            &GroupSpec::ElemAbelian { p: *p, k: 2 },
            &GroupSpec::Order16(*two),
            &Action::Preset(preset.clone()),
            opts,
        )?,
    };
    if let Some(expected) = spec.predicted_order() {
        if expected != built.order {
            return Err(Error::InvalidAction(alloc::format!(
                "built order {} differs from the expected {}",
                built.order,
                expected
            )));
        }
    }
    Ok(built)
}

fn cyclic(n: usize) -> Built {
    let cyc: Vec<u32> = (0..n as u32).collect();
    let g = Permutation::from_cycles(n, &[&cyc]).expect("cycle");
    Built::new(PermutationGroup::new(n, alloc::vec![g]).expect("degree"), default_names(1))
}

fn elem_abelian(p: u32, k: u32) -> Result<Built> {
    if p < 2 || k == 0 {
        return Err(Error::Unsupported(alloc::format!("elemab({},{})", p, k)));
    }
    let parts: Vec<Built> = (0..k).map(|_| cyclic(p as usize)).collect();
    Ok(direct(&parts))
}

fn order16(o: Order16, opts: &BuildOptions) -> Result<Built> {
    presented(&o.presentation(), opts)
}

fn presented(pres: &Presentation, opts: &BuildOptions) -> Result<Built> {
    let g = regular_representation(pres, opts.max_cosets)?;
    Ok(Built::new(g, pres.generators.clone()))
}

fn dihedral(n: u32, opts: &BuildOptions) -> Result<Built> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::Unsupported(alloc::format!("dihedral group of order {}", n)));
    }
    let m = (n / 2) as usize;
    if m < 3 {
        let pres = Presentation::new(&["a", "b"], &alloc::format!("a^{}=b^2=a^b*a=1", m), &[])?;
        return presented(&pres, opts);
    }
    let cyc: Vec<u32> = (0..m as u32).collect();
    let r = Permutation::from_cycles(m, &[&cyc])?;
    let s = Permutation::from_images((0..m as u32).map(|i| (m as u32 - i) % m as u32).collect())?;
    Ok(Built::new(PermutationGroup::new(m, alloc::vec![r, s])?, default_names(2)))
}

/// `a^(n/2) = b^2 = 1, a^b = a^(n/4 - 1)`.
pub fn quasidihedral_presentation(n: u32) -> Result<Presentation> {
    if n < 16 || !n.is_power_of_two() {
        return Err(Error::Unsupported(alloc::format!("quasidihedral group of order {}", n)));
    }
    let rels = alloc::format!("a^{}=b^2=a^b*a^-{}=1", n / 2, n / 4 - 1);
    Presentation::new(&["a", "b"], &rels, &[])
}

/// `a^(n/2) = 1, b^2 = a^(n/4), a^b = a^-1`.
pub fn dicyclic_presentation(n: u32) -> Result<Presentation> {
    if n < 4 || n % 4 != 0 {
        return Err(Error::Unsupported(alloc::format!("dicyclic group of order {}", n)));
    }
    let rels = alloc::format!("a^{}=a^{}*b^-2=a^b*a=1", n / 2, n / 4);
    Presentation::new(&["a", "b"], &rels, &[])
}

fn direct(parts: &[Built]) -> Built {
    let total: usize = parts.iter().map(|b| b.group.degree()).sum();
    let mut gens = Vec::new();
    let mut names = Vec::new();
    let mut offset = 0;
    let many = parts.len() > 1;
    for (i, b) in parts.iter().enumerate() {
        for (g, name) in b.group.generators().iter().zip(&b.names) {
            gens.push(g.shifted(offset, total));
            names.push(if many { alloc::format!("{}{}", name, i + 1) } else { name.clone() });
        }
        offset += b.group.degree();
    }
    Built::new(PermutationGroup::new(total, gens).expect("degrees agree"), names)
}

fn wreath(b: &Built) -> Built {
    let d = b.group.degree();
    let mut gens: Vec<Permutation> = b.group.generators().iter().map(|g| g.extend(2 * d)).collect();
    let swap: Vec<u32> = (0..2 * d as u32).map(|i| (i + d as u32) % (2 * d as u32)).collect();
    gens.push(Permutation::from_images_unchecked(swap));
    let mut names = b.names.clone();
    names.push("t".to_string());
    Built::new(PermutationGroup::new(2 * d, gens).expect("degrees agree"), names)
}

fn eval_default(built: &Built, text: &str) -> Result<Permutation> {
    let w: Word = parse_word(text, &default_names(built.names.len()), &[])
        .or_else(|_| parse_word(text, &built.names, &[]))?;
    Ok(w.evaluate_perm(built.group.generators(), built.group.degree()))
}

fn is_central(g: &PermutationGroup, z: &Permutation) -> bool {
    g.generators().iter().all(|x| x.compose(z) == z.compose(x))
}

fn central(l: &Built, r: &Built, zl: &str, zr: &str, opts: &BuildOptions) -> Result<Built> {
    let a = eval_default(l, zl)?;
    let b = eval_default(r, zr)?;
    if !is_central(&l.group, &a) || !is_central(&r.group, &b) || a.order() != b.order() {
        return Err(Error::CentralMismatch);
    }
    let prod = direct(&[l.clone(), r.clone()]);
    let total = prod.group.degree();
    let z = a.extend(total).compose(&b.inverse().shifted(l.group.degree(), total));
    let table = prod.group.closure(opts.max_elements)?;
    let zi = table.index_of(&z).expect("z lies in the product");
    let normal = table.subgroup(&[zi]);
    let q = table.quotient_by_normal(&normal)?;
    let mut names = l.names.clone();
    names.extend(r.names.iter().cloned());
    let out = Built::new(q, names);
    let expected = l.order * r.order / a.order() as u128;
    if out.order != expected {
        return Err(Error::CentralMismatch);
    }
    Ok(out)
}

fn holomorph(b: &Built, opts: &BuildOptions) -> Result<Built> {
    let t = b.group.closure(opts.max_elements)?;
    let aut = automorphism_group(&t, &AutOptions::default())?;
    let n = t.order();
    let mut gens = Vec::new();
    for &g in t.generators() {
        let images: Vec<u32> = (0..n as u32).map(|x| t.mul(x, g)).collect();
        gens.push(Permutation::from_images_unchecked(images));
    }
    gens.extend(aut.generators.iter().cloned());
    let mut names = b.names.clone();
    names.extend((0..aut.generators.len()).map(|i| alloc::format!("s{}", i + 1)));
    let out = Built::new(PermutationGroup::new(n, gens)?, names);
    debug_assert_eq!(out.order, n as u128 * aut.order);
    Ok(out)
}

fn aut_of(b: &Built, opts: &BuildOptions) -> Result<Built> {
    let t = b.group.closure(opts.max_elements)?;
    let aut = automorphism_group(&t, &AutOptions::default())?;
    let k = aut.generators.len();
    let gens = if k == 0 { alloc::vec![Permutation::identity(t.order())] } else { aut.generators };
    let names = default_names(gens.len());
    Ok(Built::new(PermutationGroup::new(t.order(), gens)?, names))
}

/// Layout of the normal abelian part of a semidirect product.
struct Base {
    modulus: u32,
    rank: usize,
}

fn base_layout(base: &GroupSpec) -> Result<Base> {
    match base {
        GroupSpec::Cyclic(n) if *n >= 2 => Ok(Base { modulus: *n, rank: 1 }),
        GroupSpec::ElemAbelian { p, k } if is_prime(*p as u64) && *k >= 1 => {
            Ok(Base { modulus: *p, rank: *k as usize })
        }
        other => Err(Error::Unsupported(alloc::format!("semidirect base {}", other))),
    }
}

fn semidirect(base: &GroupSpec, top: &GroupSpec, action: &Action, opts: &BuildOptions) -> Result<Built> {
    let layout = base_layout(base)?;
    let top_built = build_with(top, opts)?;
    let mats = match action {
        Action::Matrices(ms) => ms.clone(),
        Action::Preset(name) => resolve_preset(name, top, &top_built.names, layout.modulus)?,
    };
    semidirect_by_matrices(layout.modulus, layout.rank, &top_built, &mats)
}

/// `(Z/m)^r @ T`, generator `t_s` of `T` acting by `v -> v M_s`.
pub fn semidirect_by_matrices(modulus: u32, rank: usize, top: &Built, mats: &[MatGF]) -> Result<Built> {
    let ngens = top.group.generators().len();
    if mats.len() != ngens {
        return Err(Error::InvalidAction(alloc::format!(
            "{} matrices for {} generators",
            mats.len(),
            ngens
        )));
    }
    for m in mats {
        if m.modulus() != modulus || m.dim() != rank {
            return Err(Error::InvalidAction(alloc::format!(
                "matrix must be {}x{} over Z/{}",
                rank,
                rank,
                modulus
            )));
        }
        if gcd(m.det().rem_euclid(modulus as i64) as u64, modulus as u64) != 1 {
            return Err(Error::InvalidAction("matrix is not invertible".into()));
        }
    }
    let size = (modulus as usize).pow(rank as u32);
    let degree = size + top.group.degree();
    let mut gens = Vec::new();
    let mut names = Vec::new();
    let pnames = ["x", "y", "z", "w"];
    for i in 0..rank {
        let images: Vec<u32> = (0..degree as u32)
            .map(|pt| {
                if (pt as usize) < size {
                    let mut v = vector_of(pt, modulus, rank);
                    v[i] = (v[i] + 1) % modulus;
                    vector_index(&v, modulus)
                } else {
                    pt
                }
            })
            .collect();
        gens.push(Permutation::from_images_unchecked(images));
        names.push(pnames.get(i).map(|s| s.to_string()).unwrap_or_else(|| alloc::format!("x{}", i + 1)));
    }
    for (t, m) in top.group.generators().iter().zip(mats) {
        let mut images = Vec::with_capacity(degree);
        for pt in 0..size as u32 {
            images.push(vector_index(&m.apply_row(&vector_of(pt, modulus, rank)), modulus));
        }
        for &img in t.images() {
            images.push(img + size as u32);
        }
        gens.push(Permutation::from_images(images)?);
    }
    names.extend(top.names.iter().cloned());
    let out = Built::new(PermutationGroup::new(degree, gens)?, names);
    if out.order != size as u128 * top.order {
        return Err(Error::InvalidAction("matrices do not satisfy the relations of the acting group".into()));
    }
    Ok(out)
}

/// One-dimensional actions for `Cp @ T`: the first listed generator acts by a
/// primitive root of unity of order `image`, the other listed ones by `-1`.
pub fn family16p_matrices(two: Order16, p: u32, image: u32, acting: &[String]) -> Result<Vec<MatGF>> {
    if !is_prime(p as u64) || p == 2 {
        return Err(Error::Unsupported(alloc::format!("p = {} is not an odd prime", p)));
    }
    if (p - 1) % image != 0 {
        return Err(Error::NoSolution(alloc::format!("no element of order {} mod {}", image, p)));
    }
    let root = primitive_root_of_unity(p, image as u64)
        .ok_or_else(|| Error::NoSolution(alloc::format!("no element of order {} mod {}", image, p)))?;
    let names = two.generators();
    for g in acting {
        if !names.contains(&g.as_str()) {
            return Err(Error::UnknownSymbol(g.clone()));
        }
    }
    Ok(names
        .iter()
        .map(|n| {
            let e = match acting.iter().position(|g| g == n) {
                Some(0) => root,
                Some(_) => -1,
                None => 1,
            };
            MatGF::new(p, 1, &[e]).expect("1x1")
        })
        .collect())
}

/// Matrices for a named two-dimensional action on `Cp x Cp`.
///
/// * `QD8full`, `D8full`: `a -> [[x,x],[-x,x]]`, `b -> diag(1,-1)` with
///   `2x^2 = -1` or `2x^2 = 1`.
/// * `Q4full`: the same `a` with `2x^2 = 1`, `b` the first matrix making the
///   relators hold.
/// * `C16full`: `a -> [[0,1],[x,y]]`, the first order-16 solution.
/// * `C8`: `a -> [[0,-1],[-1,-1]]` at p = 3, otherwise the first companion
///   matrix `[[0,1],[x,y]]` of order 8.
/// * `Q2`, `Q2other` (on Q2xC2): `a -> [[x,y],[y,-x]]` with `x^2+y^2 = -1`,
///   `b -> [[0,1],[-1,0]]`, `c -> I` or `-I`.
/// * `c4_<gens>`: first generator `-> [[0,1],[-1,0]]`, the others `-> -I`.
/// * `<u>_<v>`: diagonal action, the generators listed in `u` invert the first
///   coordinate and those in `v` the second. An `s3s3_` prefix is accepted and
///   ignored, it only marks the split cases.
///
/// Generators not fixed by the name act trivially.
pub fn resolve_preset(name: &str, top: &GroupSpec, names: &[String], p: u32) -> Result<Vec<MatGF>> {
    if !is_prime(p as u64) || p == 2 {
        return Err(Error::Unsupported(alloc::format!("preset actions need an odd prime, got {}", p)));
    }
    let m = p as i64;
    let k = names.len();
    let id = MatGF::identity(p, 2);
    let neg = MatGF::scalar(p, 2, -1);
    let mat = |e: &[i64]| MatGF::new(p, 2, e).expect("2x2");
    let no = |what: &str| Error::NoSolution(alloc::format!("{} at p = {}", what, p));
    let two_gens = |mats: Vec<MatGF>| -> Result<Vec<MatGF>> {
        if k != mats.len() {
            return Err(Error::InvalidAction(alloc::format!("preset `{}` needs {} generators", name, mats.len())));
        }
        Ok(mats)
    };
    let mats = match name {
        "QD8full" | "D8full" => {
            let form = if name == "QD8full" { ActionForm::QD8 } else { ActionForm::D8 };
            let x = *action_params(p, form).firsts().first().ok_or_else(|| no(name))?;
            two_gens(alloc::vec![mat(&[x, x, -x, x]), MatGF::diag(p, &[1, -1])])?
        }
        "Q4full" => {
            let x = *action_params(p, ActionForm::D8).firsts().first().ok_or_else(|| no(name))?;
            let c = mat(&[x, x, -x, x]);
            let pres = Order16::Q4.presentation();
            let mut found = None;
            'search: for s in 0..m {
                for t in 0..m {
                    if (s * s + t * t + 1) % m != 0 {
                        continue;
                    }
                    let d = mat(&[s, t, t, -s]);
                    if relators_hold(&pres, &[c.clone(), d.clone()]) {
                        found = Some(d);
                        break 'search;
                    }
                }
            }
            two_gens(alloc::vec![c, found.ok_or_else(|| no(name))?])?
        }
        "C16full" => {
            let sols = c16_action_params(p)?;
            let s = sols.solutions.first().ok_or_else(|| no(name))?;
            two_gens(alloc::vec![mat(&[0, 1, s[0], s[1]])])?
        }
        "C8" => {
            if p == 3 {
                two_gens(alloc::vec![mat(&[0, -1, -1, -1])])?
            } else {
                let mut found = None;
                'c8: for x in 0..m {
                    for y in 0..m {
                        let c = mat(&[0, 1, x, y]);
                        if c.order().ok() == Some(8) {
                            found = Some(c);
                            break 'c8;
                        }
                    }
                }
                two_gens(alloc::vec![found.ok_or_else(|| no(name))?])?
            }
        }
        "Q2" | "Q2other" => {
            if top != &GroupSpec::Order16(Order16::Q2xC2) {
                return Err(Error::InvalidAction(alloc::format!("preset `{}` is defined on Q2xC2", name)));
            }
            let pair = action_params(p, ActionForm::Q4Pair);
            let s = pair.solutions.first().ok_or_else(|| no(name))?;
            let c = if name == "Q2" { id.clone() } else { neg.clone() };
            two_gens(alloc::vec![mat(&[s[0], s[1], s[1], -s[0]]), mat(&[0, 1, -1, 0]), c])?
        }
        _ => {
            if let Some(rest) = name.strip_prefix("c4_") {
                let letters = split_letters(rest, names)?;
                (0..k)
                    .map(|g| match letters.iter().position(|&l| l == g) {
                        Some(0) => mat(&[0, 1, -1, 0]),
                        Some(_) => neg.clone(),
                        None => id.clone(),
                    })
                    .collect()
            } else {
                let rest = name.strip_prefix("s3s3_").unwrap_or(name);
                let (u, v) = rest.split_once('_').ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
                let u = split_letters(u, names)?;
                let v = split_letters(v, names)?;
                (0..k)
                    .map(|g| MatGF::diag(p, &[if u.contains(&g) { -1 } else { 1 }, if v.contains(&g) { -1 } else { 1 }]))
                    .collect()
            }
        }
    };
    Ok(mats)
}

fn split_letters(word: &str, names: &[String]) -> Result<Vec<usize>> {
    word.chars()
        .map(|c| {
            names
                .iter()
                .position(|n| n.len() == 1 && n.starts_with(c))
                .ok_or_else(|| Error::UnknownSymbol(c.to_string()))
        })
        .collect()
}

fn relators_hold(pres: &Presentation, mats: &[MatGF]) -> bool {
    let p = mats[0].modulus();
    let id = MatGF::identity(p, mats[0].dim());
    pres.relators.iter().all(|r| r.evaluate(mats, id.clone(), |a, b| a.mul(b), |a, e| a.pow(e)).is_identity())
}

/// The acting matrices of a semidirect spec, resolving presets.
pub fn action_matrices(spec: &GroupSpec) -> Result<Vec<MatGF>> {
    match spec {
        GroupSpec::Semidirect { base, top, action } => match action {
            Action::Matrices(ms) => Ok(ms.clone()),
            Action::Preset(name) => {
                let layout = base_layout(base)?;
                let t = build(top)?;
                resolve_preset(name, top, &t.names, layout.modulus)
            }
        },
        GroupSpec::Family16p { two, p, image, gens } => family16p_matrices(*two, *p, *image, gens),
        GroupSpec::Family16p2 { two, p, preset } => {
            let top = GroupSpec::Order16(*two);
            let t = build(&top)?;
            resolve_preset(preset, &top, &t.names, *p)
        }
        _ => Err(Error::Unsupported("not a semidirect product".into())),
    }
}

/// `sd(elemab(p,2), T, preset=name)`
pub fn preset_spec(p: u32, top: GroupSpec, preset: &str) -> GroupSpec {
    GroupSpec::Semidirect {
        base: Box::new(GroupSpec::ElemAbelian { p, k: 2 }),
        top: Box::new(top),
        action: Action::Preset(preset.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_of(text: &str) -> u128 {
        build(&GroupSpec::parse(text).unwrap()).unwrap().order
    }

    #[test]
    fn atoms_have_their_orders() {
        assert_eq!(order_of("cyclic(16)"), 16);
        assert_eq!(order_of("elemab(3,2)"), 9);
        assert_eq!(order_of("dihedral(8)"), 8);
        assert_eq!(order_of("dihedral(4)"), 4);
        assert_eq!(order_of("quasidihedral(32)"), 32);
        assert_eq!(order_of("dicyclic(8)"), 8);
        assert_eq!(order_of("dicyclic(12)"), 12);
        for o in Order16::ALL {
            let b = build(&GroupSpec::Order16(o)).unwrap();
            assert_eq!(b.order, 16, "{}", o.name());
            assert!(o.presentation().check_relators(b.group.generators()).is_empty());
        }
    }

    #[test]
    fn products() {
        assert_eq!(order_of("wr(elemab(2,2))"), 32);
        assert_eq!(order_of("wr(cyclic(2))"), 8);
        assert_eq!(order_of("wr(hol(cyclic(3)))"), 72);
        assert_eq!(order_of("yprod(cyclic(4), dicyclic(8), a^2, a^2)"), 16);
        assert_eq!(order_of("yprod(dihedral(8), dihedral(8), (a^2), a^2)"), 32);
        assert_eq!(order_of("yprod(cyclic(16), dihedral(32), a^8, a^8)"), 256);
        assert!(build(&GroupSpec::parse("yprod(dihedral(8), dihedral(8), a, a^2)").unwrap()).is_err());
    }

    #[test]
    fn holomorphs() {
        assert_eq!(order_of("hol(cyclic(3))"), 6);
        assert_eq!(order_of("hol(cyclic(5))"), 20);
        assert_eq!(order_of("hol(dp(cyclic(4), cyclic(2)))"), 64);
    }

    #[test]
    fn semidirect_examples() {
        assert_eq!(order_of("sd(cyclic(3), cyclic(16), action=[[2]]@3)"), 48);
        assert_eq!(order_of("sd(elemab(3,2), order16(QD8), preset=QD8full)"), 144);
        assert_eq!(order_of("sd(elemab(7,2), order16(D8), preset=D8full)"), 784);
        assert_eq!(order_of("sd(elemab(7,2), order16(C16), preset=C16full)"), 784);
        assert_eq!(order_of("sd(elemab(3,2), order16(C16), preset=C8)"), 144);
        assert_eq!(order_of("sd(elemab(7,2), order16(Q4), preset=Q4full)"), 784);
        assert_eq!(order_of("sd(cyclic(9), cyclic(6), action=[[2]]@9)"), 54);
        let bad = GroupSpec::parse("sd(cyclic(5), cyclic(4), action=[[4]]@5)").unwrap();
        assert_eq!(build(&bad).unwrap().order, 20);
        let bad = GroupSpec::parse("sd(cyclic(5), cyclic(3), action=[[4]]@5)").unwrap();
        assert!(matches!(build(&bad), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn conjugation_recovers_matrices() {
        let spec = GroupSpec::parse("sd(elemab(7,2), order16(C16), preset=C16full)").unwrap();
        let b = build(&spec).unwrap();
        let mats = action_matrices(&spec).unwrap();
        let g = b.group.generators();
        let (x, y) = (&g[0], &g[1]);
        let c = &g[2];
        let m = &mats[0];
        for (i, xi) in [x, y].iter().enumerate() {
            let conj = xi.conjugate(c);
            let expect = x.pow(m.get(i, 0) as i64).compose(&y.pow(m.get(i, 1) as i64));
            assert_eq!(conj, expect);
        }
    }

    #[test]
    fn presets_match_their_defining_congruences() {
        let m = action_matrices(&GroupSpec::parse("fam16p2(C8xC2, 3, ab_b)").unwrap()).unwrap();
        assert_eq!(m[0], MatGF::diag(3, &[-1, 1]));
        assert_eq!(m[1], MatGF::scalar(3, 2, -1));
        let m = action_matrices(&GroupSpec::parse("fam16p2(C16, 7, C16full)").unwrap()).unwrap();
        assert_eq!(m[0], MatGF::new(7, 2, &[0, 1, 1, 1]).unwrap());
        assert_eq!(m[0].order().unwrap(), 16);
        let m = action_matrices(&GroupSpec::parse("fam16p2(D4xC2, 3, abc_ac)").unwrap()).unwrap();
        assert_eq!(m, [MatGF::scalar(3, 2, -1), MatGF::diag(3, &[-1, 1]), MatGF::scalar(3, 2, -1)]);
        let m = action_matrices(&GroupSpec::parse("fam16p2(Q2xC2, 3, s3s3_b_c)").unwrap()).unwrap();
        assert_eq!(m, [MatGF::identity(3, 2), MatGF::diag(3, &[-1, 1]), MatGF::diag(3, &[1, -1])]);
        let bad = GroupSpec::parse("fam16p2(G44_22, 3, a_b)").unwrap();
        assert!(matches!(build(&bad), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn family_16p() {
        let s = GroupSpec::parse("fam16p(C16, 3, C2, a)").unwrap();
        assert_eq!(build(&s).unwrap().order, 48);
        let s = GroupSpec::parse("fam16p(C16, 17, C16, a)").unwrap();
        assert_eq!(build(&s).unwrap().order, 272);
        let s = GroupSpec::parse("fam16p(C16, 3, C4, a)").unwrap();
        assert!(matches!(build(&s), Err(Error::NoSolution(_))));
        let s = GroupSpec::parse("fam16p(C4YQ2, 5, C2, [a,b,c])").unwrap();
        assert_eq!(build(&s).unwrap().order, 80);
    }
}
