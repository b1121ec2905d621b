//! Structural group descriptions and their text grammar.
//!
//! ```text
//! cyclic(16)  elemab(3,2)  order16(QD8)  dihedral(8)  quasidihedral(32)  dicyclic(16)
//! dp(A, B, ...)  wr(A)  hol(A)  aut(A)  yprod(A, B, a^2, b^2)
//! sd(P, T, action=[[0,1],[1,3]]@7, action=...)   sd(P, T, preset=QD8full)
//! perm(9; (2,9,4,6,3,7,5,8); (4,5)(6,9)(7,8))
//! pres{a,b; a^8=b^2=a^b*a^-3=1; x=3}
//! fam16p(C16, 3, C2, a)   fam16p(C4YQ2, 3, C2, [a,b,c])   fam16p2(C8xC2, 3, ab_b)
//! ```
//!
//! `dihedral`, `quasidihedral` and `dicyclic` take the group order. In the
//! `order16` names D_n has order 2n, Q_n order 4n and QD_k order 2k, so
//! D8, QD8 and Q4 all have order 16.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::MatGF;
use crate::perm::Permutation;
use crate::words::{parse_word, Parameter, Presentation};

/// The fourteen groups of order 16.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order16 {
    C16,
    C8xC2,
    C4xC4,
    C4xC2xC2,
    E16,
    D4xC2,
    Q2xC2,
    C4YQ2,
    /// `(4,4|2,2)`, `(C4 x C2) @ C2`
    G44_22,
    /// `<2,2|4;2>`, `C4 @ C4`
    C4sC4,
    /// `<2,2|2>`, the modular group `a^8=b^2=a^b*a^-5=1`
    M16,
    D8,
    /// `<-2,4|2>`, quasidihedral
    QD8,
    /// `<2,2,4>`, generalized quaternion
    Q4,
}

impl Order16 {
    pub const ALL: [Order16; 14] = [
        Order16::C16,
        Order16::C8xC2,
        Order16::C4xC4,
        Order16::C4xC2xC2,
        Order16::E16,
        Order16::D4xC2,
        Order16::Q2xC2,
        Order16::C4YQ2,
        Order16::G44_22,
        Order16::C4sC4,
        Order16::M16,
        Order16::D8,
        Order16::QD8,
        Order16::Q4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Order16::C16 => "C16",
            Order16::C8xC2 => "C8xC2",
            Order16::C4xC4 => "C4xC4",
            Order16::C4xC2xC2 => "C4xC2xC2",
            Order16::E16 => "E16",
            Order16::D4xC2 => "D4xC2",
            Order16::Q2xC2 => "Q2xC2",
            Order16::C4YQ2 => "C4YQ2",
            Order16::G44_22 => "G44_22",
            Order16::C4sC4 => "C4sC4",
            Order16::M16 => "M16",
            Order16::D8 => "D8",
            Order16::QD8 => "QD8",
            Order16::Q4 => "Q4",
        }
    }

    pub fn from_name(s: &str) -> Option<Order16> {
        Order16::ALL.iter().copied().find(|o| o.name().eq_ignore_ascii_case(s))
    }

    pub fn generators(self) -> &'static [&'static str] {
        match self {
            Order16::C16 => &["a"],
            Order16::C4xC2xC2 | Order16::D4xC2 | Order16::Q2xC2 | Order16::C4YQ2 | Order16::G44_22 => {
                &["a", "b", "c"]
            }
            Order16::E16 => &["a", "b", "c", "d"],
            _ => &["a", "b"],
        }
    }

    pub fn relators(self) -> &'static str {
        match self {
            Order16::C16 => "a^16=1",
            Order16::C8xC2 => "a^8=b^2=(a,b)=1",
            Order16::C4xC4 => "a^4=b^4=(a,b)=1",
            Order16::C4xC2xC2 => "a^4=b^2=c^2=(a,b)=(a,c)=(b,c)=1",
            Order16::E16 => "a^2=b^2=c^2=d^2=(a,b)=(a,c)=(a,d)=(b,c)=(b,d)=(c,d)=1",
            Order16::D4xC2 => "a^4=b^2=a^b*a=c^2=(a,c)=(b,c)=1",
            Order16::Q2xC2 => "a^4=b^4=a^2*b^2=a^b*a=c^2=(a,c)=(b,c)=1",
            Order16::C4YQ2 => "a^2=b^2=c^4=a^b*c^2*a=a^c*a=b^c*b=1",
            Order16::G44_22 => "a^4=b^2=c^2=(a,b)=(b,c)=a^c*a^-1*b=1",
            Order16::C4sC4 => "a^4=b^4=a^b*a=1",
            Order16::M16 => "a^8=b^2=a^b*a^-5=1",
            Order16::D8 => "a^8=b^2=a^b*a=1",
            Order16::QD8 => "a^8=b^2=a^b*a^-3=1",
            Order16::Q4 => "a^8=b^4=a^4*b^-2=a^b*a=1",
        }
    }

    pub fn presentation(self) -> Presentation {
        Presentation::new(self.generators(), self.relators(), &[]).expect("built-in presentation")
    }
}

/// How the acting group moves the normal p-subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    /// One matrix per generator of the acting group. Rows give the images
    /// of the p-generators: row `i` of `M` is the image of generator `i`.
    Matrices(Vec<MatGF>),
    /// A named action resolved against the acting group and the prime.
    Preset(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u32),
    ElemAbelian { p: u32, k: u32 },
    Order16(Order16),
    /// Dihedral group of the given order.
    Dihedral(u32),
    /// Quasidihedral group of the given order (a power of 2, at least 16).
    Quasidihedral(u32),
    /// Dicyclic (generalized quaternion for 2-powers) group of the given order.
    Dicyclic(u32),
    Direct(Vec<GroupSpec>),
    /// `base @ top`, `base` one of `cyclic(p)`, `cyclic(p^2)`, `elemab(p,k)`.
    Semidirect { base: Box<GroupSpec>, top: Box<GroupSpec>, action: Action },
    /// `A wr C2`
    Wreath(Box<GroupSpec>),
    /// `A Y B`, identifying the central elements named by two words.
    Central { left: Box<GroupSpec>, right: Box<GroupSpec>, zl: String, zr: String },
    Holomorph(Box<GroupSpec>),
    Presented(Presentation),
    /// Explicit permutation generators.
    Perms { degree: usize, gens: Vec<Permutation> },
    /// The automorphism group, acting on the elements of the inner group.
    AutOf(Box<GroupSpec>),
    /// `Cp @ T` of order `16p`; `gens` act on `Cp` and the first of them acts
    /// with order `image`.
    Family16p { two: Order16, p: u32, image: u32, gens: Vec<String> },
    /// `(Cp x Cp) @ T` with a named action.
    Family16p2 { two: Order16, p: u32, preset: String },
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let mut p = SpecParser { src: text.as_bytes(), text, pos: 0 };
        let s = p.spec()?;
        p.ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(s)
    }

    /// Canonical text form; `GroupSpec::parse` inverts it.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// The order implied by the description, when it is known without
    /// computing an automorphism group.
    pub fn predicted_order(&self) -> Option<u128> {
        Some(match self {
            GroupSpec::Cyclic(n) => *n as u128,
            GroupSpec::ElemAbelian { p, k } => (*p as u128).pow(*k),
            GroupSpec::Order16(_) => 16,
            GroupSpec::Dihedral(n) | GroupSpec::Quasidihedral(n) | GroupSpec::Dicyclic(n) => *n as u128,
            GroupSpec::Direct(parts) => {
                let mut acc = 1u128;
                for part in parts {
                    acc *= part.predicted_order()?;
                }
                acc
            }
            GroupSpec::Semidirect { base, top, .. } => base.predicted_order()? * top.predicted_order()?,
            GroupSpec::Wreath(b) => {
                let o = b.predicted_order()?;
                o * o * 2
            }
            GroupSpec::Family16p { p, .. } => 16 * *p as u128,
            GroupSpec::Family16p2 { p, .. } => 16 * (*p as u128) * (*p as u128),
            _ => return None,
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic({})", n),
            GroupSpec::ElemAbelian { p, k } => write!(f, "elemab({},{})", p, k),
            GroupSpec::Order16(o) => write!(f, "order16({})", o.name()),
            GroupSpec::Dihedral(n) => write!(f, "dihedral({})", n),
            GroupSpec::Quasidihedral(n) => write!(f, "quasidihedral({})", n),
            GroupSpec::Dicyclic(n) => write!(f, "dicyclic({})", n),
            GroupSpec::Direct(parts) => {
                write!(f, "dp(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", p)?;
                }
                write!(f, ")")
            }
            GroupSpec::Semidirect { base, top, action } => {
                write!(f, "sd({}, {}", base, top)?;
                match action {
                    Action::Preset(name) => write!(f, ", preset={}", name)?,
                    Action::Matrices(ms) => {
                        for m in ms {
                            write!(f, ", action=")?;
                            write_matrix(f, m)?;
                        }
                    }
                }
                write!(f, ")")
            }
            GroupSpec::Wreath(b) => write!(f, "wr({})", b),
            GroupSpec::Central { left, right, zl, zr } => write!(f, "yprod({}, {}, {}, {})", left, right, zl, zr),
            GroupSpec::Holomorph(b) => write!(f, "hol({})", b),
            GroupSpec::AutOf(b) => write!(f, "aut({})", b),
            GroupSpec::Perms { degree, gens } => {
                write!(f, "perm({}", degree)?;
                for g in gens {
                    write!(f, "; {}", g)?;
                }
                write!(f, ")")
            }
            GroupSpec::Presented(pres) => {
                write!(f, "pres{{{}; ", pres.generators.join(","))?;
                for (i, r) in pres.relators.iter().enumerate() {
                    if i > 0 {
                        write!(f, "=")?;
                    }
                    write!(f, "{}", r.display(&pres.generators))?;
                }
                write!(f, "=1")?;
                if !pres.params.is_empty() {
                    write!(f, "; ")?;
                    for (i, p) in pres.params.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{}={}", p.name, p.value)?;
                    }
                }
                write!(f, "}}")
            }
            GroupSpec::Family16p { two, p, image, gens } => {
                write!(f, "fam16p({}, {}, C{}, ", two.name(), p, image)?;
                if gens.len() == 1 {
                    write!(f, "{})", gens[0])
                } else {
                    write!(f, "[{}])", gens.join(","))
                }
            }
            GroupSpec::Family16p2 { two, p, preset } => write!(f, "fam16p2({}, {}, {})", two.name(), p, preset),
        }
    }
}

fn write_matrix(f: &mut fmt::Formatter<'_>, m: &MatGF) -> fmt::Result {
    write!(f, "[")?;
    for i in 0..m.dim() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "[")?;
        for j in 0..m.dim() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", m.get(i, j))?;
        }
        write!(f, "]")?;
    }
    write!(f, "]@{}", m.modulus())
}

struct SpecParser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
}

impl<'a> SpecParser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&alloc::format!("expected `{}`", c as char)))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a name"));
        }
        Ok(&self.text[start..self.pos])
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        if self.pos < self.src.len() && self.src[self.pos] == b'-' {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.text[start..self.pos].parse().map_err(|_| Error::Parse { pos: start, msg: "expected an integer".into() })
    }

    fn uint(&mut self) -> Result<u32> {
        let start = self.pos;
        let v = self.int()?;
        u32::try_from(v).map_err(|_| Error::Parse { pos: start, msg: "expected a non-negative integer".into() })
    }

    /// Raw text up to the next top-level `,` or `)`.
    fn raw_arg(&mut self) -> Result<&'a str> {
        self.ws();
        let start = self.pos;
        let mut depth = 0i32;
        while self.pos < self.src.len() {
            match self.src[self.pos] {
                b'(' | b'[' | b'{' => depth += 1,
                b')' | b']' | b'}' if depth == 0 => break,
                b')' | b']' | b'}' => depth -= 1,
                b',' if depth == 0 => break,
                _ => {}
            }
            self.pos += 1;
        }
        let s = self.text[start..self.pos].trim();
        if s.is_empty() {
            return Err(self.err("empty argument"));
        }
        Ok(s)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        self.ws();
        let start = self.pos;
        let name = self.ident()?;
        if name == "pres" {
            return self.pres();
        }
        self.expect(b'(')?;
        let s = match name {
            "cyclic" => GroupSpec::Cyclic(self.positive()?),
            "elemab" => {
                let p = self.uint()?;
                self.expect(b',')?;
                let k = self.uint()?;
                GroupSpec::ElemAbelian { p, k }
            }
            "order16" => {
                let n = self.ident()?;
                GroupSpec::Order16(Order16::from_name(n).ok_or_else(|| Error::UnknownSymbol(n.to_string()))?)
            }
            "dihedral" => GroupSpec::Dihedral(self.positive()?),
            "quasidihedral" => GroupSpec::Quasidihedral(self.positive()?),
            "dicyclic" => GroupSpec::Dicyclic(self.positive()?),
            "dp" => {
                let mut parts = alloc::vec![self.spec()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    parts.push(self.spec()?);
                }
                GroupSpec::Direct(parts)
            }
            "wr" => GroupSpec::Wreath(Box::new(self.spec()?)),
            "hol" => GroupSpec::Holomorph(Box::new(self.spec()?)),
            "aut" => GroupSpec::AutOf(Box::new(self.spec()?)),
            "yprod" => {
                let left = Box::new(self.spec()?);
                self.expect(b',')?;
                let right = Box::new(self.spec()?);
                self.expect(b',')?;
                let zl = self.raw_arg()?.to_string();
                self.expect(b',')?;
                let zr = self.raw_arg()?.to_string();
                GroupSpec::Central { left, right, zl, zr }
            }
            "sd" => self.semidirect()?,
            "perm" => self.perms()?,
            "fam16p" => {
                let two = self.order16_name()?;
                self.expect(b',')?;
                let p = self.uint()?;
                self.expect(b',')?;
                let img = self.ident()?;
                let image = img
                    .strip_prefix('C')
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| self.err("image must be C2, C4, C8 or C16"))?;
                self.expect(b',')?;
                let gens = if self.peek() == Some(b'[') {
                    self.pos += 1;
                    let mut g = alloc::vec![self.ident()?.to_string()];
                    while self.peek() == Some(b',') {
                        self.pos += 1;
                        g.push(self.ident()?.to_string());
                    }
                    self.expect(b']')?;
                    g
                } else {
                    alloc::vec![self.ident()?.to_string()]
                };
                GroupSpec::Family16p { two, p, image, gens }
            }
            "fam16p2" => {
                let two = self.order16_name()?;
                self.expect(b',')?;
                let p = self.uint()?;
                self.expect(b',')?;
                let preset = self.raw_arg()?.to_string();
                GroupSpec::Family16p2 { two, p, preset }
            }
            other => return Err(Error::Parse { pos: start, msg: alloc::format!("unknown constructor `{}`", other) }),
        };
        self.expect(b')')?;
        Ok(s)
    }

    fn positive(&mut self) -> Result<u32> {
        let v = self.uint()?;
        if v == 0 {
            return Err(self.err("expected a positive integer"));
        }
        Ok(v)
    }

    fn order16_name(&mut self) -> Result<Order16> {
        let n = self.ident()?;
        Order16::from_name(n).ok_or_else(|| Error::UnknownSymbol(n.to_string()))
    }

    fn semidirect(&mut self) -> Result<GroupSpec> {
        let base = Box::new(self.spec()?);
        self.expect(b',')?;
        let top = Box::new(self.spec()?);
        let mut mats = Vec::new();
        let mut preset = None;
        while self.peek() == Some(b',') {
            self.pos += 1;
            let key = self.ident()?;
            self.expect(b'=')?;
            match key {
                "action" => mats.push(self.matrix()?),
                "preset" => preset = Some(self.ident()?.to_string()),
                _ => return Err(self.err("expected `action=` or `preset=`")),
            }
        }
        let action = match (preset, mats.is_empty()) {
            (Some(p), true) => Action::Preset(p),
            (None, false) => Action::Matrices(mats),
            (None, true) => return Err(self.err("missing action")),
            (Some(_), false) => return Err(self.err("give either matrices or a preset")),
        };
        Ok(GroupSpec::Semidirect { base, top, action })
    }

    fn matrix(&mut self) -> Result<MatGF> {
        let start = self.pos;
        self.expect(b'[')?;
        let mut rows: Vec<Vec<i64>> = Vec::new();
        loop {
            self.expect(b'[')?;
            let mut row = alloc::vec![self.int()?];
            while self.peek() == Some(b',') {
                self.pos += 1;
                row.push(self.int()?);
            }
            self.expect(b']')?;
            rows.push(row);
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                break;
            }
        }
        self.expect(b']')?;
        self.expect(b'@')?;
        let m = self.uint()?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse { pos: start, msg: "matrix must be square".into() });
        }
        let flat: Vec<i64> = rows.into_iter().flatten().collect();
        MatGF::new(m, n, &flat).map_err(|e| Error::Parse { pos: start, msg: e.to_string() })
    }

    fn perms(&mut self) -> Result<GroupSpec> {
        let degree = self.positive()? as usize;
        let mut gens = Vec::new();
        while self.peek() == Some(b';') {
            self.pos += 1;
            self.ws();
            let start = self.pos;
            while self.pos < self.src.len() && !matches!(self.src[self.pos], b';' | b')') {
                self.pos += 1;
            }
            // `(` and `)` inside cycles: scan to the matching end of the generator
            let mut end = start;
            let mut depth = 0i32;
            while end < self.src.len() {
                match self.src[end] {
                    b'(' => depth += 1,
                    b')' if depth == 0 => break,
                    b')' => depth -= 1,
                    b';' if depth == 0 => break,
                    _ => {}
                }
                end += 1;
            }
            self.pos = end;
            let text = self.text[start..end].trim();
            let g = if text == "()" {
                Permutation::identity(degree)
            } else {
                Permutation::parse_cycles(text, degree).map_err(|e| shift(e, start))?
            };
            if g.degree() != degree {
                return Err(Error::Parse { pos: start, msg: "point outside the degree".into() });
            }
            gens.push(g);
        }
        Ok(GroupSpec::Perms { degree, gens })
    }

    fn pres(&mut self) -> Result<GroupSpec> {
        self.expect(b'{')?;
        let start = self.pos;
        let mut depth = 0i32;
        let mut end = start;
        while end < self.src.len() {
            match self.src[end] {
                b'{' => depth += 1,
                b'}' if depth == 0 => break,
                b'}' => depth -= 1,
                _ => {}
            }
            end += 1;
        }
        if end >= self.src.len() {
            return Err(self.err("unterminated `pres{`"));
        }
        let body = &self.text[start..end];
        self.pos = end + 1;
        let parts: Vec<&str> = body.split(';').collect();
        if parts.len() < 2 || parts.len() > 3 {
            return Err(Error::Parse { pos: start, msg: "expected `gens; relators[; params]`".into() });
        }
        let gens: Vec<String> =
            parts[0].split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
        let mut params = Vec::new();
        if parts.len() == 3 {
            for item in parts[2].split(',').filter(|s| !s.trim().is_empty()) {
                let (n, v) = item
                    .split_once('=')
                    .ok_or_else(|| Error::Parse { pos: start, msg: "expected `name=value`".into() })?;
                let value: i64 =
                    v.trim().parse().map_err(|_| Error::Parse { pos: start, msg: "bad parameter value".into() })?;
                params.push(Parameter { name: n.trim().to_string(), value, constraint: None });
            }
        }
        let relators = crate::words::parse_relators(parts[1], &gens, &params).map_err(|e| shift(e, start))?;
        Ok(GroupSpec::Presented(Presentation { generators: gens, relators, params }))
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

/// Default generator names `a, b, c, ...` for a group with `k` generators.
pub fn default_names(k: usize) -> Vec<String> {
    (0..k)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                alloc::format!("g{}", i)
            }
        })
        .collect()
}

/// Parses a word in the default generator names.
pub fn parse_default_word(text: &str, k: usize) -> Result<crate::words::Word> {
    parse_word(text, &default_names(k), &[])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(s: &str) {
        let spec = GroupSpec::parse(s).unwrap();
        let printed = spec.to_text();
        let again = GroupSpec::parse(&printed).unwrap();
        assert_eq!(spec, again, "{}", printed);
        assert_eq!(printed, again.to_text());
    }

    #[test]
    fn atoms_parse() {
        assert_eq!(GroupSpec::parse("cyclic(16)").unwrap(), GroupSpec::Cyclic(16));
        assert_eq!(
            GroupSpec::parse("hol(cyclic(5))").unwrap(),
            GroupSpec::Holomorph(Box::new(GroupSpec::Cyclic(5)))
        );
        assert_eq!(GroupSpec::parse(" order16( QD8 ) ").unwrap(), GroupSpec::Order16(Order16::QD8));
    }

    #[test]
    fn round_trips() {
        round_trip("sd(elemab(3,2), order16(QD8), preset=QD8full)");
        round_trip("sd(elemab(7,2), order16(C16), action=[[0,1],[1,3]]@7)");
        round_trip("sd(cyclic(3), cyclic(16), action=[[2]]@3)");
        round_trip("dp(hol(cyclic(17)), cyclic(16))");
        round_trip("yprod(cyclic(4), dicyclic(8), a^2, a^2)");
        round_trip("perm(9; (2,9,4,6,3,7,5,8); (4,5)(6,9)(7,8))");
        round_trip("pres{a,b; a^8=b^2=a^b*a^-3=1}");
        round_trip("pres{a,b; a^p=b^(p-1)=a^b*a^x; p=5,x=2}");
        round_trip("fam16p(C4YQ2, 3, C2, [a,b,c])");
        round_trip("fam16p2(C8xC2, 3, ab_b)");
        round_trip("aut(wr(elemab(2,2)))");
    }

    #[test]
    fn errors_carry_positions() {
        match GroupSpec::parse("dp(cyclic(4), frob(3))") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 14),
            other => panic!("{:?}", other),
        }
        assert!(matches!(GroupSpec::parse("order16(X9)"), Err(Error::UnknownSymbol(_))));
        assert!(GroupSpec::parse("sd(cyclic(3), cyclic(2), action=[[1,2],[3]]@3)").is_err());
    }

    #[test]
    fn predicted_orders() {
        let s = GroupSpec::parse("wr(dp(hol(cyclic(3)), elemab(2,2)))").unwrap();
        assert_eq!(s.predicted_order(), None);
        let s = GroupSpec::parse("wr(elemab(2,2))").unwrap();
        assert_eq!(s.predicted_order(), Some(32));
    }
}
