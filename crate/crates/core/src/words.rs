//! Words over named generators, relator syntax, and presentations.
//!
//! Relator syntax: `*` is product (juxtaposition also multiplies), `x^n` is a
//! power, `x^g` with a generator `g` is conjugation `g^-1 x g`, `(x,y)` is the
//! commutator `x^-1 y^-1 x y`, and `w1=w2=...=1` lists every `wi` as a relator.
//! Exponents may use parameters and arithmetic inside `{}` or `()`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A reduced word: adjacent letters differ, exponents are non-zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<(u16, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn gen(g: u16) -> Self {
        Word { letters: alloc::vec![(g, 1)] }
    }

    pub fn from_letters(letters: &[(u16, i64)]) -> Self {
        let mut w = Word::identity();
        for &(g, e) in letters {
            w.push(g, e);
        }
        w
    }

    pub fn letters(&self) -> &[(u16, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, g: u16, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((g, e));
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        let mut w = Word::identity();
        for &(g, e) in self.letters.iter().rev() {
            w.push(g, -e);
        }
        w
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..e.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `by^-1 self by`
    pub fn conjugate(&self, by: &Word) -> Word {
        by.inverse().mul(self).mul(by)
    }

    pub fn commutator(&self, other: &Word) -> Word {
        self.inverse().mul(&other.inverse()).mul(self).mul(other)
    }

    /// Letters expanded to single steps `(generator, +1 | -1)`.
    pub fn syllables(&self) -> impl Iterator<Item = (u16, i64)> + '_ {
        self.letters
            .iter()
            .flat_map(|&(g, e)| core::iter::repeat((g, e.signum())).take(e.unsigned_abs() as usize))
    }

    pub fn length(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn max_generator(&self) -> Option<u16> {
        self.letters.iter().map(|l| l.0).max()
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }

    /// Evaluates with caller-supplied group operations.
    pub fn evaluate<T, M, P>(&self, images: &[T], identity: T, mul: M, pow: P) -> T
    where
        M: Fn(&T, &T) -> T,
        P: Fn(&T, i64) -> T,
    {
        let mut acc = identity;
        for &(g, e) in &self.letters {
            acc = mul(&acc, &pow(&images[g as usize], e));
        }
        acc
    }

    pub fn evaluate_perm(&self, images: &[Permutation], degree: usize) -> Permutation {
        self.evaluate(images, Permutation::identity(degree), |a, b| a.compose(b), |a, e| a.pow(e))
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.word.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            let name = self.names.get(g as usize).map(|s| s.as_str()).unwrap_or("?");
            if e == 1 {
                write!(f, "{}", name)?;
            } else {
                write!(f, "{}^{}", name, e)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parameter {
    pub name: String,
    pub value: i64,
    /// Symbolic constraint the value was chosen to satisfy, e.g. `2*x^2 = 1 mod p`.
    pub constraint: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub params: Vec<Parameter>,
}

impl Presentation {
    pub fn new(generators: &[&str], relators: &str, params: &[(&str, i64)]) -> Result<Self> {
        let generators: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let params: Vec<Parameter> = params
            .iter()
            .map(|(n, v)| Parameter { name: n.to_string(), value: *v, constraint: None })
            .collect();
        let relators = parse_relators(relators, &generators, &params)?;
        Ok(Presentation { generators, relators, params })
    }

    /// Parses the text format:
    ///
    /// ```text
    /// gens: a, b
    /// params: p = 3, x = 1 [x^(p-1) = 1 mod p]
    /// rels: a^8=b^2=a^b*a^5=1
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut generators = Vec::new();
        let mut params = Vec::new();
        let mut rel_lines: Vec<(usize, &str)> = Vec::new();
        let mut offset = 0;
        for line in text.lines() {
            let start = offset;
            offset += line.len() + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, rest) = trimmed
                .split_once(':')
                .ok_or_else(|| Error::Parse { pos: start, msg: "expected `key:`".into() })?;
            match key.trim() {
                "gens" => {
                    generators = split_names(rest);
                }
                "params" => params = parse_params(rest, start)?,
                "rels" => rel_lines.push((start, rest)),
                other => {
                    return Err(Error::Parse { pos: start, msg: alloc::format!("unknown section `{}`", other) })
                }
            }
        }
        let mut relators = Vec::new();
        for (start, line) in rel_lines {
            let rs = parse_relators(line, &generators, &params)
                .map_err(|e| shift_pos(e, start))?;
            relators.extend(rs);
        }
        Ok(Presentation { generators, relators, params })
    }

    pub fn param(&self, name: &str) -> Option<i64> {
        self.params.iter().find(|p| p.name == name).map(|p| p.value)
    }

    /// Indices of relators that do not evaluate to the identity.
    pub fn check_relators(&self, images: &[Permutation]) -> Vec<usize> {
        let degree = images.first().map(|p| p.degree()).unwrap_or(0);
        self.relators
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.evaluate_perm(images, degree).is_identity())
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators.join(", "))?;
        if !self.params.is_empty() {
            write!(f, "params: ")?;
            for (i, p) in self.params.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{} = {}", p.name, p.value)?;
                if let Some(c) = &p.constraint {
                    write!(f, " [{}]", c)?;
                }
            }
            writeln!(f)?;
        }
        write!(f, "rels: ")?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, "=")?;
            }
            write!(f, "{}", r.display(&self.generators))?;
        }
        writeln!(f, "=1")
    }
}

fn shift_pos(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

fn split_names(s: &str) -> Vec<String> {
    s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()
}

fn parse_params(s: &str, base: usize) -> Result<Vec<Parameter>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut items = Vec::new();
    for ch in s.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            items.push(core::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        items.push(cur);
    }
    for item in items {
        let (body, constraint) = match item.find('[') {
            Some(i) => {
                let c = item[i + 1..].trim_end().trim_end_matches(']').trim().to_string();
                (&item[..i], Some(c))
            }
            None => (item.as_str(), None),
        };
        let (name, value) = body
            .split_once('=')
            .ok_or_else(|| Error::Parse { pos: base, msg: "expected `name = value`".into() })?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| Error::Parse { pos: base, msg: alloc::format!("bad value for {}", name.trim()) })?;
        out.push(Parameter { name: name.trim().to_string(), value, constraint });
    }
    Ok(out)
}

/// Parses a relator chain (or several, separated by top-level `,` or `;`).
pub fn parse_relators(text: &str, generators: &[String], params: &[Parameter]) -> Result<Vec<Word>> {
    let mut p = Parser::new(text, generators, params);
    let mut out = Vec::new();
    p.skip_ws();
    if p.at_end() {
        return Ok(out);
    }
    loop {
        let w = p.word()?;
        if !w.is_identity() {
            out.push(w);
        }
        p.skip_ws();
        match p.peek() {
            Some('=') | Some(',') | Some(';') => {
                p.bump();
                p.skip_ws();
                if p.at_end() {
                    break;
                }
            }
            None => break,
            Some(c) => return Err(p.err(&alloc::format!("unexpected `{}`", c))),
        }
    }
    Ok(out)
}

/// Parses a single word.
pub fn parse_word(text: &str, generators: &[String], params: &[Parameter]) -> Result<Word> {
    let mut p = Parser::new(text, generators, params);
    let w = p.word()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err("trailing input"));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: &'a [String],
    params: &'a [Parameter],
}

enum Exponent {
    Power(i64),
    Conj(Word),
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, gens: &'a [String], params: &'a [Parameter]) -> Self {
        Parser { src: text.as_bytes(), pos: 0, gens, params }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).map(|&b| b as char)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.err(&alloc::format!("expected `{}`", c)))
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
            return None;
        }
        self.bump();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '_') {
            self.bump();
        }
        Some(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn gen_index(&self, name: &str) -> Option<u16> {
        self.gens.iter().position(|g| g == name).map(|i| i as u16)
    }

    fn param_value(&self, name: &str) -> Option<i64> {
        self.params.iter().find(|p| p.name == name).map(|p| p.value)
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let f = self.factor()?;
                    w = w.mul(&f);
                }
                Some(c) if c.is_ascii_alphabetic() || c == '(' => {
                    let f = self.factor()?;
                    w = w.mul(&f);
                }
                _ => return Ok(w),
            }
        }
    }

    fn factor(&mut self) -> Result<Word> {
        let mut w = self.primary()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('^') {
                return Ok(w);
            }
            self.bump();
            match self.exponent()? {
                Exponent::Power(e) => w = w.pow(e),
                Exponent::Conj(by) => w = w.conjugate(&by),
            }
        }
    }

    fn primary(&mut self) -> Result<Word> {
        self.skip_ws();
        match self.peek() {
            Some('1') => {
                self.bump();
                Ok(Word::identity())
            }
            Some('(') => {
                self.bump();
                let a = self.word()?;
                self.skip_ws();
                if self.peek() == Some(',') {
                    self.bump();
                    let b = self.word()?;
                    self.expect(')')?;
                    Ok(a.commutator(&b))
                } else {
                    self.expect(')')?;
                    Ok(a)
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident().unwrap();
                match self.gen_index(&name) {
                    Some(g) => Ok(Word::gen(g)),
                    None => Err(Error::UnknownSymbol(name)),
                }
            }
            _ => Err(self.err("expected generator, `1` or `(`")),
        }
    }

    fn exponent(&mut self) -> Result<Exponent> {
        self.skip_ws();
        match self.peek() {
            Some('{') => {
                self.bump();
                let e = self.bracketed_exponent('}')?;
                Ok(e)
            }
            Some('(') => {
                self.bump();
                self.bracketed_exponent(')')
            }
            Some('-') => {
                self.bump();
                match self.exponent()? {
                    Exponent::Power(e) => Ok(Exponent::Power(-e)),
                    Exponent::Conj(_) => Err(self.err("cannot negate a conjugating word")),
                }
            }
            Some(c) if c.is_ascii_digit() => Ok(Exponent::Power(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident().unwrap();
                if let Some(g) = self.gen_index(&name) {
                    Ok(Exponent::Conj(Word::gen(g)))
                } else if let Some(v) = self.param_value(&name) {
                    Ok(Exponent::Power(v))
                } else {
                    Err(Error::UnknownSymbol(name))
                }
            }
            _ => Err(self.err("expected exponent")),
        }
    }

    /// Braced exponent: arithmetic over parameters, or a conjugating word.
    fn bracketed_exponent(&mut self, close: char) -> Result<Exponent> {
        let save = self.pos;
        if let Ok(v) = self.expr() {
            self.skip_ws();
            if self.peek() == Some(close) {
                self.bump();
                return Ok(Exponent::Power(v));
            }
        }
        self.pos = save;
        let w = self.word()?;
        self.expect(close)?;
        Ok(Exponent::Conj(w))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        core::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().map_err(|_| self.err("integer overflow"))
    }

    fn expr(&mut self) -> Result<i64> {
        let mut v = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    v = v.checked_add(self.term()?).ok_or_else(|| self.err("overflow"))?;
                }
                Some('-') => {
                    self.bump();
                    v = v.checked_sub(self.term()?).ok_or_else(|| self.err("overflow"))?;
                }
                _ => return Ok(v),
            }
        }
    }

    fn term(&mut self) -> Result<i64> {
        let mut v = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    v = v.checked_mul(self.unary()?).ok_or_else(|| self.err("overflow"))?;
                }
                Some('/') => {
                    self.bump();
                    let d = self.unary()?;
                    if d == 0 {
                        return Err(self.err("division by zero"));
                    }
                    v /= d;
                }
                _ => return Ok(v),
            }
        }
    }

    fn unary(&mut self) -> Result<i64> {
        self.skip_ws();
        if self.peek() == Some('-') {
            self.bump();
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            let e = self.unary()?;
            if e < 0 {
                return Err(self.err("negative integer power"));
            }
            return base.checked_pow(e as u32).ok_or_else(|| self.err("overflow"));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<i64> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => self.integer(),
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident().unwrap();
                self.param_value(&name).ok_or(Error::UnknownSymbol(name))
            }
            _ => Err(self.err("expected number or parameter")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn symbol_exponent_is_conjugation_integer_is_power() {
        let g = names(&["a", "b"]);
        let w = parse_word("a^b", &g, &[]).unwrap();
        assert_eq!(w.letters(), &[(1, -1), (0, 1), (1, 1)]);
        let w = parse_word("a^2", &g, &[]).unwrap();
        assert_eq!(w.letters(), &[(0, 2)]);
    }

    #[test]
    fn commutator_and_chain() {
        let g = names(&["a", "b"]);
        let rs = parse_relators("a^8=b^2=(a,b)=1", &g, &[]).unwrap();
        assert_eq!(rs.len(), 3);
        assert_eq!(rs[2].letters(), &[(0, -1), (1, -1), (0, 1), (1, 1)]);
    }

    #[test]
    fn parameter_exponents() {
        let g = names(&["a", "b", "c"]);
        let params = alloc::vec![
            Parameter { name: "x".into(), value: 3, constraint: None },
            Parameter { name: "p".into(), value: 7, constraint: None },
        ];
        let w = parse_word("c^{-x}*a^{(p-1)/2}*b^{x^2}", &g, &params).unwrap();
        assert_eq!(w.letters(), &[(2, -3), (0, 3), (1, 9)]);
        let w = parse_word("c^(-x)", &g, &params).unwrap();
        assert_eq!(w.letters(), &[(2, -3)]);
        assert!(matches!(parse_word("a^y", &g, &params), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn nested_commutator() {
        let g = names(&["a", "c"]);
        let w = parse_word("((a,c),a)", &g, &[]).unwrap();
        let ac = Word::gen(0).commutator(&Word::gen(1));
        assert_eq!(w, ac.commutator(&Word::gen(0)));
    }

    #[test]
    fn text_format_round_trip() {
        let text = "gens: a, b\nparams: x = 3 [x^2 = 2 mod 7]\nrels: a^8=b^2=a^b*a^{-x}=1\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.relators.len(), 3);
        assert_eq!(p.params[0].constraint.as_deref(), Some("x^2 = 2 mod 7"));
        let printed = alloc::format!("{}", p);
        let q = Presentation::parse(&printed).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn check_relators_on_quaternion_images() {
        let p = Presentation::new(&["a", "b"], "a^4=a^2*b^-2=a^b*a=1", &[]).unwrap();
        let a = Permutation::parse_cycles("(1,2,3,4)(5,6,7,8)", 8).unwrap();
        let b = Permutation::parse_cycles("(1,5,3,7)(2,8,4,6)", 8).unwrap();
        assert!(p.check_relators(&[a.clone(), b.clone()]).is_empty());
        assert_eq!(p.check_relators(&[a.clone(), a]), alloc::vec![2]);
    }
}
