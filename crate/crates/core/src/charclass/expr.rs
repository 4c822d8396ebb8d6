//! Bundle expressions and their Chern roots.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::CharError;
use crate::corealg::{vars_of, MultiPoly, Vars};

/// Roots of a single expression may not exceed this many.
pub const ROOT_LIMIT: usize = 20_000;

/// A named bundle of a declared rank, written `V:2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub rank: usize,
}

impl Generator {
    pub fn new(name: &str, rank: usize) -> Self {
        Generator {
            name: name.to_string(),
            rank,
        }
    }

    pub fn parse(s: &str) -> Result<Self, CharError> {
        let (name, rank) = s
            .split_once(':')
            .ok_or_else(|| CharError::Parse(format!("generator {s:?} must look like NAME:RANK")))?;
        let name = name.trim();
        if !is_ident(name) {
            return Err(CharError::Parse(format!("bad generator name {name:?}")));
        }
        let rank = rank
            .trim()
            .parse()
            .map_err(|_| CharError::Parse(format!("bad rank in {s:?}")))?;
        Ok(Generator::new(name, rank))
    }
}

fn is_ident(s: &str) -> bool {
    let mut it = s.chars();
    it.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') && it.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BundleExpr {
    Gen(String),
    /// The trivial bundle of the given rank.
    Trivial(usize),
    Dual(Box<BundleExpr>),
    Det(Box<BundleExpr>),
    Sum(Box<BundleExpr>, Box<BundleExpr>),
    Tensor(Box<BundleExpr>, Box<BundleExpr>),
    Sym(usize, Box<BundleExpr>),
    Wedge(usize, Box<BundleExpr>),
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleExpr::Gen(n) => write!(f, "{n}"),
            BundleExpr::Trivial(r) => write!(f, "{r}"),
            BundleExpr::Dual(e) => write!(f, "dual({e})"),
            BundleExpr::Det(e) => write!(f, "det({e})"),
            BundleExpr::Sum(a, b) => write!(f, "{a} + {b}"),
            BundleExpr::Tensor(a, b) => {
                let wrap = |e: &BundleExpr| match e {
                    BundleExpr::Sum(..) => format!("({e})"),
                    _ => e.to_string(),
                };
                write!(f, "{} * {}", wrap(a), wrap(b))
            }
            BundleExpr::Sym(m, e) => write!(f, "sym({m}, {e})"),
            BundleExpr::Wedge(m, e) => write!(f, "wedge({m}, {e})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(usize),
    LParen,
    RParen,
    Comma,
    Plus,
    Star,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, CharError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '(' | ')' | ',' | '+' | '*' => {
                out.push(match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '+' => Tok::Plus,
                    _ => Tok::Star,
                });
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let txt: String = chars[start..i].iter().collect();
                out.push(Tok::Num(txt.parse().map_err(|_| CharError::Parse(format!("number {txt} too large")))?));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            _ => return Err(CharError::Parse(format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), CharError> {
        match self.next() {
            Some(ref x) if *x == t => Ok(()),
            other => Err(CharError::Parse(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn sum(&mut self) -> Result<BundleExpr, CharError> {
        let mut e = self.product()?;
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            e = BundleExpr::Sum(Box::new(e), Box::new(self.product()?));
        }
        Ok(e)
    }

    fn product(&mut self) -> Result<BundleExpr, CharError> {
        let mut e = self.atom()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            e = BundleExpr::Tensor(Box::new(e), Box::new(self.atom()?));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<BundleExpr, CharError> {
        match self.next() {
            Some(Tok::Num(r)) => Ok(BundleExpr::Trivial(r)),
            Some(Tok::LParen) => {
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                if self.peek() != Some(&Tok::LParen) {
                    return Ok(BundleExpr::Gen(name));
                }
                self.pos += 1;
                let e = match name.as_str() {
                    "sym" | "wedge" => {
                        let m = match self.next() {
                            Some(Tok::Num(m)) => m,
                            other => return Err(CharError::Parse(format!("{name} needs a degree, found {other:?}"))),
                        };
                        self.expect(Tok::Comma)?;
                        let inner = Box::new(self.sum()?);
                        if name == "sym" {
                            BundleExpr::Sym(m, inner)
                        } else {
                            BundleExpr::Wedge(m, inner)
                        }
                    }
                    "dual" => BundleExpr::Dual(Box::new(self.sum()?)),
                    "det" => BundleExpr::Det(Box::new(self.sum()?)),
                    "hom" => {
                        let a = self.sum()?;
                        self.expect(Tok::Comma)?;
                        let b = self.sum()?;
                        BundleExpr::Tensor(Box::new(BundleExpr::Dual(Box::new(a))), Box::new(b))
                    }
                    _ => return Err(CharError::Parse(format!("unknown operator {name}"))),
                };
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            other => Err(CharError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl BundleExpr {
    pub fn parse(s: &str) -> Result<Self, CharError> {
        let mut p = Parser {
            toks: tokenize(s)?,
            pos: 0,
        };
        let e = p.sum()?;
        if p.pos != p.toks.len() {
            return Err(CharError::Parse(format!("trailing input after {e}")));
        }
        Ok(e)
    }

    pub fn gen(name: &str) -> Self {
        BundleExpr::Gen(name.to_string())
    }

    pub fn dual(self) -> Self {
        BundleExpr::Dual(Box::new(self))
    }

    pub fn det(self) -> Self {
        BundleExpr::Det(Box::new(self))
    }

    pub fn sym(self, m: usize) -> Self {
        BundleExpr::Sym(m, Box::new(self))
    }

    pub fn wedge(self, m: usize) -> Self {
        BundleExpr::Wedge(m, Box::new(self))
    }

    pub fn plus(self, other: Self) -> Self {
        BundleExpr::Sum(Box::new(self), Box::new(other))
    }

    pub fn tensor(self, other: Self) -> Self {
        BundleExpr::Tensor(Box::new(self), Box::new(other))
    }
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let mut acc: usize = 1;
    for i in 0..k.min(n - k) {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Declared generators: the root variables are allotted block by block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
    root_vars: Vars,
}

impl GeneratorSet {
    pub fn new(gens: Vec<Generator>) -> Result<Self, CharError> {
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].iter().any(|h| h.name == g.name) {
                return Err(CharError::Parse(format!("generator {} declared twice", g.name)));
            }
        }
        let total: usize = gens.iter().map(|g| g.rank).sum();
        let names: Vec<String> = if total <= 26 {
            (0..total).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        } else {
            (1..=total).map(|i| format!("r{i}")).collect()
        };
        Ok(GeneratorSet {
            gens,
            root_vars: vars_of(&names),
        })
    }

    pub fn parse(specs: &[&str]) -> Result<Self, CharError> {
        Self::new(specs.iter().map(|s| Generator::parse(s)).collect::<Result<_, _>>()?)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn root_vars(&self) -> &Vars {
        &self.root_vars
    }

    /// Root-variable indices of each generator.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.gens
            .iter()
            .map(|g| {
                let r = start..start + g.rank;
                start += g.rank;
                r
            })
            .collect()
    }

    fn find(&self, name: &str) -> Result<usize, CharError> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| CharError::UnknownGenerator(name.to_string()))
    }

    pub fn rank(&self, e: &BundleExpr) -> Result<usize, CharError> {
        let too_big = || CharError::SizeLimit(format!("rank of {e} overflows"));
        Ok(match e {
            BundleExpr::Gen(n) => self.gens[self.find(n)?].rank,
            BundleExpr::Trivial(r) => *r,
            BundleExpr::Dual(x) => self.rank(x)?,
            BundleExpr::Det(_) => 1,
            BundleExpr::Sum(a, b) => self.rank(a)?.checked_add(self.rank(b)?).ok_or_else(too_big)?,
            BundleExpr::Tensor(a, b) => self.rank(a)?.checked_mul(self.rank(b)?).ok_or_else(too_big)?,
            BundleExpr::Sym(m, x) => {
                let n = self.rank(x)?;
                if n == 0 {
                    usize::from(*m == 0)
                } else {
                    binomial(n + m - 1, *m).ok_or_else(too_big)?
                }
            }
            BundleExpr::Wedge(m, x) => binomial(self.rank(x)?, *m).ok_or_else(too_big)?,
        })
    }

    pub fn chern_roots(&self, e: &BundleExpr) -> Result<RootMultiset, CharError> {
        let rank = self.rank(e)?;
        if rank > ROOT_LIMIT {
            return Err(CharError::SizeLimit(format!("{e} has rank {rank} > {ROOT_LIMIT}")));
        }
        let mut roots = self.roots(e)?;
        roots.sort();
        Ok(RootMultiset {
            vars: self.root_vars.clone(),
            roots,
        })
    }

    fn roots(&self, e: &BundleExpr) -> Result<Vec<Vec<i64>>, CharError> {
        let n = self.root_vars.len();
        let add = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
        Ok(match e {
            BundleExpr::Gen(name) => {
                let block = self.blocks()[self.find(name)?].clone();
                block
                    .map(|i| {
                        let mut v = vec![0; n];
                        v[i] = 1;
                        v
                    })
                    .collect()
            }
            BundleExpr::Trivial(r) => vec![vec![0; n]; *r],
            BundleExpr::Dual(x) => self
                .roots(x)?
                .into_iter()
                .map(|v| v.into_iter().map(|c| -c).collect())
                .collect(),
            BundleExpr::Det(x) => vec![self.roots(x)?.iter().fold(vec![0; n], |acc, v| add(&acc, v))],
            BundleExpr::Sum(a, b) => {
                let mut r = self.roots(a)?;
                r.extend(self.roots(b)?);
                r
            }
            BundleExpr::Tensor(a, b) => {
                let rb = self.roots(b)?;
                self.roots(a)?
                    .iter()
                    .flat_map(|x| rb.iter().map(|y| add(x, y)))
                    .collect()
            }
            BundleExpr::Sym(m, x) => {
                let r = self.roots(x)?;
                let mut out = Vec::new();
                multisets(&r, *m, 0, vec![0; n], &mut out);
                out
            }
            BundleExpr::Wedge(m, x) => {
                let r = self.roots(x)?;
                if *m > r.len() {
                    return Err(CharError::WedgeTooLarge { m: *m, rank: r.len() });
                }
                let mut out = Vec::new();
                subsets(&r, *m, 0, vec![0; n], &mut out);
                out
            }
        })
    }
}

fn multisets(r: &[Vec<i64>], m: usize, from: usize, acc: Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if m == 0 {
        out.push(acc);
        return;
    }
    for i in from..r.len() {
        let next = acc.iter().zip(&r[i]).map(|(a, b)| a + b).collect();
        multisets(r, m - 1, i, next, out);
    }
}

fn subsets(r: &[Vec<i64>], m: usize, from: usize, acc: Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if m == 0 {
        out.push(acc);
        return;
    }
    for i in from..r.len() {
        let next = acc.iter().zip(&r[i]).map(|(a, b)| a + b).collect();
        subsets(r, m - 1, i + 1, next, out);
    }
}

/// Linear forms in the root variables, one per line-bundle summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootMultiset {
    pub vars: Vars,
    pub roots: Vec<Vec<i64>>,
}

impl RootMultiset {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn as_polys(&self) -> Vec<MultiPoly<BigInt>> {
        self.roots
            .iter()
            .map(|v| {
                let mut p = MultiPoly::zero(&self.vars);
                for (i, &c) in v.iter().enumerate() {
                    let mut e = vec![0; v.len()];
                    e[i] = 1;
                    p.add_term(e, BigInt::from(c));
                }
                p
            })
            .collect()
    }

    /// `e_k` of the roots, for `k = 0..=max_k`.
    pub fn elementary(&self, max_k: usize) -> Vec<MultiPoly<BigInt>> {
        let mut e = vec![MultiPoly::zero(&self.vars); max_k + 1];
        e[0] = MultiPoly::one(&self.vars);
        for r in self.as_polys() {
            for k in (1..=max_k).rev() {
                e[k] = e[k].clone() + e[k - 1].clone() * r.clone();
            }
        }
        e
    }

    pub fn strings(&self) -> Vec<String> {
        self.as_polys().iter().map(|p| p.to_string()).collect()
    }
}

impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.strings().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v2() -> GeneratorSet {
        GeneratorSet::parse(&["V:2"]).unwrap()
    }

    fn roots(expr: &str) -> Vec<String> {
        let mut r = v2().chern_roots(&BundleExpr::parse(expr).unwrap()).unwrap().strings();
        r.sort();
        r
    }

    #[test]
    fn parse_and_print() {
        let e = BundleExpr::parse("sym(3,V) * dual(det(V))").unwrap();
        assert_eq!(e, BundleExpr::gen("V").sym(3).tensor(BundleExpr::gen("V").det().dual()));
        assert_eq!(BundleExpr::parse(&e.to_string()).unwrap(), e);
        assert!(BundleExpr::parse("sym(V)").is_err());
        assert!(BundleExpr::parse("V +").is_err());
    }

    #[test]
    fn sym_cube_roots() {
        assert_eq!(roots("sym(3, V)"), ["2*a + b", "3*a", "3*b", "a + 2*b"]);
    }

    #[test]
    fn twisted_sym_cube_roots() {
        assert_eq!(roots("sym(3,V) * dual(det(V))"), ["-a + 2*b", "2*a - b", "a", "b"]);
    }

    #[test]
    fn dual_det_is_one_root() {
        assert_eq!(roots("dual(det(V))"), ["-a - b"]);
    }

    #[test]
    fn ranks() {
        let g = GeneratorSet::parse(&["V:3", "L:1"]).unwrap();
        let r = |s: &str| g.rank(&BundleExpr::parse(s).unwrap()).unwrap();
        assert_eq!(r("sym(2, V)"), 6);
        assert_eq!(r("wedge(2, V) * L"), 3);
        assert_eq!(r("V + 2"), 5);
        assert_eq!(r("det(V + L)"), 1);
        assert_eq!(
            g.chern_roots(&BundleExpr::parse("wedge(4, V)").unwrap()),
            Err(CharError::WedgeTooLarge { m: 4, rank: 3 })
        );
        assert_eq!(
            g.rank(&BundleExpr::parse("W").unwrap()),
            Err(CharError::UnknownGenerator("W".into()))
        );
    }
}
