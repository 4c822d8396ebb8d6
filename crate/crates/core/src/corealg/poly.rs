//! Sparse multivariate (and Laurent) polynomials.
//!
//! Printed form: terms joined by `" + "` / `" - "`, each term written
//! `coeff*var1^e1*var2^e2` with a coefficient of 1 elided unless the term is
//! constant, e.g. `9*c2^2 - 2*c1^2*c2`. Terms are listed by total degree
//! descending, ties broken lexicographically descending on the exponent
//! vector.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::scalar::{BaseRing, Ring};
use super::CoreError;

pub type Exponents = Vec<i32>;

/// Variable names shared between polynomials of the same ring.
pub type Vars = Arc<[String]>;

pub fn vars_of<S: AsRef<str>>(names: &[S]) -> Vars {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

pub fn total_degree(e: &[i32]) -> i64 {
    e.iter().map(|&x| x as i64).sum()
}

/// Descending canonical print order.
pub fn canonical_cmp(a: &[i32], b: &[i32]) -> Ordering {
    total_degree(b)
        .cmp(&total_degree(a))
        .then_with(|| b.cmp(a))
}

/// Term orders for Gröbner computations. Variables are ranked in list order,
/// the first variable being the largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Degrevlex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[i32], b: &[i32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Degrevlex => total_degree(a).cmp(&total_degree(b)).then_with(|| {
                // Smaller exponent in the last differing variable wins.
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
}

#[derive(Clone, Debug)]
pub struct MultiPoly<R> {
    vars: Vars,
    laurent: bool,
    terms: BTreeMap<Exponents, R>,
}

impl<R: Ring> PartialEq for MultiPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly {
            vars: vars.clone(),
            laurent: false,
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_laurent(vars: &Vars) -> Self {
        MultiPoly {
            laurent: true,
            ..Self::zero(vars)
        }
    }

    pub fn constant(vars: &Vars, c: R) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, R::one())
    }

    pub fn monomial(vars: &Vars, exps: Exponents, c: R) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let laurent = exps.iter().any(|&e| e < 0);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly {
            vars: vars.clone(),
            laurent,
            terms,
        }
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self, CoreError> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| CoreError::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Ok(Self::monomial(vars, e, R::one()))
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(vars: &Vars, laurent: bool, terms: I) -> Result<Self, CoreError>
    where
        I: IntoIterator<Item = (Exponents, R)>,
    {
        let mut p = if laurent {
            Self::zero_laurent(vars)
        } else {
            Self::zero(vars)
        };
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(CoreError::VariableMismatch);
            }
            if !laurent && e.iter().any(|&x| x < 0) {
                return Err(CoreError::NegativeExponent);
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_map(&self) -> &BTreeMap<Exponents, R> {
        &self.terms
    }

    pub fn coeff(&self, e: &[i32]) -> R {
        self.terms.get(e).cloned().unwrap_or_else(R::zero)
    }

    /// Terms in canonical print order.
    pub fn terms(&self) -> Vec<(&Exponents, &R)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| canonical_cmp(a.0, b.0));
        v
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    pub fn add_term(&mut self, e: Exponents, c: R) {
        if c.is_zero() {
            return;
        }
        if e.iter().any(|&x| x < 0) {
            self.laurent = true;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self {
            terms: BTreeMap::new(),
            ..self.clone()
        };
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.clone() * c.clone());
        }
        out
    }

    /// Multiplies by the monomial `c * x^e`.
    pub fn mul_term(&self, e: &[i32], c: &R) -> Self {
        let mut out = Self {
            terms: BTreeMap::new(),
            ..self.clone()
        };
        for (f, x) in &self.terms {
            let sum: Exponents = f.iter().zip(e).map(|(a, b)| a + b).collect();
            out.add_term(sum, x.clone() * c.clone());
        }
        out
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiPoly<S> {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            laurent: self.laurent,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Applies a permutation of variables: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let mut out = Self {
            terms: BTreeMap::new(),
            ..self.clone()
        };
        for (e, c) in &self.terms {
            let mut f = vec![0; e.len()];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    /// Leading term under a monomial order.
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Exponents, &R)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn try_op(&self, rhs: &Self, op: PolyOp) -> Result<Self, CoreError> {
        poly_op(self, rhs, op)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, CoreError> {
        poly_op(self, &rhs.clone().neg(), PolyOp::Add)
    }

    pub fn parse(s: &str, vars: &Vars, base: &BaseRing) -> Result<Self, CoreError> {
        let mut p = Self::zero(vars);
        for t in parse_terms(s, vars)? {
            let c = R::from_ratio(&t.num, &t.den, base)?;
            p.add_term(t.exponents, c);
        }
        Ok(p)
    }
}

/// Checked ring operation on two polynomials of the same ring.
pub fn poly_op<R: Ring>(
    lhs: &MultiPoly<R>,
    rhs: &MultiPoly<R>,
    op: PolyOp,
) -> Result<MultiPoly<R>, CoreError> {
    if lhs.vars != rhs.vars {
        return Err(CoreError::VariableMismatch);
    }
    let domain_ok = lhs
        .terms
        .values()
        .next()
        .zip(rhs.terms.values().next())
        .is_none_or(|(a, b)| a.same_domain(b));
    if !domain_ok {
        return Err(CoreError::DomainMismatch);
    }
    let mut out = MultiPoly {
        vars: lhs.vars.clone(),
        laurent: lhs.laurent || rhs.laurent,
        terms: BTreeMap::new(),
    };
    match op {
        PolyOp::Add => {
            out.terms = lhs.terms.clone();
            for (e, c) in &rhs.terms {
                out.add_term(e.clone(), c.clone());
            }
        }
        PolyOp::Mul => {
            for (e, a) in &lhs.terms {
                for (f, b) in &rhs.terms {
                    let sum: Exponents = e.iter().zip(f).map(|(x, y)| x + y).collect();
                    out.add_term(sum, a.clone() * b.clone());
                }
            }
        }
    }
    Ok(out)
}

impl<R: Ring> Add for MultiPoly<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        poly_op(&self, &rhs, PolyOp::Add).expect("polynomials from different rings")
    }
}

impl<R: Ring> Sub for MultiPoly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        poly_op(&self, &(-rhs), PolyOp::Add).expect("polynomials from different rings")
    }
}

impl<R: Ring> Mul for MultiPoly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        poly_op(&self, &rhs, PolyOp::Mul).expect("polynomials from different rings")
    }
}

impl<R: Ring> Neg for MultiPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        MultiPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
            ..self
        }
    }
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms().into_iter().map(|(e, c)| {
            let factors: Vec<(&str, i32)> = e
                .iter()
                .zip(self.vars.iter())
                .filter(|(&x, _)| x != 0)
                .map(|(&x, v)| (v.as_str(), x))
                .collect();
            (c, factors)
        });
        f.write_str(&format_terms(terms))
    }
}

/// Renders terms in the shared grammar. Each item is a coefficient and the
/// nonzero `(variable, exponent)` factors of its monomial, already ordered.
pub fn format_terms<'a, R, I, S>(terms: I) -> String
where
    R: Ring + 'a,
    I: IntoIterator<Item = (&'a R, Vec<(S, i32)>)>,
    S: AsRef<str>,
{
    let mut out = String::new();
    for (idx, (c, factors)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut parts: Vec<String> = Vec::new();
        if factors.is_empty() || !magnitude.is_one() {
            let s = magnitude.to_string();
            if magnitude.is_atomic() || factors.is_empty() {
                parts.push(s);
            } else {
                parts.push(format!("({s})"));
            }
        }
        for (v, e) in &factors {
            if *e == 1 {
                parts.push(v.as_ref().to_string());
            } else {
                parts.push(format!("{}^{}", v.as_ref(), e));
            }
        }
        out.push_str(&parts.join("*"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A term as read from text: rational coefficient `num/den` and exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct ParsedTerm {
    pub num: BigInt,
    pub den: BigInt,
    pub exponents: Exponents,
}

/// Tokenises a polynomial string against a variable list.
pub fn parse_terms(s: &str, vars: &[String]) -> Result<Vec<ParsedTerm>, CoreError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(CoreError::Parse("empty polynomial".into()));
    }
    // Split at top-level signs; a '-' right after '^' belongs to an exponent.
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !cur.is_empty() {
                pieces.push((negative, std::mem::take(&mut cur)));
                negative = false;
            } else if prev.is_some() && prev != Some('+') && prev != Some('-') {
                return Err(CoreError::Parse(format!("misplaced sign in {s:?}")));
            }
            if ch == '-' {
                negative = !negative;
            }
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() {
        return Err(CoreError::Parse(format!("dangling sign in {s:?}")));
    }
    pieces.push((negative, cur));

    let mut out = Vec::new();
    for (neg, body) in pieces {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let mut exps = vec![0i32; vars.len()];
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(CoreError::Parse(format!("empty factor in {s:?}")));
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                let (n, d) = match factor.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (factor, "1"),
                };
                let n: BigInt = n
                    .parse()
                    .map_err(|_| CoreError::Parse(format!("bad coefficient {factor:?}")))?;
                let d: BigInt = d
                    .parse()
                    .map_err(|_| CoreError::Parse(format!("bad coefficient {factor:?}")))?;
                if d.is_zero() {
                    return Err(CoreError::DivisionByZero);
                }
                num *= n;
                den *= d;
            } else {
                let (name, e) = match factor.split_once('^') {
                    Some((name, e)) => (
                        name,
                        e.parse::<i32>()
                            .map_err(|_| CoreError::Parse(format!("bad exponent {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                let idx = vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| CoreError::UnknownVariable(name.to_string()))?;
                exps[idx] += e;
            }
        }
        if neg {
            num = -num;
        }
        out.push(ParsedTerm {
            num,
            den,
            exponents: exps,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn zvars(names: &[&str]) -> Vars {
        vars_of(names)
    }

    fn zp(s: &str, v: &Vars) -> MultiPoly<BigInt> {
        MultiPoly::parse(s, v, &BaseRing::Z).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let v = zvars(&["a", "b"]);
        let p = zp("a + b", &v) * zp("a - b", &v);
        assert_eq!(p, zp("a^2 - b^2", &v));
        assert_eq!(p.to_string(), "a^2 - b^2");
    }

    #[test]
    fn annihilator() {
        let v = zvars(&["a", "b"]);
        let p = zp("a^3 - 7*a*b", &v) * MultiPoly::zero(&v);
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn laurent_character_product() {
        // (a^2 + ab + b^2)(a^-1 + b^-1) = 2a + 2b + a^2 b^-1 + b^2 a^-1
        let v = zvars(&["a", "b"]);
        let lhs = zp("a^2 + a*b + b^2", &v);
        let rhs = zp("a^-1 + b^-1", &v);
        assert!(rhs.is_laurent());
        let prod = lhs * rhs;
        let expected = MultiPoly::from_terms(
            &v,
            true,
            [
                (vec![1, 0], BigInt::from(2)),
                (vec![0, 1], BigInt::from(2)),
                (vec![2, -1], BigInt::from(1)),
                (vec![-1, 2], BigInt::from(1)),
            ],
        )
        .unwrap();
        assert_eq!(prod, expected);
        assert_eq!(prod.to_string(), "a^2*b^-1 + 2*a + 2*b + a^-1*b^2");
    }

    #[test]
    fn golden_print_forms() {
        let v = zvars(&["c1", "c2"]);
        let p = zp("-2*c1^2*c2 + 9*c2^2", &v);
        // Plain canonical order puts the degree-3 term first.
        assert_eq!(p.to_string(), "-2*c1^2*c2 + 9*c2^2");
        assert_eq!(zp("1", &v).to_string(), "1");
        assert_eq!(zp("-1", &v).to_string(), "-1");
        assert_eq!(zp("-c1 + 3", &v).to_string(), "-c1 + 3");
        let q = MultiPoly::<BigRational>::parse("3/4*c1 - 1/2", &v, &BaseRing::Q).unwrap();
        assert_eq!(q.to_string(), "3/4*c1 - 1/2");
    }

    #[test]
    fn mismatched_rings_error() {
        let a = zp("a", &zvars(&["a", "b"]));
        let b = zp("a", &zvars(&["a", "c"]));
        assert_eq!(poly_op(&a, &b, PolyOp::Add), Err(CoreError::VariableMismatch));
        let v = zvars(&["x"]);
        let f3 = MultiPoly::<super::super::Fp>::parse("x", &v, &BaseRing::Fp { p: 3 }).unwrap();
        let f5 = MultiPoly::<super::super::Fp>::parse("x", &v, &BaseRing::Fp { p: 5 }).unwrap();
        assert_eq!(poly_op(&f3, &f5, PolyOp::Mul), Err(CoreError::DomainMismatch));
    }

    #[test]
    fn parse_errors() {
        let v = zvars(&["x"]);
        assert!(MultiPoly::<BigInt>::parse("y", &v, &BaseRing::Z).is_err());
        assert!(MultiPoly::<BigInt>::parse("x +", &v, &BaseRing::Z).is_err());
        assert!(MultiPoly::<BigInt>::parse("", &v, &BaseRing::Z).is_err());
        assert!(MultiPoly::<BigInt>::parse("1/2*x", &v, &BaseRing::Z).is_err());
    }

    #[test]
    fn degrevlex_orders_as_expected() {
        let o = MonomialOrder::Degrevlex;
        // x > y, x*y^2 < x^2*y, x*z < y^2 in degrevlex with x>y>z.
        assert_eq!(o.cmp(&[1, 0], &[0, 1]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 2], &[2, 1]), Ordering::Less);
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Greater);
    }
}
