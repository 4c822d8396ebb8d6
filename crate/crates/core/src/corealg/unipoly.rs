//! Dense univariate polynomials `R[t]`, used both as a coefficient ring (the
//! base of a one-parameter family) and for minimal polynomials over fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{format_terms, parse_terms};
use super::scalar::{BaseRing, Field, Ring};
use super::CoreError;

/// Coefficients stored lowest degree first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

pub const FAMILY_VAR: &str = "t";

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The variable `t` itself.
    pub fn t() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    pub fn monomial(c: R, deg: usize) -> Self {
        let mut v = vec![R::zero(); deg];
        v.push(c);
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn parse_in(s: &str, inner: &BaseRing) -> Result<Self, CoreError> {
        let vars = [FAMILY_VAR.to_string()];
        let mut acc = Self::zero();
        for term in parse_terms(s, &vars)? {
            let e = term.exponents[0];
            if e < 0 {
                return Err(CoreError::Parse(format!("negative power of t in {s:?}")));
            }
            let c = R::from_ratio(&term.num, &term.den, inner)?;
            acc = acc + Self::monomial(c, e as usize);
        }
        Ok(acc)
    }
}

impl<F: Field> UniPoly<F> {
    /// Euclidean division `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.lead().unwrap().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = rem[top].clone() * lead_inv.clone();
            let shift = top - dd;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - c.clone() * dc.clone();
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => self.scale(&l.inv().unwrap()),
            None => self.clone(),
        }
    }

    /// Monic gcd together with Bézout cofactors: `u*self + v*other = g`.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0 - q.clone() * s1.clone();
            s0 = std::mem::replace(&mut s1, s);
            let t = t0 - q * t1.clone();
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            Some(l) => {
                let li = l.inv().unwrap();
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
            None => (r0, s0, t0),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_int(i as i64))
                .collect(),
        )
    }
}

impl<R: Ring> Zero for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for UniPoly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Add for UniPoly<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<R: Ring> Sub for UniPoly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<R: Ring> Mul for UniPoly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<R: Ring> Neg for UniPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let vars = if i == 0 {
                    vec![]
                } else {
                    vec![(FAMILY_VAR, i as i32)]
                };
                (c, vars)
            });
        f.write_str(&format_terms(terms))
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }

    fn from_ratio(num: &BigInt, den: &BigInt, base: &BaseRing) -> Result<Self, CoreError> {
        let inner = base.inner().ok_or_else(|| CoreError::BaseMismatch(base.clone()))?;
        Ok(Self::constant(R::from_ratio(num, den, inner)?))
    }

    fn parse(s: &str, base: &BaseRing) -> Result<Self, CoreError> {
        let inner = base.inner().ok_or_else(|| CoreError::BaseMismatch(base.clone()))?;
        Self::parse_in(s, inner)
    }

    fn accepts(base: &BaseRing) -> bool {
        base.inner().is_some_and(R::accepts)
    }

    fn resolve_in(&self, base: &BaseRing) -> Self {
        match base.inner() {
            Some(inner) => self.map(|c| c.resolve_in(inner)),
            None => self.clone(),
        }
    }

    fn is_negative(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_negative()
    }

    fn is_atomic(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn same_domain(&self, other: &Self) -> bool {
        match (self.coeffs.first(), other.coeffs.first()) {
            (Some(a), Some(b)) => a.same_domain(b),
            _ => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_int(n)
    }

    #[test]
    fn prints_and_parses() {
        let p = UniPoly::new(vec![BigInt::from(-1), BigInt::from(0), BigInt::from(3)]);
        assert_eq!(p.to_string(), "3*t^2 - 1");
        let back = UniPoly::<BigInt>::parse_in("3*t^2 - 1", &BaseRing::Z).unwrap();
        assert_eq!(back, p);
        assert_eq!(UniPoly::<BigInt>::t().to_string(), "t");
        assert_eq!(UniPoly::<BigInt>::zero().to_string(), "0");
    }

    #[test]
    fn euclid_over_q() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let a = UniPoly::new(vec![q(-1), q(0), q(1)]);
        let b = UniPoly::new(vec![q(-1), q(1)]);
        let (quot, rem) = a.div_rem(&b);
        assert!(rem.is_zero());
        assert_eq!(quot, UniPoly::new(vec![q(1), q(1)]));
        let c = UniPoly::new(vec![q(2), q(1)]);
        let (g, u, v) = a.ext_gcd(&c);
        assert_eq!(g, UniPoly::one());
        assert_eq!(u * a + v * c, UniPoly::one());
    }

    #[test]
    fn evaluation() {
        let p = UniPoly::new(vec![BigInt::from(1), BigInt::from(2), BigInt::from(1)]);
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(9));
    }
}
