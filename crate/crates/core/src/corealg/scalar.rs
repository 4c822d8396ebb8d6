//! Exact coefficient rings.
//!
//! Every computation in this crate is generic over a [`Ring`]. The concrete
//! rings are arbitrary-precision integers ([`BigInt`]), rationals
//! ([`BigRational`]), prime fields ([`Fp`](super::fp::Fp)) and univariate
//! polynomial rings over any of these ([`UniPoly`](super::unipoly::UniPoly)).
//! A [`BaseRing`] descriptor travels alongside generic values so that parsing
//! and serialization know which ring they are in.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::CoreError;

/// Runtime description of a coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum BaseRing {
    Z,
    Q,
    Fp { p: u64 },
    #[serde(rename = "poly_t")]
    PolyT { inner: Box<BaseRing> },
}

impl BaseRing {
    pub fn fp(p: u64) -> Result<Self, CoreError> {
        if !is_prime(p) {
            return Err(CoreError::NotPrime(p));
        }
        Ok(BaseRing::Fp { p })
    }

    pub fn poly_t(inner: BaseRing) -> Self {
        BaseRing::PolyT {
            inner: Box::new(inner),
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, BaseRing::Q | BaseRing::Fp { .. })
    }

    /// The ring of coefficients one level down, for `R[t]`.
    pub fn inner(&self) -> Option<&BaseRing> {
        match self {
            BaseRing::PolyT { inner } => Some(inner),
            _ => None,
        }
    }
}

impl Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Z => write!(f, "Z"),
            BaseRing::Q => write!(f, "Q"),
            BaseRing::Fp { p } => write!(f, "F_{p}"),
            BaseRing::PolyT { inner } => write!(f, "{inner}[t]"),
        }
    }
}

/// Commutative ring with exact arithmetic.
///
/// `from_int` must work without knowing the runtime parameters of the ring
/// (the prime of `F_p`); implementations resolve such constants lazily.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_int(n: i64) -> Self;

    /// Embeds `num / den`, failing when `den` is not invertible in the ring.
    fn from_ratio(num: &BigInt, den: &BigInt, base: &BaseRing) -> Result<Self, CoreError>;

    /// Whether values of this type represent elements of `base`.
    fn accepts(base: &BaseRing) -> bool;

    /// Reads an element written in the polynomial grammar. Rings without a
    /// variable accept sums of numeric constants.
    fn parse(s: &str, base: &BaseRing) -> Result<Self, CoreError> {
        let mut acc = Self::zero();
        for t in super::poly::parse_terms(s, &[])? {
            acc = acc + Self::from_ratio(&t.num, &t.den, base)?;
        }
        Ok(acc)
    }

    /// Binds runtime parameters (the prime of `F_p`) taken from `base`.
    fn resolve_in(&self, _base: &BaseRing) -> Self {
        self.clone()
    }

    /// Whether the printed form starts with a minus sign that the polynomial
    /// printer should fold into the term separator.
    fn is_negative(&self) -> bool {
        false
    }

    /// Whether the printed form must be parenthesised when used as a factor.
    fn is_atomic(&self) -> bool {
        true
    }

    /// False when two elements live in incompatible instances of the ring
    /// (for example `F_3` and `F_5`).
    fn same_domain(&self, _other: &Self) -> bool {
        true
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

impl Ring for BigInt {
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn accepts(base: &BaseRing) -> bool {
        *base == BaseRing::Z
    }

    fn from_ratio(num: &BigInt, den: &BigInt, _base: &BaseRing) -> Result<Self, CoreError> {
        if den.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        let (q, r) = num.div_rem(den);
        if !r.is_zero() {
            return Err(CoreError::NotInRing(format!("{num}/{den}"), BaseRing::Z));
        }
        Ok(q)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Ring for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: &BigInt, den: &BigInt, _base: &BaseRing) -> Result<Self, CoreError> {
        if den.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn accepts(base: &BaseRing) -> bool {
        *base == BaseRing::Q
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2u64;
    while i.saturating_mul(i) <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Greatest common divisor of a list of integers (nonnegative; 0 for the empty list).
pub fn content<'a, I: IntoIterator<Item = &'a BigInt>>(coeffs: I) -> BigInt {
    coeffs
        .into_iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_normalise() {
        let r = BigRational::from_ratio(&BigInt::from(6), &BigInt::from(-4), &BaseRing::Q).unwrap();
        assert_eq!(*r.numer(), BigInt::from(-3));
        assert_eq!(*r.denom(), BigInt::from(2));
    }

    #[test]
    fn integer_division_must_be_exact() {
        assert!(BigInt::from_ratio(&BigInt::from(3), &BigInt::from(2), &BaseRing::Z).is_err());
        assert_eq!(
            BigInt::from_ratio(&BigInt::from(6), &BigInt::from(-2), &BaseRing::Z).unwrap(),
            BigInt::from(-3)
        );
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(BaseRing::fp(4).is_err());
    }

    #[test]
    fn base_ring_json_shape() {
        let b = BaseRing::poly_t(BaseRing::Fp { p: 5 });
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"kind":"poly_t","inner":{"kind":"Fp","p":5}}"#);
        let back: BaseRing = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn content_of_coefficients() {
        let cs = [BigInt::from(9), BigInt::from(-2)];
        assert_eq!(content(cs.iter()), BigInt::from(1));
        let cs = [BigInt::from(6), BigInt::from(-4)];
        assert_eq!(content(cs.iter()), BigInt::from(2));
    }
}
