//! Prime field elements with a runtime modulus.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::scalar::{BaseRing, Field, Ring};
use super::CoreError;

/// An element of `F_p`.
///
/// Elements built through `Zero`, `One` or [`Ring::from_int`] carry no modulus
/// yet (`modulus == 0`): they hold an integer constant that is reduced the
/// first time it meets an element with a known prime. Mixing two different
/// known primes panics, since that is a programming error rather than a
/// data-dependent failure.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    value: i64,
    modulus: u64,
}

impl Fp {
    /// Reduces `value` into `[0, p)`.
    pub fn new(value: i64, p: u64) -> Self {
        debug_assert!(p >= 2);
        Fp {
            value: value.rem_euclid(p as i64),
            modulus: p,
        }
    }

    /// The representative in `[0, p)` (or the raw constant when unresolved).
    pub fn value(&self) -> i64 {
        self.value
    }

    /// `None` while the element is an unresolved integer constant.
    pub fn modulus(&self) -> Option<u64> {
        (self.modulus != 0).then_some(self.modulus)
    }

    fn resolve(self, p: u64) -> Self {
        if self.modulus == 0 {
            Fp::new(self.value, p)
        } else {
            self
        }
    }

    fn align(self, other: Self) -> (Self, Self, u64) {
        match (self.modulus, other.modulus) {
            (0, 0) => (self, other, 0),
            (0, p) => (self.resolve(p), other, p),
            (p, 0) => (self, other.resolve(p), p),
            (p, q) => {
                assert_eq!(p, q, "mixed prime fields F_{p} and F_{q}");
                (self, other, p)
            }
        }
    }

    fn combine(self, other: Self, op: impl Fn(i128, i128) -> i128) -> Self {
        let (a, b, p) = self.align(other);
        let raw = op(a.value as i128, b.value as i128);
        if p == 0 {
            Fp {
                value: i64::try_from(raw).expect("unresolved F_p constant overflowed"),
                modulus: 0,
            }
        } else {
            Fp {
                value: raw.rem_euclid(p as i128) as i64,
                modulus: p,
            }
        }
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        match (self.modulus, other.modulus) {
            (0, 0) => self.value == other.value,
            (p, q) if p != 0 && q != 0 => p == q && self.value == other.value,
            _ => {
                let (a, b, _) = self.align(*other);
                a.value == b.value
            }
        }
    }
}

impl Eq for Fp {}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.combine(rhs, |a, b| a * b)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.modulus == 0 {
            Fp {
                value: -self.value,
                modulus: 0,
            }
        } else {
            Fp::new(-self.value, self.modulus)
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp {
            value: 0,
            modulus: 0,
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp {
            value: 1,
            modulus: 0,
        }
    }
}

impl Ring for Fp {
    fn from_int(n: i64) -> Self {
        Fp {
            value: n,
            modulus: 0,
        }
    }

    fn from_ratio(num: &BigInt, den: &BigInt, base: &BaseRing) -> Result<Self, CoreError> {
        let BaseRing::Fp { p } = base else {
            return Err(CoreError::BaseMismatch(base.clone()));
        };
        let reduce = |n: &BigInt| -> i64 {
            n.mod_floor(&BigInt::from(*p))
                .to_i64()
                .expect("residue fits in i64")
        };
        let n = Fp::new(reduce(num), *p);
        let d = Fp::new(reduce(den), *p);
        n.div(&d).ok_or(CoreError::DivisionByZero)
    }

    fn accepts(base: &BaseRing) -> bool {
        matches!(base, BaseRing::Fp { .. })
    }

    fn resolve_in(&self, base: &BaseRing) -> Self {
        match base {
            BaseRing::Fp { p } => self.resolve(*p),
            _ => *self,
        }
    }

    fn same_domain(&self, other: &Self) -> bool {
        self.modulus == 0 || other.modulus == 0 || self.modulus == other.modulus
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.modulus == 0 {
            // Only the unresolved units ±1 are invertible without a prime.
            return match self.value {
                1 | -1 => Some(*self),
                _ => panic!("cannot invert unresolved F_p constant {}", self.value),
            };
        }
        let p = self.modulus as i128;
        let g = (self.value as i128).extended_gcd(&p);
        debug_assert_eq!(g.gcd, 1);
        Some(Fp {
            value: g.x.rem_euclid(p) as i64,
            modulus: self.modulus,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_seven() {
        let a = Fp::new(5, 7);
        let b = Fp::new(4, 7);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 1);
        assert_eq!((b - a).value(), 6);
        assert_eq!((a * b).value(), 6);
        assert_eq!((a * a.inv().unwrap()).value(), 1);
        assert_eq!((-a).value(), 2);
    }

    #[test]
    fn unresolved_constants_adopt_modulus() {
        let two = Fp::from_int(2);
        assert_eq!(two.modulus(), None);
        let x = Fp::new(4, 5) + two;
        assert_eq!(x.modulus(), Some(5));
        assert_eq!(x.value(), 1);
        assert_eq!(Fp::from_int(7), Fp::new(2, 5));
        assert_eq!(Fp::one(), Fp::new(1, 3));
        assert!(Fp::from_int(3) * Fp::new(1, 3) == Fp::zero());
    }

    #[test]
    fn ratio_embedding() {
        let half = Fp::from_ratio(&BigInt::from(1), &BigInt::from(2), &BaseRing::Fp { p: 5 }).unwrap();
        assert_eq!(half.value(), 3);
        assert!(Fp::from_ratio(&BigInt::from(1), &BigInt::from(5), &BaseRing::Fp { p: 5 }).is_err());
    }

    #[test]
    #[should_panic]
    fn mixing_primes_panics() {
        let _ = Fp::new(1, 3) + Fp::new(1, 5);
    }
}
