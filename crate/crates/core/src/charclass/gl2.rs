//! Characters of `GL_2` and their decomposition into irreducibles.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::expr::RootMultiset;
use super::CharError;
use crate::corealg::{parse_terms, vars_of, MultiPoly};

/// A Laurent polynomial in the torus weights `a, b`, symmetric in `a ↔ b`,
/// with nonnegative coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GL2Character {
    terms: BTreeMap<(i32, i32), u64>,
}

/// A highest weight `(p, q)` with `p ≥ q`.
pub type Weight = (i32, i32);

impl GL2Character {
    pub fn from_terms(terms: impl IntoIterator<Item = ((i32, i32), u64)>) -> Result<Self, CharError> {
        let mut m = BTreeMap::new();
        for (w, c) in terms {
            if c > 0 {
                *m.entry(w).or_insert(0) += c;
            }
        }
        let ch = GL2Character { terms: m };
        if !ch.is_symmetric() {
            return Err(CharError::NotCharacter("not symmetric under a <-> b".into()));
        }
        Ok(ch)
    }

    /// Reads e.g. `2*a + 2*b + a^2*b^-1 + b^2*a^-1`.
    pub fn parse(s: &str) -> Result<Self, CharError> {
        let vars = ["a".to_string(), "b".to_string()];
        let mut terms: BTreeMap<(i32, i32), BigInt> = BTreeMap::new();
        for t in parse_terms(s, &vars)? {
            if t.den != BigInt::from(1) {
                return Err(CharError::NotCharacter("coefficients must be integers".into()));
            }
            *terms.entry((t.exponents[0], t.exponents[1])).or_default() += t.num;
        }
        let mut out = Vec::new();
        for (w, c) in terms {
            let c = c
                .to_u64()
                .ok_or_else(|| CharError::NotCharacter(format!("coefficient {c} is negative or too large")))?;
            out.push((w, c));
        }
        Self::from_terms(out)
    }

    /// The character `Σ a^{r_a} b^{r_b}` of a bundle on `BGL_2` with roots `r`.
    pub fn from_roots(r: &RootMultiset) -> Result<Self, CharError> {
        if r.vars.len() != 2 {
            return Err(CharError::NotCharacter("characters need exactly two root variables".into()));
        }
        let to_i32 = |x: i64| i32::try_from(x).map_err(|_| CharError::SizeLimit("weight too large".into()));
        let mut terms = Vec::with_capacity(r.len());
        for v in &r.roots {
            terms.push(((to_i32(v[0])?, to_i32(v[1])?), 1));
        }
        Self::from_terms(terms)
    }

    /// `(a^{p+1} b^q - a^q b^{p+1}) / (a - b)`.
    pub fn irreducible((p, q): Weight) -> Self {
        assert!(p >= q, "highest weight needs p >= q");
        GL2Character {
            terms: (0..=p - q).map(|i| ((p - i, q + i), 1)).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(x, y), c)| self.terms.get(&(y, x)) == Some(c))
    }

    pub fn dim(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: Weight) -> u64 {
        self.terms.get(&w).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            *terms.entry(*w).or_insert(0) += c;
        }
        GL2Character { terms }
    }

    pub fn as_poly(&self) -> MultiPoly<BigInt> {
        let vars = vars_of(&["a", "b"]);
        let mut p = MultiPoly::zero_laurent(&vars);
        for (&(x, y), &c) in &self.terms {
            p.add_term(vec![x, y], BigInt::from(c));
        }
        p
    }
}

impl fmt::Display for GL2Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_poly())
    }
}

/// Highest weights of the irreducible summands, with multiplicity, ascending.
pub fn gl2_decompose(chi: &GL2Character) -> Result<Vec<Weight>, CharError> {
    let mut rest = chi.terms.clone();
    let mut out = Vec::new();
    while let Some((&(p, q), &m)) = rest.iter().next_back() {
        if p < q {
            return Err(CharError::NotCharacter(format!("top weight ({p}, {q}) is not dominant")));
        }
        for i in 0..=p - q {
            let w = (p - i, q + i);
            match rest.get_mut(&w) {
                Some(c) if *c >= m => {
                    *c -= m;
                    if *c == 0 {
                        rest.remove(&w);
                    }
                }
                _ => {
                    return Err(CharError::NotCharacter(format!(
                        "peeling ({p}, {q}) leaves a negative coefficient at a^{}b^{}",
                        w.0, w.1
                    )))
                }
            }
        }
        out.extend(std::iter::repeat_n((p, q), m as usize));
    }
    out.sort();
    Ok(out)
}

pub fn reconstruct(weights: &[Weight]) -> GL2Character {
    weights.iter().fold(GL2Character { terms: BTreeMap::new() }, |acc, &w| {
        acc.add(&GL2Character::irreducible(w))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_of_sym_square() {
        let chi = GL2Character::parse("2*a + 2*b + a^2*b^-1 + b^2*a^-1").unwrap();
        let w = gl2_decompose(&chi).unwrap();
        assert_eq!(w, [(1, 0), (2, -1)]);
        assert_eq!(reconstruct(&w), chi);
        assert_eq!(chi.dim(), 6);
    }

    #[test]
    fn small_characters() {
        assert_eq!(gl2_decompose(&GL2Character::parse("a + b").unwrap()).unwrap(), [(1, 0)]);
        assert_eq!(gl2_decompose(&GL2Character::parse("2").unwrap()).unwrap(), [(0, 0), (0, 0)]);
    }

    #[test]
    fn fake_characters_fail() {
        assert!(matches!(GL2Character::parse("a"), Err(CharError::NotCharacter(_))));
        assert!(matches!(GL2Character::parse("a - b"), Err(CharError::NotCharacter(_))));
        let lopsided = GL2Character::parse("a^2 + b^2").unwrap();
        assert!(matches!(gl2_decompose(&lopsided), Err(CharError::NotCharacter(_))));
    }
}
