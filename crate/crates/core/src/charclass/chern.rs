//! Symmetric reduction into `Z[c_1, ..., c_n]` and Chern classes.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::expr::{BundleExpr, GeneratorSet};
use super::CharError;
use crate::corealg::{content, format_terms, vars_of, BaseRing, Exponents, MultiPoly, Vars};

/// An element of `Z[c_i]` with `|c_i| = i`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyInChern {
    pub poly: MultiPoly<BigInt>,
    pub weights: Vec<i64>,
}

impl PolyInChern {
    pub fn weighted_degree(&self, e: &[i32]) -> i64 {
        e.iter().zip(&self.weights).map(|(&x, w)| x as i64 * w).sum()
    }

    /// Weighted degree descending, then fewer distinct variables, then lex descending.
    fn print_cmp(&self, a: &[i32], b: &[i32]) -> Ordering {
        let support = |e: &[i32]| e.iter().filter(|&&x| x != 0).count();
        self.weighted_degree(b)
            .cmp(&self.weighted_degree(a))
            .then_with(|| support(a).cmp(&support(b)))
            .then_with(|| b.cmp(a))
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.poly.term_map().keys().map(|e| self.weighted_degree(e));
        match degs.next() {
            Some(d) => degs.all(|x| x == d),
            None => true,
        }
    }

    /// Gcd of the coefficients, `0` for the zero polynomial.
    pub fn content(&self) -> BigInt {
        content(self.poly.term_map().values())
    }

    /// Coefficients reduced into `[0, p)`.
    pub fn reduce_mod(&self, p: u64) -> PolyInChern {
        let p = BigInt::from(p);
        PolyInChern {
            poly: self.poly.map_coeffs(|c| c.mod_floor(&p)),
            weights: self.weights.clone(),
        }
    }

    pub fn vars(&self) -> &Vars {
        self.poly.vars()
    }
}

impl fmt::Display for PolyInChern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(&Exponents, &BigInt)> = self.poly.term_map().iter().collect();
        terms.sort_by(|a, b| self.print_cmp(a.0, b.0));
        let vars = self.poly.vars();
        let rendered = terms.into_iter().map(|(e, c)| {
            let factors: Vec<(&str, i32)> = e
                .iter()
                .zip(vars.iter())
                .filter(|(&x, _)| x != 0)
                .map(|(&x, v)| (v.as_str(), x))
                .collect();
            (c, factors)
        });
        f.write_str(&format_terms(rendered))
    }
}

/// The Chow ring `Z[c_i(V)]` of the product of classifying spaces of the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernRing {
    pub gens: GeneratorSet,
    vars: Vars,
    weights: Vec<i64>,
}

impl ChernRing {
    /// With one generator the variables are `c1, ..., cn`; otherwise `c1_V, ...`.
    pub fn new(gens: GeneratorSet) -> Self {
        let single = gens.generators().len() == 1;
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for g in gens.generators() {
            for i in 1..=g.rank {
                names.push(if single { format!("c{i}") } else { format!("c{i}_{}", g.name) });
                weights.push(i as i64);
            }
        }
        ChernRing {
            gens,
            vars: vars_of(&names),
            weights,
        }
    }

    pub fn parse_gens(specs: &[&str]) -> Result<Self, CharError> {
        Ok(Self::new(GeneratorSet::parse(specs)?))
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn wrap(&self, poly: MultiPoly<BigInt>) -> PolyInChern {
        PolyInChern {
            poly,
            weights: self.weights.clone(),
        }
    }

    pub fn parse(&self, s: &str) -> Result<PolyInChern, CharError> {
        Ok(self.wrap(MultiPoly::parse(s, &self.vars, &BaseRing::Z)?))
    }

    pub fn one(&self) -> PolyInChern {
        self.wrap(MultiPoly::one(&self.vars))
    }

    /// `e_1, ..., e_n` of each block of root variables.
    fn block_elementaries(&self) -> Vec<Vec<MultiPoly<BigInt>>> {
        let rv = self.gens.root_vars();
        self.gens
            .blocks()
            .into_iter()
            .map(|block| {
                let mut e = vec![MultiPoly::zero(rv); block.len() + 1];
                e[0] = MultiPoly::one(rv);
                for i in block.clone() {
                    let mut x = vec![0; rv.len()];
                    x[i] = 1;
                    let xi = MultiPoly::monomial(rv, x, BigInt::one());
                    for k in (1..=block.len()).rev() {
                        e[k] = e[k].clone() + e[k - 1].clone() * xi.clone();
                    }
                }
                e.remove(0);
                e
            })
            .collect()
    }

    pub fn is_symmetric(&self, p: &MultiPoly<BigInt>) -> bool {
        let n = self.gens.root_vars().len();
        self.gens.blocks().into_iter().all(|block| {
            block.clone().skip(1).all(|i| {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(i - 1, i);
                p.permute_vars(&perm) == *p
            })
        })
    }

    /// Writes a polynomial in the roots, symmetric within each block, in elementary
    /// symmetric polynomials, `e_i ↦ c_i`.
    pub fn elementary_reduce(&self, p: &MultiPoly<BigInt>) -> Result<PolyInChern, CharError> {
        if p.vars() != self.gens.root_vars() {
            return Err(CharError::Parse("polynomial is not in the root variables".into()));
        }
        if p.is_laurent() || !self.is_symmetric(p) {
            return Err(CharError::NotSymmetric);
        }
        let elem = self.block_elementaries();
        let blocks = self.gens.blocks();
        let mut rest = p.clone();
        let mut out = MultiPoly::zero(&self.vars);
        while !rest.is_zero() {
            let (lead, c) = rest
                .term_map()
                .iter()
                .max_by(|a, b| a.0.cmp(b.0))
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            let mut term = MultiPoly::constant(rest.vars(), c.clone());
            let mut cexp = Vec::with_capacity(self.vars.len());
            for (block, e) in blocks.iter().zip(&elem) {
                let lam = &lead[block.clone()];
                for i in 0..lam.len() {
                    let next = lam.get(i + 1).copied().unwrap_or(0);
                    let k = lam[i] - next;
                    if k < 0 {
                        return Err(CharError::NotSymmetric);
                    }
                    cexp.push(k);
                    if k > 0 {
                        term = term * e[i].pow(k as u32);
                    }
                }
            }
            out.add_term(cexp, c);
            rest = rest - term;
        }
        Ok(self.wrap(out))
    }

    /// Substitutes the elementary symmetric polynomials back for the `c_i`.
    pub fn expand_in_roots(&self, p: &PolyInChern) -> MultiPoly<BigInt> {
        let elem: Vec<MultiPoly<BigInt>> = self.block_elementaries().into_iter().flatten().collect();
        let rv = self.gens.root_vars();
        let mut out = MultiPoly::zero(rv);
        for (e, c) in p.poly.term_map() {
            let mut term = MultiPoly::constant(rv, c.clone());
            for (k, &x) in e.iter().enumerate() {
                if x > 0 {
                    term = term * elem[k].pow(x as u32);
                }
            }
            out = out + term;
        }
        out
    }

    pub fn chern_class(&self, e: &BundleExpr, k: usize) -> Result<PolyInChern, CharError> {
        let rank = self.gens.rank(e)?;
        if k > rank {
            return Err(CharError::DegreeOutOfRange { k, rank });
        }
        let roots = self.gens.chern_roots(e)?;
        let ek = roots.elementary(k).pop().unwrap();
        self.elementary_reduce(&ek)
    }

    /// `c_0, ..., c_rank`.
    pub fn total_chern_class(&self, e: &BundleExpr) -> Result<Vec<PolyInChern>, CharError> {
        let rank = self.gens.rank(e)?;
        let roots = self.gens.chern_roots(e)?;
        roots.elementary(rank).iter().map(|p| self.elementary_reduce(p)).collect()
    }
}

/// Sign-normalised content: positive gcd, so `p / content` has a positive leading coefficient.
pub fn primitive_part(p: &PolyInChern) -> (BigInt, PolyInChern) {
    let c = p.content();
    if c.is_zero() {
        return (c, p.clone());
    }
    let q = p.poly.map_coeffs(|x| x / &c);
    (c.abs(), PolyInChern { poly: q, weights: p.weights.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> ChernRing {
        ChernRing::parse_gens(&["V:2"]).unwrap()
    }

    fn roots_poly(ring: &ChernRing, s: &str) -> MultiPoly<BigInt> {
        MultiPoly::parse(s, ring.gens.root_vars(), &BaseRing::Z).unwrap()
    }

    #[test]
    fn newton_and_product() {
        let r = ring();
        assert_eq!(r.elementary_reduce(&roots_poly(&r, "a^2 + b^2")).unwrap().to_string(), "c1^2 - 2*c2");
        assert_eq!(r.elementary_reduce(&roots_poly(&r, "a*b")).unwrap().to_string(), "c2");
    }

    #[test]
    fn squares_of_the_twisted_roots() {
        let r = ring();
        let a = roots_poly(&r, "a");
        let b = roots_poly(&r, "b");
        let p = a.clone() * b.clone() * roots_poly(&r, "2*a - b") * roots_poly(&r, "2*b - a");
        let p = r.elementary_reduce(&p);
        assert_eq!(p.unwrap().to_string(), "9*c2^2 - 2*c1^2*c2");
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let r = ring();
        assert_eq!(r.elementary_reduce(&roots_poly(&r, "a^2 + b")), Err(CharError::NotSymmetric));
    }

    #[test]
    fn twisted_sym_cube_classes() {
        let r = ring();
        let e = BundleExpr::parse("sym(3,V) * dual(det(V))").unwrap();
        let want = ["1", "2*c1", "-c1^2 + 10*c2", "-2*c1^3 + 10*c1*c2", "9*c2^2 - 2*c1^2*c2"];
        for (k, w) in want.iter().enumerate() {
            let c = r.chern_class(&e, k).unwrap();
            assert_eq!(c, r.parse(w).unwrap());
            assert_eq!(c.to_string(), *w);
        }
        assert_eq!(r.chern_class(&e, 5), Err(CharError::DegreeOutOfRange { k: 5, rank: 4 }));
    }

    #[test]
    fn reduction_round_trip() {
        let r = ChernRing::parse_gens(&["V:3", "L:1"]).unwrap();
        let e = BundleExpr::parse("wedge(2, V) * L + V").unwrap();
        for c in r.total_chern_class(&e).unwrap() {
            assert!(c.is_homogeneous());
            let back = r.expand_in_roots(&c);
            assert_eq!(r.elementary_reduce(&back).unwrap(), c);
        }
    }

    #[test]
    fn modular_reductions() {
        let r = ring();
        let g = r.parse("9*c2^2 - 2*c1^2*c2").unwrap();
        assert_eq!(g.reduce_mod(2).to_string(), "c2^2");
        assert_eq!(g.reduce_mod(3).to_string(), "c1^2*c2");
        assert_eq!(g.content(), BigInt::one());
    }
}
