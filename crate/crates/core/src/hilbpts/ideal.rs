use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::groebner::{divides, groebner_with_cofactors, lead, reduce, GroebnerTrace};
use super::HilbError;
use crate::corealg::{vars_of, BaseRing, ExactLinalg, Exponents, Field, MonomialOrder, MultiPoly, Ring, Vars};
use crate::finalg::Algebra;

/// An ideal of `k[x_1, ..., x_n]` given by generators, with a term order.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealPoint<F: Ring> {
    vars: Vars,
    gens: Vec<MultiPoly<F>>,
    order: MonomialOrder,
    base: BaseRing,
}

impl<F: Field + ExactLinalg> IdealPoint<F> {
    pub fn new(vars: Vars, gens: Vec<MultiPoly<F>>, order: MonomialOrder, base: BaseRing) -> Result<Self, HilbError> {
        if !base.is_field() || !F::accepts(&base) {
            return Err(HilbError::Precondition(format!("ideals need a field of coefficients, got {base}")));
        }
        for g in &gens {
            if g.vars() != &vars {
                return Err(HilbError::Precondition("generator uses a different variable list".into()));
            }
            if g.term_map().keys().flatten().any(|&e| e < 0) {
                return Err(HilbError::Precondition("negative exponent in a generator".into()));
            }
        }
        let gens = gens.iter().map(|g| g.map_coeffs(|c| c.resolve_in(&base))).collect();
        Ok(IdealPoint {
            vars,
            gens,
            order,
            base,
        })
    }

    /// Generators as comma-separated polynomial strings.
    pub fn parse(ideal: &str, vars: &[&str], base: BaseRing, order: MonomialOrder) -> Result<Self, HilbError> {
        let vars = vars_of(vars);
        let gens = ideal
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| MultiPoly::parse(s, &vars, &base))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vars, gens, order, base)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn gens(&self) -> &[MultiPoly<F>] {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        IdealPoint {
            order,
            ..self.clone()
        }
    }

    pub fn with_gens(&self, gens: Vec<MultiPoly<F>>) -> Self {
        IdealPoint {
            gens,
            ..self.clone()
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    pub fn groebner_trace(&self) -> GroebnerTrace<F> {
        groebner_with_cofactors(&self.vars, &self.gens, self.order)
    }

    pub fn quotient(&self) -> Result<QuotientRing<F>, HilbError> {
        QuotientRing::new(self.vars.clone(), self.groebner_trace().basis, self.order, self.base.clone())
    }
}

/// Reduced Gröbner basis under the point's order, sorted by leading monomial.
pub fn groebner_basis<F: Field + ExactLinalg>(p: &IdealPoint<F>) -> Vec<MultiPoly<F>> {
    p.groebner_trace().basis
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colength {
    pub d: usize,
    pub basis: Vec<String>,
}

pub fn colength<F: Field + ExactLinalg>(p: &IdealPoint<F>) -> Result<Colength, HilbError> {
    let q = p.quotient()?;
    Ok(Colength {
        d: q.dim(),
        basis: q.basis_strings(),
    })
}

/// `k[x] / I` with the standard monomials of a Gröbner basis as basis.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientRing<F: Ring> {
    vars: Vars,
    order: MonomialOrder,
    base: BaseRing,
    gb: Vec<MultiPoly<F>>,
    basis: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
}

/// Standard monomial order: total degree ascending, then lexicographically descending.
fn standard_cmp(a: &Exponents, b: &Exponents) -> std::cmp::Ordering {
    let da: i32 = a.iter().sum();
    let db: i32 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

impl<F: Field + ExactLinalg> QuotientRing<F> {
    pub fn new(vars: Vars, gb: Vec<MultiPoly<F>>, order: MonomialOrder, base: BaseRing) -> Result<Self, HilbError> {
        let n = vars.len();
        let leads: Vec<Exponents> = gb.iter().map(|g| lead(g, order).0).collect();
        let mut basis = Vec::new();
        if !leads.iter().any(|e| e.iter().all(|&x| x == 0)) {
            let mut bounds = Vec::with_capacity(n);
            for i in 0..n {
                let pure = leads
                    .iter()
                    .filter(|e| e.iter().enumerate().all(|(k, &x)| k == i || x == 0))
                    .map(|e| e[i])
                    .min();
                match pure {
                    Some(b) => bounds.push(b),
                    None => return Err(HilbError::InfiniteColength(vars[i].clone())),
                }
            }
            let mut e = vec![0i32; n];
            'outer: loop {
                if !leads.iter().any(|l| divides(l, &e)) {
                    basis.push(e.clone());
                }
                for i in 0..n {
                    e[i] += 1;
                    if e[i] < bounds[i] {
                        continue 'outer;
                    }
                    e[i] = 0;
                }
                break;
            }
            basis.sort_by(standard_cmp);
        }
        let index = basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Ok(QuotientRing {
            vars,
            order,
            base,
            gb,
            basis,
            index,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn groebner_basis(&self) -> &[MultiPoly<F>] {
        &self.gb
    }

    pub fn standard_monomials(&self) -> &[Exponents] {
        &self.basis
    }

    pub fn basis_strings(&self) -> Vec<String> {
        self.basis
            .iter()
            .map(|e| MultiPoly::<F>::monomial(&self.vars, e.clone(), F::one()).to_string())
            .collect()
    }

    /// Coordinates of the class of `f` in the standard monomial basis.
    pub fn normal_form(&self, f: &MultiPoly<F>) -> Vec<F> {
        let r = reduce(f, &self.gb, self.order);
        let mut v = vec![F::zero().resolve_in(&self.base); self.dim()];
        for (e, c) in r.term_map() {
            let i = self.index[e];
            v[i] = c.clone();
        }
        v
    }

    pub fn monomial(&self, i: usize) -> MultiPoly<F> {
        MultiPoly::monomial(&self.vars, self.basis[i].clone(), F::one().resolve_in(&self.base))
    }

    /// Lifts coordinates back to a polynomial in standard monomials.
    pub fn lift(&self, v: &[F]) -> MultiPoly<F> {
        let mut p = MultiPoly::zero(&self.vars);
        for (e, c) in self.basis.iter().zip(v) {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn algebra(&self) -> Algebra<F> {
        let d = self.dim();
        let unit = self.normal_form(&MultiPoly::one(&self.vars));
        let products: Vec<Vec<Vec<F>>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| self.normal_form(&(self.monomial(i) * self.monomial(j))))
                    .collect()
            })
            .collect();
        Algebra::new(self.base.clone(), unit, products).expect("consistent shape")
    }
}
