//! Buchberger's algorithm with cofactor tracking.

use crate::corealg::{Exponents, Field, MonomialOrder, MultiPoly, Ring, Vars};

pub(crate) fn divides(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn lcm(a: &[i32], b: &[i32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn quotient_exp(b: &[i32], a: &[i32]) -> Exponents {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub(crate) fn lead<F: Field>(p: &MultiPoly<F>, order: MonomialOrder) -> (Exponents, F) {
    let (e, c) = p.leading(order).expect("nonzero polynomial");
    (e.clone(), c.clone())
}

/// Multivariate division: `f = Σ q[k] g[k] + r` with no term of `r`
/// divisible by a leading monomial of `g`.
pub fn divide<F: Field>(
    f: &MultiPoly<F>,
    gs: &[MultiPoly<F>],
    order: MonomialOrder,
) -> (Vec<MultiPoly<F>>, MultiPoly<F>) {
    let vars = f.vars().clone();
    let leads: Vec<(Exponents, F)> = gs.iter().map(|g| lead(g, order)).collect();
    let mut q = vec![MultiPoly::zero(&vars); gs.len()];
    let mut r = MultiPoly::zero(&vars);
    let mut p = f.clone();
    while !p.is_zero() {
        let (e, c) = lead(&p, order);
        match leads.iter().position(|(le, _)| divides(le, &e)) {
            Some(k) => {
                let m = quotient_exp(&e, &leads[k].0);
                let coef = c.div(&leads[k].1).expect("nonzero leading coefficient");
                q[k].add_term(m.clone(), coef.clone());
                p = p - gs[k].mul_term(&m, &coef);
            }
            None => {
                r.add_term(e.clone(), c.clone());
                p = p - MultiPoly::monomial(&vars, e, c);
            }
        }
    }
    (q, r)
}

pub fn reduce<F: Field>(f: &MultiPoly<F>, gs: &[MultiPoly<F>], order: MonomialOrder) -> MultiPoly<F> {
    divide(f, gs, order).1
}

/// `(lcm / lt(f)) f / lc(f) - (lcm / lt(g)) g / lc(g)`.
pub fn s_polynomial<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, order: MonomialOrder) -> MultiPoly<F> {
    let (ef, cf) = lead(f, order);
    let (eg, cg) = lead(g, order);
    let l = lcm(&ef, &eg);
    let a = f.mul_term(&quotient_exp(&l, &ef), &cf.inv().unwrap());
    let b = g.mul_term(&quotient_exp(&l, &eg), &cg.inv().unwrap());
    a - b
}

/// A reduced Gröbner basis together with its expression in the input
/// generators: `basis[k] = Σ_j cofactors[k][j] * gens[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerTrace<F: Ring> {
    pub basis: Vec<MultiPoly<F>>,
    pub cofactors: Vec<Vec<MultiPoly<F>>>,
}

#[derive(Clone)]
struct Labeled<F> {
    p: MultiPoly<F>,
    cof: Vec<MultiPoly<F>>,
}

fn reduce_labeled<F: Field>(f: Labeled<F>, gs: &[&Labeled<F>], order: MonomialOrder) -> Labeled<F> {
    let polys: Vec<MultiPoly<F>> = gs.iter().map(|g| g.p.clone()).collect();
    let (q, r) = divide(&f.p, &polys, order);
    let mut cof = f.cof;
    for (qk, g) in q.iter().zip(gs) {
        if qk.is_zero() {
            continue;
        }
        for (c, gc) in cof.iter_mut().zip(&g.cof) {
            *c = c.clone() - qk.clone() * gc.clone();
        }
    }
    Labeled { p: r, cof }
}

fn combine<F: Field>(a: &Labeled<F>, ma: &MultiPoly<F>, b: &Labeled<F>, mb: &MultiPoly<F>) -> Labeled<F> {
    Labeled {
        p: ma.clone() * a.p.clone() - mb.clone() * b.p.clone(),
        cof: a
            .cof
            .iter()
            .zip(&b.cof)
            .map(|(x, y)| ma.clone() * x.clone() - mb.clone() * y.clone())
            .collect(),
    }
}

pub fn groebner_with_cofactors<F: Field>(
    vars: &Vars,
    gens: &[MultiPoly<F>],
    order: MonomialOrder,
) -> GroebnerTrace<F> {
    let r = gens.len();
    let unit = |j: usize| -> Vec<MultiPoly<F>> {
        (0..r)
            .map(|k| if k == j { MultiPoly::one(vars) } else { MultiPoly::zero(vars) })
            .collect()
    };
    let mut g: Vec<Labeled<F>> = gens
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(j, p)| Labeled {
            p: p.clone(),
            cof: unit(j),
        })
        .collect();

    let mut pairs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (ei, ci) = lead(&g[i].p, order);
        let (ej, cj) = lead(&g[j].p, order);
        let l = lcm(&ei, &ej);
        if l.iter().zip(&ei).zip(&ej).all(|((x, a), b)| *x == a + b) {
            // coprime leading monomials: the S-polynomial reduces to zero
            continue;
        }
        let mi = MultiPoly::monomial(vars, quotient_exp(&l, &ei), ci.inv().unwrap());
        let mj = MultiPoly::monomial(vars, quotient_exp(&l, &ej), cj.inv().unwrap());
        let s = combine(&g[i], &mi, &g[j], &mj);
        let refs: Vec<&Labeled<F>> = g.iter().collect();
        let h = reduce_labeled(s, &refs, order);
        if !h.p.is_zero() {
            let n = g.len();
            g.push(h);
            pairs.extend((0..n).map(|k| (k, n)));
        }
    }

    // Minimize: drop elements whose leading monomial is divisible by another's.
    let leads: Vec<Exponents> = g.iter().map(|x| lead(&x.p, order).0).collect();
    let mut keep = vec![true; g.len()];
    for i in 0..g.len() {
        for j in 0..g.len() {
            if i != j && keep[j] && divides(&leads[j], &leads[i]) && (leads[i] != leads[j] || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut min: Vec<Labeled<F>> = g
        .into_iter()
        .zip(keep)
        .filter_map(|(x, k)| k.then_some(x))
        .collect();

    // Interreduce and normalize.
    for i in 0..min.len() {
        let others: Vec<&Labeled<F>> = min.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, x)| x).collect();
        let h = reduce_tail(min[i].clone(), &others, order);
        min[i] = h;
    }
    for x in min.iter_mut() {
        let (_, c) = lead(&x.p, order);
        let inv = c.inv().unwrap();
        x.p = x.p.scale(&inv);
        x.cof = x.cof.iter().map(|c| c.scale(&inv)).collect();
    }
    min.sort_by(|a, b| order.cmp(&lead(&a.p, order).0, &lead(&b.p, order).0));
    GroebnerTrace {
        basis: min.iter().map(|x| x.p.clone()).collect(),
        cofactors: min.into_iter().map(|x| x.cof).collect(),
    }
}

/// Reduces every non-leading term of `f`; the leading term is kept since
/// the basis is already minimal.
fn reduce_tail<F: Field>(f: Labeled<F>, gs: &[&Labeled<F>], order: MonomialOrder) -> Labeled<F> {
    let vars = f.p.vars().clone();
    let (e, c) = lead(&f.p, order);
    let head = MultiPoly::monomial(&vars, e, c);
    let tail = Labeled {
        p: f.p.clone() - head.clone(),
        cof: f.cof.clone(),
    };
    // Reduce the tail as a polynomial, then fix cofactors.
    let polys: Vec<MultiPoly<F>> = gs.iter().map(|g| g.p.clone()).collect();
    let (q, r) = divide(&tail.p, &polys, order);
    let mut cof = f.cof;
    for (qk, g) in q.iter().zip(gs) {
        if qk.is_zero() {
            continue;
        }
        for (c, gc) in cof.iter_mut().zip(&g.cof) {
            *c = c.clone() - qk.clone() * gc.clone();
        }
    }
    Labeled { p: head + r, cof }
}
