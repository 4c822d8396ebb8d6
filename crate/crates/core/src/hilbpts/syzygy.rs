//! Syzygies and the tangent space `Hom(I/I^2, k[x]/I)`.

use serde::{Deserialize, Serialize};

use super::groebner::{divide, lcm, lead, quotient_exp};
use super::{HilbError, IdealPoint};
use crate::corealg::{ExactLinalg, Field, Matrix, MultiPoly};

/// A relation `Σ h_j f_j = 0`, stored as the vector `(h_1, ..., h_r)`.
pub type Syzygy<F> = Vec<MultiPoly<F>>;

/// Colength bound for the Schreyer path on non-monomial ideals.
pub const GENERAL_TANGENT_LIMIT: usize = 6;

/// Pairwise relations `(lcm/m_i) e_i - (lcm/m_j) e_j` of monomial generators,
/// listed by increasing index gap.
pub fn taylor_syzygies<F: Field>(gens: &[MultiPoly<F>]) -> Result<Vec<Syzygy<F>>, HilbError> {
    let mut monos = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let (e, c) = g
            .terms()
            .first()
            .filter(|_| g.is_monomial())
            .map(|(e, c)| ((*e).clone(), (*c).clone()))
            .ok_or(HilbError::NonMonomial(i))?;
        monos.push((e, c));
    }
    let r = gens.len();
    let mut out = Vec::new();
    for gap in 1..r {
        for i in 0..r - gap {
            let j = i + gap;
            let vars = gens[i].vars();
            let l = lcm(&monos[i].0, &monos[j].0);
            let mut s = vec![MultiPoly::zero(vars); r];
            s[i] = MultiPoly::monomial(vars, quotient_exp(&l, &monos[i].0), monos[i].1.inv().unwrap());
            s[j] = MultiPoly::monomial(vars, quotient_exp(&l, &monos[j].0), -monos[j].1.inv().unwrap());
            out.push(s);
        }
    }
    Ok(out)
}

/// Generators of the syzygy module of the point's generators, lifted from
/// Schreyer syzygies of its Gröbner basis.
pub fn schreyer_syzygies<F: Field + ExactLinalg>(p: &IdealPoint<F>) -> Vec<Syzygy<F>> {
    let vars = p.vars();
    let order = p.order();
    let trace = p.groebner_trace();
    let g = &trace.basis;
    let a = &trace.cofactors;
    let r = p.gens().len();
    let s = g.len();
    let to_gens = |sigma: &[MultiPoly<F>]| -> Syzygy<F> {
        (0..r)
            .map(|j| {
                sigma
                    .iter()
                    .zip(a)
                    .fold(MultiPoly::zero(vars), |acc, (sm, am)| acc + sm.clone() * am[j].clone())
            })
            .collect()
    };
    let mut out = Vec::new();
    for k in 0..s {
        for l in k + 1..s {
            let (ek, ck) = lead(&g[k], order);
            let (el, cl) = lead(&g[l], order);
            let m = lcm(&ek, &el);
            let mk = MultiPoly::monomial(vars, quotient_exp(&m, &ek), ck.inv().unwrap());
            let ml = MultiPoly::monomial(vars, quotient_exp(&m, &el), cl.inv().unwrap());
            let spoly = mk.clone() * g[k].clone() - ml.clone() * g[l].clone();
            let (q, rem) = divide(&spoly, g, order);
            debug_assert!(rem.is_zero());
            let mut sigma: Vec<MultiPoly<F>> = q.into_iter().map(|x| -x).collect();
            sigma[k] = sigma[k].clone() + mk;
            sigma[l] = sigma[l].clone() - ml;
            out.push(to_gens(&sigma));
        }
    }
    for j in 0..r {
        let (q, rem) = divide(&p.gens()[j], g, order);
        debug_assert!(rem.is_zero());
        let mut col = to_gens(&q).into_iter().map(|x| -x).collect::<Vec<_>>();
        col[j] = col[j].clone() + MultiPoly::one(vars);
        if col.iter().any(|x| !x.is_zero()) {
            out.push(col);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SyzygyMethod {
    Taylor,
    Schreyer,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentReport {
    pub dim: usize,
    pub colength: usize,
    pub generators: usize,
    pub syzygies: usize,
    pub method: SyzygyMethod,
}

/// Dimension of `{(a_j) ∈ A^r : Σ h_j a_j = 0 for every syzygy h}`, `A = k[x]/I`.
pub fn tangent_space<F: Field + ExactLinalg>(p: &IdealPoint<F>) -> Result<TangentReport, HilbError> {
    let q = p.quotient()?;
    let d = q.dim();
    if d == 0 {
        return Err(HilbError::UnitIdeal);
    }
    let (syz, method) = if p.is_monomial() {
        (taylor_syzygies(p.gens())?, SyzygyMethod::Taylor)
    } else {
        if d > GENERAL_TANGENT_LIMIT {
            return Err(HilbError::SizeLimit(format!(
                "non-monomial tangent spaces need colength <= {GENERAL_TANGENT_LIMIT}, got {d}"
            )));
        }
        (schreyer_syzygies(p), SyzygyMethod::Schreyer)
    };
    let alg = q.algebra();
    let r = p.gens().len();
    let mut m = Matrix::<F>::zeros(syz.len() * d, r * d);
    for (s, h) in syz.iter().enumerate() {
        for (j, hj) in h.iter().enumerate() {
            let block = alg.left_mult_matrix(&q.normal_form(hj));
            for a in 0..d {
                for b in 0..d {
                    m[(s * d + a, j * d + b)] = block[(a, b)].clone();
                }
            }
        }
    }
    let dim = if syz.is_empty() { r * d } else { m.kernel_basis().len() };
    Ok(TangentReport {
        dim,
        colength: d,
        generators: r,
        syzygies: syz.len(),
        method,
    })
}

pub fn tangent_space_dim<F: Field + ExactLinalg>(p: &IdealPoint<F>) -> Result<usize, HilbError> {
    tangent_space(p).map(|t| t.dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corealg::{BaseRing, Fp, MonomialOrder};
    use num_rational::BigRational;

    fn q_point(ideal: &str, vars: &[&str]) -> IdealPoint<BigRational> {
        IdealPoint::parse(ideal, vars, BaseRing::Q, MonomialOrder::Degrevlex).unwrap()
    }

    #[test]
    fn taylor_pairs() {
        let p = q_point("x^2, x*y, y^2", &["x", "y"]);
        let syz = taylor_syzygies(p.gens()).unwrap();
        let shown: Vec<Vec<String>> = syz.iter().map(|s| s.iter().map(|h| h.to_string()).collect()).collect();
        assert_eq!(shown, [["y", "-x", "0"], ["0", "y", "-x"], ["y^2", "0", "-x^2"]]);
        assert!(taylor_syzygies(&p.gens()[..1]).unwrap().is_empty());
        let general = q_point("x^2 - y, y^2", &["x", "y"]);
        assert_eq!(taylor_syzygies(general.gens()), Err(HilbError::NonMonomial(0)));
    }

    #[test]
    fn fat_point_in_the_plane() {
        assert_eq!(tangent_space_dim(&q_point("x^2, x*y, y^2", &["x", "y"])).unwrap(), 6);
        for p in [2, 5] {
            let pt = IdealPoint::<Fp>::parse("x^2, x*y, y^2", &["x", "y"], BaseRing::fp(p).unwrap(), MonomialOrder::Degrevlex)
                .unwrap();
            assert_eq!(tangent_space_dim(&pt).unwrap(), 6);
        }
    }

    #[test]
    fn reduced_point_is_smooth() {
        assert_eq!(tangent_space_dim(&q_point("x, y", &["x", "y"])).unwrap(), 2);
    }

    #[test]
    fn fat_point_in_space() {
        assert_eq!(tangent_space_dim(&q_point("z, x^2, x*y, y^2", &["x", "y", "z"])).unwrap(), 9);
    }

    #[test]
    fn curvilinear_point_by_schreyer() {
        let p = q_point("x^2 - y, y^2", &["x", "y"]);
        let t = tangent_space(&p).unwrap();
        assert_eq!(t.method, SyzygyMethod::Schreyer);
        assert_eq!((t.colength, t.dim), (4, 8));
    }

    #[test]
    fn schreyer_agrees_with_taylor_on_monomials() {
        let p = q_point("x^3, x*y, y^2", &["x", "y"]);
        let move_one = p.with_gens(vec![p.gens()[0].clone() + p.gens()[1].clone(), p.gens()[1].clone(), p.gens()[2].clone()]);
        assert_eq!(tangent_space(&move_one).unwrap().method, SyzygyMethod::Schreyer);
        assert_eq!(tangent_space_dim(&p).unwrap(), tangent_space_dim(&move_one).unwrap());
    }

    #[test]
    fn unit_ideal_has_no_tangent_space() {
        assert_eq!(tangent_space_dim(&q_point("1", &["x"])), Err(HilbError::UnitIdeal));
    }
}
