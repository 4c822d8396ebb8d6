#![allow(dead_code)]

use hilbcalc::corealg::{BaseRing, Fp, Matrix, Ring};
use hilbcalc::finalg::Algebra;
use hilbcalc::hilbpts::SurjectionData;
use rand::Rng;

pub fn fp(p: u64) -> BaseRing {
    BaseRing::Fp { p }
}

pub fn monogenic(p: u64, f: &[i64]) -> Algebra<Fp> {
    let f: Vec<Fp> = f.iter().map(|&c| Fp::new(c, p)).collect();
    Algebra::monogenic(fp(p), &f)
}

/// `R[x_1..]/I` for a monomial ideal given by its staircase `basis`.
pub fn monomial_algebra<R: Ring>(base: BaseRing, basis: &[Vec<u32>]) -> Algebra<R> {
    let d = basis.len();
    let zero = || vec![R::from_int(0).resolve_in(&base); d];
    let mut unit = zero();
    let origin = basis.iter().position(|m| m.iter().all(|&e| e == 0)).expect("1 in the staircase");
    unit[origin] = R::from_int(1).resolve_in(&base);
    Algebra::from_products(base.clone(), unit, |i, j| {
        let m: Vec<u32> = basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect();
        let mut v = zero();
        if let Some(k) = basis.iter().position(|b| *b == m) {
            v[k] = R::from_int(1).resolve_in(&base);
        }
        v
    })
    .expect("staircase algebra")
}

/// The six rank 3 isotypes over `F_2` or `F_3`.
pub fn degree3_isotypes(p: u64) -> Vec<(&'static str, Algebra<Fp>)> {
    assert!(p == 2 || p == 3);
    let quad: &[i64] = if p == 2 { &[0, 1, 1] } else { &[0, 1, 0] };
    let cubic: &[i64] = if p == 2 { &[1, 1, 0] } else { &[1, -1, 0] };
    vec![
        ("k^3", Algebra::split(3, fp(p))),
        ("k x k[x]/x^2", monogenic(p, &[0, 0, -1])),
        ("k x F_p^2", monogenic(p, quad)),
        ("F_p^3", monogenic(p, cubic)),
        ("k[x]/x^3", monogenic(p, &[0, 0, 0])),
        ("k[x,y]/(x,y)^2", Algebra::square_zero_extension(2, fp(p))),
    ]
}

pub fn random_fp_matrix<G: Rng>(rng: &mut G, rows: usize, cols: usize, p: u64) -> Matrix<Fp> {
    let entries = (0..rows)
        .map(|_| (0..cols).map(|_| Fp::new(rng.gen_range(0..p as i64), p)).collect())
        .collect();
    Matrix::from_rows_sized(entries, cols)
}

pub fn random_invertible<G: Rng>(rng: &mut G, d: usize, p: u64) -> Matrix<Fp> {
    loop {
        let m = random_fp_matrix(rng, d, d, p);
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// A random algebra of rank `d` over `F_p` in a random basis.
pub fn random_algebra<G: Rng>(rng: &mut G, d: usize, p: u64) -> Algebra<Fp> {
    let a = match rng.gen_range(0..4) {
        0 => Algebra::split(d, fp(p)),
        1 if d >= 1 => Algebra::square_zero_extension(d - 1, fp(p)),
        _ => {
            let f: Vec<i64> = (0..d).map(|_| rng.gen_range(0..p as i64)).collect();
            monogenic(p, &f)
        }
    };
    a.change_basis(&random_invertible(rng, d, p)).expect("invertible")
}

/// Random generating images of `x_1..x_n` in a random rank `d` algebra.
pub fn random_surjection<G: Rng>(rng: &mut G, d: usize, n: usize, p: u64) -> SurjectionData<Fp> {
    let a = random_algebra(rng, d, p);
    loop {
        let images: Vec<Vec<Fp>> = (0..n)
            .map(|_| (0..d).map(|_| Fp::new(rng.gen_range(0..p as i64), p)).collect())
            .collect();
        if let Ok(s) = SurjectionData::new(a.clone(), images) {
            if s.is_surjective() {
                return s;
            }
        }
    }
}

/// Staircases (order ideals) of size `d` in `k` variables.
pub fn staircases(k: usize, d: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    let start = vec![vec![0u32; k]];
    grow(&start, d, &mut out);
    out.sort();
    out.dedup();
    out
}

fn grow(s: &[Vec<u32>], d: usize, out: &mut Vec<Vec<Vec<u32>>>) {
    if s.len() == d {
        let mut v = s.to_vec();
        v.sort();
        out.push(v);
        return;
    }
    for m in corners(s) {
        if s.last().is_some_and(|last| m <= *last) {
            continue;
        }
        let mut t = s.to_vec();
        t.push(m);
        grow(&t, d, out);
    }
}

/// Monomials outside `s` whose every predecessor lies in `s`.
fn corners(s: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let k = s[0].len();
    let mut c = Vec::new();
    for m in s {
        for v in 0..k {
            let mut n = m.clone();
            n[v] += 1;
            if s.contains(&n) || c.contains(&n) {
                continue;
            }
            let closed = (0..k).all(|w| {
                if n[w] == 0 {
                    return true;
                }
                let mut q = n.clone();
                q[w] -= 1;
                s.contains(&q)
            });
            if closed {
                c.push(n);
            }
        }
    }
    c
}

/// Minimal generators of the monomial ideal with staircase `s`.
pub fn staircase_generators(s: &[Vec<u32>]) -> Vec<Vec<u32>> {
    corners(s)
}

pub fn monomial_string(vars: &[&str], e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .zip(vars)
        .filter(|(&x, _)| x > 0)
        .map(|(&x, v)| if x == 1 { v.to_string() } else { format!("{v}^{x}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub const VARS: [&str; 3] = ["x", "y", "z"];

pub fn ideal_string(k: usize, gens: &[Vec<u32>]) -> String {
    gens.iter()
        .map(|g| monomial_string(&VARS[..k], g))
        .collect::<Vec<_>>()
        .join(", ")
}

/// `dim Hom_R(I/I^2, R/I)` for a zero-dimensional monomial ideal, computed as
/// the `k`-linear maps on the monomial basis of `I/I^2` commuting with every
/// variable.
pub fn direct_tangent_dim(s: &[Vec<u32>]) -> usize {
    use hilbcalc::BigRational;
    let k = s[0].len();
    let gens = staircase_generators(s);
    let in_i = |m: &[u32]| !s.iter().any(|b| b.as_slice() == m);
    let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    let squares: Vec<Vec<u32>> = gens
        .iter()
        .flat_map(|g| gens.iter().map(move |h| g.iter().zip(h).map(|(a, b)| a + b).collect()))
        .collect();
    let in_i2 = |m: &[u32]| squares.iter().any(|q| divides(q, m));
    let bound: Vec<u32> = (0..k)
        .map(|v| {
            let pure = gens.iter().find(|g| (0..k).all(|w| w == v || g[w] == 0)).expect("zero-dimensional");
            2 * pure[v]
        })
        .collect();
    let mut box_pts = vec![vec![]];
    for &b in &bound {
        box_pts = box_pts
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    let cot: Vec<Vec<u32>> = box_pts.into_iter().filter(|m| in_i(m) && !in_i2(m)).collect();
    let d = s.len();
    let unknown = |b: usize, j: usize| b * d + j;
    let ncols = cot.len() * d;
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let shift = |m: &[u32], v: usize| {
        let mut n = m.to_vec();
        n[v] += 1;
        n
    };
    for (bi, b) in cot.iter().enumerate() {
        for v in 0..k {
            let xb = shift(b, v);
            let target = cot.iter().position(|c| *c == xb);
            // coordinate t of x_v * psi(b) - psi(x_v b)
            for (t, st) in s.iter().enumerate() {
                let mut row = vec![BigRational::from_int(0); ncols];
                for (j, sj) in s.iter().enumerate() {
                    if shift(sj, v) == *st {
                        row[unknown(bi, j)] = BigRational::from_int(1);
                    }
                }
                if let Some(c) = target {
                    row[unknown(c, t)] = row[unknown(c, t)].clone() - BigRational::from_int(1);
                }
                if row.iter().any(|x| *x != BigRational::from_int(0)) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return ncols;
    }
    ncols - Matrix::from_rows_sized(rows, ncols).rank()
}
