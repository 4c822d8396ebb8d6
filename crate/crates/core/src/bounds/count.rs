//! Exhaustive point counts over small prime fields.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{codim_nonsurjective_linear, BoundsError};
use crate::corealg::is_prime;

pub const COUNT_LIMIT: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountKind {
    LinearMaps,
    AlgebraHoms,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub kind: CountKind,
    pub n: usize,
    /// Target dimension for linear maps, algebra rank for homomorphisms.
    pub r: usize,
    pub p: u64,
    pub total: u64,
    pub nonsurjective: u64,
    /// Closed-form count of the same set.
    pub formula: u64,
    /// Codimension of the non-surjective locus, when inside the regime.
    pub codimension: Option<usize>,
    /// Dimension of the non-surjective locus, when inside the regime.
    pub expected_dimension: Option<usize>,
}

impl CountReport {
    pub fn matches_formula(&self) -> bool {
        self.nonsurjective == self.formula
    }

    pub fn fraction(&self) -> f64 {
        self.nonsurjective as f64 / self.total as f64
    }
}

fn budget(p: u64, exponent: usize) -> Result<u64, BoundsError> {
    if !is_prime(p) {
        return Err(BoundsError::NotPrime(p));
    }
    u32::try_from(exponent)
        .ok()
        .and_then(|e| p.checked_pow(e))
        .filter(|&t| t <= COUNT_LIMIT)
        .ok_or_else(|| BoundsError::SizeLimit(format!("{p}^{exponent} exceeds {COUNT_LIMIT}")))
}

/// `Π_{i<r} (p^n - p^i)`, the number of surjections `F_p^n -> F_p^r`.
pub fn surjection_count(n: usize, r: usize, p: u64) -> u64 {
    if r > n {
        return 0;
    }
    let pn = p.pow(n as u32);
    (0..r).map(|i| pn - p.pow(i as u32)).product()
}

struct Fp32 {
    p: u32,
    inv: Vec<u32>,
}

impl Fp32 {
    fn new(p: u64) -> Self {
        let p = p as u32;
        let mut inv = vec![0; p as usize];
        for a in 1..p {
            inv[a as usize] = (1..p).find(|b| a * b % p == 1).unwrap();
        }
        Fp32 { p, inv }
    }

    /// Rank of a row-major `rows × cols` matrix, destroying it.
    fn rank(&self, m: &mut [u32], rows: usize, cols: usize) -> usize {
        let p = self.p;
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            for j in 0..cols {
                m.swap(rank * cols + j, piv * cols + j);
            }
            let s = self.inv[m[rank * cols + c] as usize];
            for j in c..cols {
                m[rank * cols + j] = m[rank * cols + j] * s % p;
            }
            for i in rank + 1..rows {
                let f = m[i * cols + c];
                if f != 0 {
                    for j in c..cols {
                        m[i * cols + j] = (m[i * cols + j] + (p - f) * m[rank * cols + j]) % p;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

fn digits(mut x: u64, p: u64, out: &mut [u32]) {
    for d in out.iter_mut() {
        *d = (x % p) as u32;
        x /= p;
    }
}

/// Counts non-surjective `F_p`-linear maps `F_p^n -> F_p^r` by listing all
/// `r × n` matrices, sharded on the first row.
pub fn count_nonsurjective_linear(n: usize, r: usize, p: u64) -> Result<CountReport, BoundsError> {
    if n == 0 || r == 0 {
        return Err(BoundsError::OutOfRegime("need n, r >= 1".into()));
    }
    let total = budget(p, n * r)?;
    let field = Fp32::new(p);
    let first_rows = p.pow(n as u32);
    let rest = total / first_rows;
    let nonsurjective: u64 = (0..first_rows)
        .into_par_iter()
        .map(|head| {
            let mut m = vec![0u32; r * n];
            let mut work = vec![0u32; r * n];
            digits(head, p, &mut m[..n]);
            let mut bad = 0;
            for tail in 0..rest {
                digits(tail, p, &mut m[n..]);
                work.copy_from_slice(&m);
                if field.rank(&mut work, r, n) < r {
                    bad += 1;
                }
            }
            bad
        })
        .sum();
    let codimension = codim_nonsurjective_linear(n, r).ok();
    Ok(CountReport {
        kind: CountKind::LinearMaps,
        n,
        r,
        p,
        total,
        nonsurjective,
        formula: total - surjection_count(n, r, p),
        codimension,
        expected_dimension: codimension.map(|c| n * r - c),
    })
}

/// Structure constants of a small algebra over `F_p`, as `u32` residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallAlgebra {
    pub p: u64,
    pub rank: usize,
    pub unit: Vec<u32>,
    /// `mult[(i * rank + j) * rank + k]`.
    pub mult: Vec<u32>,
}

impl SmallAlgebra {
    /// `F_p ⊕ F_p^m` with `e_i e_j = 0` for `i, j ≥ 1`.
    pub fn square_zero(m: usize, p: u64) -> Self {
        let d = m + 1;
        let mut mult = vec![0; d * d * d];
        for j in 0..d {
            mult[j * d + j] = 1;
            mult[(j * d) * d + j] = 1;
        }
        let mut unit = vec![0; d];
        unit[0] = 1;
        SmallAlgebra { p, rank: d, unit, mult }
    }

    fn mul(&self, x: &[u32], y: &[u32], out: &mut [u32]) {
        let d = self.rank;
        let p = self.p as u32;
        out.iter_mut().for_each(|o| *o = 0);
        for i in 0..d {
            if x[i] == 0 {
                continue;
            }
            for j in 0..d {
                let xy = x[i] * y[j] % p;
                if xy == 0 {
                    continue;
                }
                for k in 0..d {
                    out[k] = (out[k] + xy * self.mult[(i * d + j) * d + k]) % p;
                }
            }
        }
    }

    /// Whether `gens` and `1` generate the algebra.
    fn generates(&self, field: &Fp32, gens: &[Vec<u32>]) -> bool {
        let d = self.rank;
        let mut span: Vec<Vec<u32>> = vec![self.unit.clone()];
        let mut prod = vec![0; d];
        for _ in 0..d {
            let mut cand = span.clone();
            for s in &span {
                for g in gens {
                    self.mul(s, g, &mut prod);
                    cand.push(prod.clone());
                }
            }
            let basis = independent_rows(field, &cand, d);
            if basis.len() == d {
                return true;
            }
            if basis.len() == span.len() {
                return false;
            }
            span = basis;
        }
        false
    }
}

fn independent_rows(field: &Fp32, rows: &[Vec<u32>], d: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    for r in rows {
        let mut m: Vec<u32> = out.iter().flatten().copied().chain(r.iter().copied()).collect();
        if field.rank(&mut m, out.len() + 1, d) == out.len() + 1 {
            out.push(r.clone());
            if out.len() == d {
                break;
            }
        }
    }
    out
}

/// Counts `F_p`-algebra maps `F_p[x_1, ..., x_n] -> A` that are not surjective,
/// deciding surjectivity by closing the image under products.
pub fn count_nonsurjective_homs(alg: &SmallAlgebra, n: usize) -> Result<CountReport, BoundsError> {
    if n == 0 {
        return Err(BoundsError::OutOfRegime("need n >= 1".into()));
    }
    let d = alg.rank;
    let p = alg.p;
    let total = budget(p, n * d)?;
    let field = Fp32::new(p);
    let per_elem = p.pow(d as u32);
    let rest = total / per_elem;
    let nonsurjective: u64 = (0..per_elem)
        .into_par_iter()
        .map(|head| {
            let mut flat = vec![0u32; n * d];
            digits(head, p, &mut flat[..d]);
            let mut bad = 0;
            for tail in 0..rest {
                digits(tail, p, &mut flat[d..]);
                let gens: Vec<Vec<u32>> = flat.chunks(d).map(<[u32]>::to_vec).collect();
                if !alg.generates(&field, &gens) {
                    bad += 1;
                }
            }
            bad
        })
        .sum();
    Ok(CountReport {
        kind: CountKind::AlgebraHoms,
        n,
        r: d,
        p,
        total,
        nonsurjective,
        formula: 0,
        codimension: None,
        expected_dimension: None,
    })
}

/// Maps into `F_p[x, y]/(x, y)^2`: surjective exactly when the projections to
/// the maximal ideal span it, so the closed form is `p^n` times the linear count with `r = 2`.
pub fn count_nonsurjective_algebra_homs(n: usize, p: u64) -> Result<CountReport, BoundsError> {
    let mut report = count_nonsurjective_homs(&SmallAlgebra::square_zero(2, p), n)?;
    report.formula = p.pow(n as u32) * (p.pow(2 * n as u32) - surjection_count(n, 2, p));
    if n >= 2 {
        report.codimension = Some(n - 1);
        report.expected_dimension = Some(3 * n - (n - 1));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_linear_counts() {
        let r = count_nonsurjective_linear(2, 2, 2).unwrap();
        assert_eq!((r.nonsurjective, r.total), (10, 16));
        assert!(r.matches_formula());
        let r = count_nonsurjective_linear(3, 2, 2).unwrap();
        assert_eq!((r.nonsurjective, r.total), (22, 64));
        assert_eq!(r.expected_dimension, Some(4));
        for p in [2, 3, 5] {
            let r = count_nonsurjective_linear(3, 1, p).unwrap();
            assert_eq!(r.nonsurjective, 1);
        }
    }

    #[test]
    fn homs_to_the_square_zero_plane() {
        let r = count_nonsurjective_algebra_homs(3, 2).unwrap();
        assert_eq!((r.nonsurjective, r.total), (176, 512));
        assert!(r.matches_formula());
        let lin = count_nonsurjective_linear(3, 2, 2).unwrap();
        assert_eq!(r.nonsurjective, 8 * lin.nonsurjective);
        let one = count_nonsurjective_algebra_homs(1, 3).unwrap();
        assert_eq!(one.nonsurjective, one.total);
        let two = count_nonsurjective_algebra_homs(2, 2).unwrap();
        assert_eq!(two.nonsurjective, 4 * (16 - 6));
    }

    #[test]
    fn limits() {
        assert_eq!(count_nonsurjective_linear(2, 2, 4), Err(BoundsError::NotPrime(4)));
        assert!(matches!(count_nonsurjective_linear(24, 1, 2), Err(BoundsError::SizeLimit(_))));
    }
}
