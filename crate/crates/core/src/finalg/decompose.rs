//! Splitting finite algebras over a field into local factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Algebra, AlgebraError};
use crate::corealg::{ExactLinalg, Field, Fp, Matrix, UniPoly};

/// Exhaustive searches over `F_p` stop beyond this many elements.
pub const FP_ENUMERATION_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FactorType {
    pub rank: usize,
    pub residue_degree: usize,
    /// `dim m^i / m^(i+1)` over the residue field, starting at `i = 0`.
    pub hilbert_function: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypeReport {
    pub rank: usize,
    pub factors: Vec<FactorType>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lci: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalDecomposition<F> {
    pub factors: Vec<Algebra<F>>,
    pub idempotents: Vec<Vec<F>>,
    /// Columns are the concatenated factor bases; conjugating the input by it
    /// gives the direct product of `factors`.
    pub base_change: Matrix<F>,
}

/// Fields over which local factors can be computed.
pub trait LocalField: Field + ExactLinalg {
    fn primitive_idempotents(a: &Algebra<Self>) -> Result<Vec<Vec<Self>>, AlgebraError>;
    /// Basis of the nilradical.
    fn radical(a: &Algebra<Self>) -> Result<Vec<Vec<Self>>, AlgebraError>;
    fn is_local(a: &Algebra<Self>) -> Result<bool, AlgebraError>;
}

fn independent<F: Field>(n: usize, vs: &[Vec<F>]) -> Vec<Vec<F>> {
    if vs.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_cols(n, vs);
    m.rref().pivots.iter().map(|&j| vs[j].clone()).collect()
}

fn ideal_basis<F: Field>(a: &Algebra<F>, e: &[F]) -> Vec<Vec<F>> {
    let cols: Vec<Vec<F>> = (0..a.rank()).map(|j| a.mul(e, &a.basis_vector(j))).collect();
    independent(a.rank(), &cols)
}

/// The subalgebra spanned by `basis`, with unit `e`.
fn restrict<F: Field + ExactLinalg>(a: &Algebra<F>, basis: &[Vec<F>], e: &[F]) -> Result<Algebra<F>, AlgebraError> {
    let bm = Matrix::from_cols(a.rank(), basis);
    let solve = |v: &[F]| {
        F::solve(&bm, v).ok_or_else(|| AlgebraError::Internal("subalgebra is not closed".into()))
    };
    let unit = solve(e)?;
    let r = basis.len();
    let mut mult = Vec::with_capacity(r * r * r);
    for x in basis {
        for y in basis {
            mult.extend(solve(&a.mul(x, y))?);
        }
    }
    Algebra::from_flat(a.base().clone(), r, unit, mult)
}

pub fn local_decomposition<F: LocalField>(a: &Algebra<F>) -> Result<LocalDecomposition<F>, AlgebraError> {
    a.check_axioms().into_result()?;
    let d = a.rank();
    if d == 0 {
        return Ok(LocalDecomposition {
            factors: Vec::new(),
            idempotents: Vec::new(),
            base_change: Matrix::zeros(0, 0),
        });
    }
    let idempotents = F::primitive_idempotents(a)?;
    let mut factors = Vec::new();
    let mut cols = Vec::new();
    for e in &idempotents {
        let basis = ideal_basis(a, e);
        let b = restrict(a, &basis, e)?;
        if !F::is_local(&b)? {
            return Err(AlgebraError::Internal("factor is not local".into()));
        }
        cols.extend(basis);
        factors.push(b);
    }
    let base_change = Matrix::from_cols(d, &cols);
    if cols.len() != d || F::invert(&base_change).is_none() {
        return Err(AlgebraError::Internal("factor bases do not span".into()));
    }
    Ok(LocalDecomposition {
        factors,
        idempotents,
        base_change,
    })
}

/// Residue degree and Hilbert function of a local algebra.
fn hilbert_function<F: LocalField>(b: &Algebra<F>) -> Result<FactorType, AlgebraError> {
    let r = b.rank();
    let m = F::radical(b)?;
    let f = r - m.len();
    if f == 0 {
        return Err(AlgebraError::Internal("radical is everything".into()));
    }
    let mut dims = vec![r, m.len()];
    let mut cur = m.clone();
    while !cur.is_empty() {
        let prods: Vec<Vec<F>> = cur
            .iter()
            .flat_map(|x| m.iter().map(|y| b.mul(x, y)))
            .collect();
        cur = independent(r, &prods);
        dims.push(cur.len());
    }
    let mut h = Vec::new();
    for w in dims.windows(2) {
        let gap = w[0] - w[1];
        if gap == 0 {
            break;
        }
        if gap % f != 0 {
            return Err(AlgebraError::Internal("graded piece is not a residue-field space".into()));
        }
        h.push(gap / f);
    }
    Ok(FactorType {
        rank: r,
        residue_degree: f,
        hilbert_function: h,
    })
}

pub fn isotype_report<F: LocalField>(a: &Algebra<F>) -> Result<IsotypeReport, AlgebraError> {
    let dec = local_decomposition(a)?;
    let mut factors = dec
        .factors
        .iter()
        .map(hilbert_function)
        .collect::<Result<Vec<_>, _>>()?;
    factors.sort_by(|x, y| y.cmp(x));
    let mass: usize = factors
        .iter()
        .map(|t| t.residue_degree * t.hilbert_function.iter().sum::<usize>())
        .sum();
    if mass != a.rank() {
        return Err(AlgebraError::Internal("factor sizes do not add up".into()));
    }
    Ok(IsotypeReport {
        rank: a.rank(),
        factors,
        lci: None,
    })
}

/// Isotype invariants of a rank 3 algebra; `lci` is false exactly when some
/// local factor has embedding dimension 2.
pub fn classify_degree3<F: LocalField>(a: &Algebra<F>) -> Result<IsotypeReport, AlgebraError> {
    if a.rank() != 3 {
        return Err(AlgebraError::WrongRank {
            expected: 3,
            found: a.rank(),
        });
    }
    let mut rep = isotype_report(a)?;
    rep.lci = Some(
        rep.factors
            .iter()
            .all(|t| t.hilbert_function.get(1).copied().unwrap_or(0) <= 1),
    );
    Ok(rep)
}

// ---- F_p ----

struct SmallTensor {
    p: u64,
    d: usize,
    c: Vec<u64>,
    unit: Vec<u64>,
}

fn residue(x: &Fp, p: u64) -> u64 {
    x.value().rem_euclid(p as i64) as u64
}

impl SmallTensor {
    fn new(a: &Algebra<Fp>) -> Result<Self, AlgebraError> {
        let p = prime_of(a)?;
        let d = a.rank();
        let size = (p as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
        if d > 6 || size > FP_ENUMERATION_LIMIT as u128 {
            return Err(AlgebraError::SizeLimit(format!(
                "exhaustive search needs rank <= 6 and p^d <= {FP_ENUMERATION_LIMIT}, got p = {p}, d = {d}"
            )));
        }
        Ok(SmallTensor {
            p,
            d,
            c: a.mult_flat().iter().map(|x| residue(x, p)).collect(),
            unit: a.unit().iter().map(|x| residue(x, p)).collect(),
        })
    }

    fn count(&self) -> u64 {
        self.p.pow(self.d as u32)
    }

    fn element(&self, mut n: u64) -> Vec<u64> {
        let mut v = vec![0; self.d];
        for x in v.iter_mut() {
            *x = n % self.p;
            n /= self.p;
        }
        v
    }

    fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let (d, p) = (self.d, self.p);
        let mut out = vec![0u64; d];
        for i in 0..d {
            if x[i] == 0 {
                continue;
            }
            for j in 0..d {
                if y[j] == 0 {
                    continue;
                }
                let s = x[i] * y[j] % p;
                let row = &self.c[(i * d + j) * d..(i * d + j + 1) * d];
                for k in 0..d {
                    out[k] = (out[k] + s * row[k]) % p;
                }
            }
        }
        out
    }

    fn pow(&self, x: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = self.unit.clone();
        let mut b = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    fn det_nonzero(&self, x: &[u64]) -> bool {
        let (d, p) = (self.d, self.p);
        // m[row][col] = coefficient of e_row in x * e_col
        let mut m = vec![vec![0u64; d]; d];
        for col in 0..d {
            let mut e = vec![0; d];
            e[col] = 1;
            for (row, v) in self.mul(x, &e).into_iter().enumerate() {
                m[row][col] = v;
            }
        }
        for c in 0..d {
            let Some(piv) = (c..d).find(|&r| m[r][c] != 0) else {
                return false;
            };
            m.swap(c, piv);
            let inv = mod_pow(m[c][c], p - 2, p);
            for r in c + 1..d {
                if m[r][c] == 0 {
                    continue;
                }
                let f = m[r][c] * inv % p;
                for j in c..d {
                    m[r][j] = (m[r][j] + (p - f) * m[c][j]) % p;
                }
            }
        }
        true
    }

    fn lift(&self, v: &[u64]) -> Vec<Fp> {
        v.iter().map(|&x| Fp::new(x as i64, self.p)).collect()
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn prime_of(a: &Algebra<Fp>) -> Result<u64, AlgebraError> {
    match a.base() {
        crate::corealg::BaseRing::Fp { p } => Ok(*p),
        b => Err(AlgebraError::Unsupported(format!("expected a prime field base, got {b}"))),
    }
}

impl LocalField for Fp {
    fn primitive_idempotents(a: &Algebra<Self>) -> Result<Vec<Vec<Self>>, AlgebraError> {
        let t = SmallTensor::new(a)?;
        let idems: Vec<Vec<u64>> = (1..t.count())
            .into_par_iter()
            .map(|n| t.element(n))
            .filter(|x| t.mul(x, x) == *x)
            .collect();
        let prim: Vec<Vec<u64>> = idems
            .iter()
            .filter(|e| !idems.iter().any(|f| f != *e && t.mul(e, f) == *f))
            .cloned()
            .collect();
        let mut sum = vec![0u64; t.d];
        for e in &prim {
            for (s, x) in sum.iter_mut().zip(e) {
                *s = (*s + x) % t.p;
            }
        }
        if sum != t.unit {
            return Err(AlgebraError::Internal("primitive idempotents do not sum to 1".into()));
        }
        Ok(prim.iter().map(|e| t.lift(e)).collect())
    }

    fn radical(a: &Algebra<Self>) -> Result<Vec<Vec<Self>>, AlgebraError> {
        // x ↦ x^p is F_p-linear; the nilradical is the kernel of a high enough power.
        let t = SmallTensor::new(a)?;
        let d = t.d;
        let cols: Vec<Vec<Fp>> = (0..d)
            .map(|j| {
                let mut e = vec![0; d];
                e[j] = 1;
                t.lift(&t.pow(&e, t.p))
            })
            .collect();
        let frob = Matrix::from_cols(d, &cols);
        let mut k = 1u32;
        while (t.p as u128).pow(k) < d as u128 {
            k += 1;
        }
        Ok(frob.pow(k).kernel_basis())
    }

    fn is_local(a: &Algebra<Self>) -> Result<bool, AlgebraError> {
        let t = SmallTensor::new(a)?;
        let zero = vec![0u64; t.d];
        let d = t.d as u64;
        Ok((0..t.count()).into_par_iter().all(|n| {
            let x = t.element(n);
            t.pow(&x, d) == zero || t.det_nonzero(&x)
        }))
    }
}

// ---- Q ----

type Q = BigRational;

fn q_budget(a: &Algebra<Q>) -> Result<(), AlgebraError> {
    if a.rank() > 3 {
        return Err(AlgebraError::SizeLimit(format!(
            "decomposition over Q supports rank <= 3, got {}",
            a.rank()
        )));
    }
    Ok(())
}

/// Basis vectors, then nonzero vectors with entries in {0, 1, 2}.
fn candidates(a: &Algebra<Q>) -> Vec<Vec<Q>> {
    let r = a.rank();
    let mut out: Vec<Vec<Q>> = (0..r).map(|i| a.basis_vector(i)).collect();
    let total = 3usize.pow(r as u32);
    for mut n in 1..total {
        let mut v = Vec::with_capacity(r);
        for _ in 0..r {
            v.push(Q::from_integer(BigInt::from(n % 3)));
            n /= 3;
        }
        out.push(v);
    }
    out
}

fn min_poly(a: &Algebra<Q>, x: &[Q]) -> UniPoly<Q> {
    let r = a.rank();
    let mut powers = vec![a.unit().to_vec()];
    loop {
        let next = a.mul(powers.last().unwrap(), x);
        let m = Matrix::from_cols(r, &powers);
        if let Some(c) = m.solve(&next) {
            let k = powers.len();
            let mut coeffs: Vec<Q> = c.into_iter().map(|v| -v).collect();
            coeffs.resize(k, Q::zero());
            coeffs.push(Q::one());
            return UniPoly::new(coeffs);
        }
        powers.push(next);
    }
}

fn eval_at(a: &Algebra<Q>, f: &UniPoly<Q>, x: &[Q]) -> Vec<Q> {
    let mut acc = a.zero_vec();
    for c in f.coeffs().iter().rev() {
        acc = a.mul(&acc, x);
        for (s, u) in acc.iter_mut().zip(a.unit()) {
            *s = s.clone() + c.clone() * u.clone();
        }
    }
    acc
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, AlgebraError> {
    let n = n.abs().to_u64().filter(|&v| v <= 1 << 40).ok_or_else(|| {
        AlgebraError::SizeLimit("coefficients too large for rational root search".into())
    })?;
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(BigInt::from(i));
            if i * i != n {
                out.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Distinct rational roots.
fn rational_roots(f: &UniPoly<Q>) -> Result<Vec<Q>, AlgebraError> {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(Q::zero());
    }
    let ints = &ints[low..];
    if ints.len() <= 1 {
        return Ok(roots);
    }
    let (a0, an) = (&ints[0], ints.last().unwrap());
    for num in divisors(a0)? {
        for den in divisors(an)? {
            for s in [1, -1] {
                let cand = Q::new(num.clone() * BigInt::from(s), den.clone());
                if f.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Ok(roots)
}

/// Pairwise coprime prime-power factors of `f`, valid when every factor
/// without a rational root is irreducible (degree <= 3).
fn coprime_parts(f: &UniPoly<Q>) -> Result<Vec<UniPoly<Q>>, AlgebraError> {
    let mut rest = f.clone();
    let mut parts = Vec::new();
    for r in rational_roots(f)? {
        let lin = UniPoly::new(vec![-r, Q::one()]);
        let mut part = UniPoly::one();
        loop {
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            part = part * lin.clone();
        }
        parts.push(part);
    }
    if rest.degree().unwrap_or(0) > 0 {
        parts.push(rest);
    }
    Ok(parts)
}

fn find_idempotent(a: &Algebra<Q>) -> Result<Option<Vec<Q>>, AlgebraError> {
    for x in candidates(a) {
        let m = min_poly(a, &x);
        let parts = coprime_parts(&m)?;
        if parts.len() < 2 {
            continue;
        }
        let p = parts[0].clone();
        let rest = parts[1..].iter().fold(UniPoly::one(), |acc, q| acc * q.clone());
        let (g, u, _) = p.ext_gcd(&rest);
        if !g.is_one() {
            continue;
        }
        let e = eval_at(a, &(u * p), &x);
        if a.mul(&e, &e) == e && e != a.zero_vec() && e != a.unit() {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

impl LocalField for Q {
    fn primitive_idempotents(a: &Algebra<Self>) -> Result<Vec<Vec<Self>>, AlgebraError> {
        q_budget(a)?;
        let mut done = Vec::new();
        let mut todo = vec![a.unit().to_vec()];
        while let Some(e) = todo.pop() {
            let basis = ideal_basis(a, &e);
            let sub = restrict(a, &basis, &e)?;
            match find_idempotent(&sub)? {
                Some(f) => {
                    let lifted = Matrix::from_cols(a.rank(), &basis).mul_vec(&f);
                    let other: Vec<Q> = e.iter().zip(&lifted).map(|(x, y)| x - y).collect();
                    todo.push(other);
                    todo.push(lifted);
                }
                None => done.push(e),
            }
        }
        done.reverse();
        Ok(done)
    }

    fn radical(a: &Algebra<Self>) -> Result<Vec<Vec<Self>>, AlgebraError> {
        // Characteristic zero: the radical is the kernel of the trace form.
        let r = a.rank();
        let trace = |y: &[Q]| -> Q {
            (0..r).fold(Q::zero(), |acc, k| acc + a.mul(y, &a.basis_vector(k))[k].clone())
        };
        let mut form = Matrix::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                form[(i, j)] = trace(&a.product(i, j));
            }
        }
        Ok(form.kernel_basis())
    }

    fn is_local(a: &Algebra<Self>) -> Result<bool, AlgebraError> {
        q_budget(a)?;
        let f = a.rank() - Self::radical(a)?.len();
        if f == 0 {
            return Ok(false);
        }
        if f == 1 {
            return Ok(true);
        }
        for x in candidates(a) {
            let m = min_poly(a, &x);
            let (g, _, _) = m.ext_gcd(&m.derivative());
            let (sf, _) = m.div_rem(&g);
            if sf.degree() == Some(f) && rational_roots(&sf)?.is_empty() {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
