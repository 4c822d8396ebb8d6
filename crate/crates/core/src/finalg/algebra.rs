use std::fmt;

use serde::{Deserialize, Serialize};

use super::AlgebraError;
use crate::corealg::{BaseRing, ExactLinalg, Matrix, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "identity", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// `c[i][j][k] != c[j][i][k]`.
    Commutativity { i: usize, j: usize, k: usize },
    /// `(e_i e_j) e_l != e_i (e_j e_l)`.
    Associativity { i: usize, j: usize, l: usize },
    /// `1 * e_j != e_j`.
    Unit { j: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Commutativity { i, j, k } => {
                write!(f, "commutativity c[{i}][{j}][{k}] != c[{j}][{i}][{k}]")
            }
            Self::Associativity { i, j, l } => {
                write!(f, "associativity (e{i}*e{j})*e{l} != e{i}*(e{j}*e{l})")
            }
            Self::Unit { j } => write!(f, "unit law 1*e{j} != e{j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "violation", rename_all = "snake_case")]
pub enum AxiomReport {
    Pass,
    Fail(AxiomViolation),
}

impl AxiomReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, AxiomReport::Pass)
    }

    pub fn into_result(self) -> Result<(), AlgebraError> {
        match self {
            AxiomReport::Pass => Ok(()),
            AxiomReport::Fail(v) => Err(AlgebraError::AxiomFailure(v)),
        }
    }
}

#[inline]
pub(crate) fn idx(d: usize, i: usize, j: usize, k: usize) -> usize {
    (i * d + j) * d + k
}

/// Checks commutativity, then associativity, then (if given) the unit law,
/// each in lexicographic order of indices.
fn check_tensor<R: Ring>(d: usize, mult: &[R], unit: Option<&[R]>) -> AxiomReport {
    for i in 0..d {
        for j in i + 1..d {
            for k in 0..d {
                if mult[idx(d, i, j, k)] != mult[idx(d, j, i, k)] {
                    return AxiomReport::Fail(AxiomViolation::Commutativity { i, j, k });
                }
            }
        }
    }
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                for m in 0..d {
                    let mut lhs = R::zero();
                    let mut rhs = R::zero();
                    for k in 0..d {
                        lhs = lhs + mult[idx(d, i, j, k)].clone() * mult[idx(d, k, l, m)].clone();
                        rhs = rhs + mult[idx(d, j, l, k)].clone() * mult[idx(d, i, k, m)].clone();
                    }
                    if lhs != rhs {
                        return AxiomReport::Fail(AxiomViolation::Associativity { i, j, l });
                    }
                }
            }
        }
    }
    if let Some(u) = unit {
        for j in 0..d {
            for k in 0..d {
                let mut s = R::zero();
                for (i, ui) in u.iter().enumerate() {
                    if !ui.is_zero() {
                        s = s + ui.clone() * mult[idx(d, i, j, k)].clone();
                    }
                }
                let want = if j == k { R::one() } else { R::zero() };
                if s != want {
                    return AxiomReport::Fail(AxiomViolation::Unit { j });
                }
            }
        }
    }
    AxiomReport::Pass
}

fn tensor_mul<R: Ring>(d: usize, mult: &[R], x: &[R], y: &[R]) -> Vec<R> {
    let mut out = vec![R::zero(); d];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let s = xi.clone() * yj.clone();
            for (k, o) in out.iter_mut().enumerate() {
                let c = &mult[idx(d, i, j, k)];
                if !c.is_zero() {
                    *o = o.clone() + s.clone() * c.clone();
                }
            }
        }
    }
    out
}

fn flatten<R: Clone>(d: usize, mult: Vec<Vec<Vec<R>>>) -> Result<Vec<R>, AlgebraError> {
    if mult.len() != d || mult.iter().any(|m| m.len() != d || m.iter().any(|v| v.len() != d)) {
        return Err(AlgebraError::DimensionMismatch(format!(
            "structure tensor must be {d}x{d}x{d}"
        )));
    }
    Ok(mult.into_iter().flatten().flatten().collect())
}

fn nest<R: Clone>(d: usize, mult: &[R]) -> Vec<Vec<Vec<R>>> {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| mult[idx(d, i, j, 0)..idx(d, i, j, 0) + d].to_vec())
                .collect()
        })
        .collect()
}

/// Rewrites structure constants in the basis given by the columns of `p`.
fn conjugate_tensor<R: Ring>(d: usize, mult: &[R], p: &Matrix<R>, p_inv: &Matrix<R>) -> Vec<R> {
    let cols = p.columns();
    let mut out = vec![R::zero(); d * d * d];
    for i in 0..d {
        for j in i..d {
            let prod = p_inv.mul_vec(&tensor_mul(d, mult, &cols[i], &cols[j]));
            for (k, c) in prod.into_iter().enumerate() {
                out[idx(d, j, i, k)] = c.clone();
                out[idx(d, i, j, k)] = c;
            }
        }
    }
    out
}

pub(crate) fn embed<R: Ring>(n: i64, base: &BaseRing) -> R {
    R::from_int(n).resolve_in(base)
}

/// A commutative unital algebra, free of finite rank over its base.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<R> {
    base: BaseRing,
    rank: usize,
    unit: Vec<R>,
    mult: Vec<R>,
}

impl<R: Ring> Algebra<R> {
    /// Builds from a nested tensor `mult[i][j][k]`. Axioms are not checked.
    pub fn new(base: BaseRing, unit: Vec<R>, mult: Vec<Vec<Vec<R>>>) -> Result<Self, AlgebraError> {
        let d = unit.len();
        let flat = flatten(d, mult)?;
        Self::from_flat(base, d, unit, flat)
    }

    /// Builds from a flat tensor indexed `(i * d + j) * d + k`.
    pub fn from_flat(base: BaseRing, rank: usize, unit: Vec<R>, mult: Vec<R>) -> Result<Self, AlgebraError> {
        if unit.len() != rank || mult.len() != rank * rank * rank {
            return Err(AlgebraError::DimensionMismatch(format!(
                "rank {rank} needs a unit of length {rank} and {} structure constants",
                rank * rank * rank
            )));
        }
        let unit = unit.iter().map(|x| x.resolve_in(&base)).collect();
        let mult = mult.iter().map(|x| x.resolve_in(&base)).collect();
        Ok(Algebra {
            base,
            rank,
            unit,
            mult,
        })
    }

    /// Builds from a product rule on basis indices.
    pub fn from_products(
        base: BaseRing,
        unit: Vec<R>,
        mut product: impl FnMut(usize, usize) -> Vec<R>,
    ) -> Result<Self, AlgebraError> {
        let d = unit.len();
        let mut mult = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                let v = product(i, j);
                if v.len() != d {
                    return Err(AlgebraError::DimensionMismatch(format!(
                        "product e{i}*e{j} has length {}",
                        v.len()
                    )));
                }
                mult.extend(v);
            }
        }
        Self::from_flat(base, d, unit, mult)
    }

    /// `R ⊕ R^m` with the `e_i` (i ≥ 1) multiplying to zero.
    pub fn square_zero_extension(m: usize, base: BaseRing) -> Self {
        let d = m + 1;
        let one = embed::<R>(1, &base);
        let zero = embed::<R>(0, &base);
        let mut unit = vec![zero.clone(); d];
        unit[0] = one.clone();
        let mut mult = vec![zero; d * d * d];
        for j in 0..d {
            mult[idx(d, 0, j, j)] = one.clone();
            mult[idx(d, j, 0, j)] = one.clone();
        }
        Algebra {
            base,
            rank: d,
            unit,
            mult,
        }
    }

    /// The base ring as a rank 1 algebra.
    pub fn base_algebra(base: BaseRing) -> Self {
        Self::square_zero_extension(0, base)
    }

    /// `R^n` in the basis of its coordinate idempotents.
    pub fn split(n: usize, base: BaseRing) -> Self {
        let one = embed::<R>(1, &base);
        let zero = embed::<R>(0, &base);
        let mut mult = vec![zero; n * n * n];
        for i in 0..n {
            mult[idx(n, i, i, i)] = one.clone();
        }
        Algebra {
            base,
            rank: n,
            unit: vec![one; n],
            mult,
        }
    }

    /// `R[x]/(x^n + f[n-1] x^(n-1) + ... + f[0])` in the basis `1, x, ..., x^(n-1)`.
    pub fn monogenic(base: BaseRing, f: &[R]) -> Self {
        let n = f.len();
        let zero = embed::<R>(0, &base);
        let one = embed::<R>(1, &base);
        // powers[e] = coordinates of x^e for e < 2n - 1
        let mut powers: Vec<Vec<R>> = Vec::new();
        for e in 0..n {
            let mut v = vec![zero.clone(); n];
            v[e] = one.clone();
            powers.push(v);
        }
        for _ in n..(2 * n).saturating_sub(1) {
            let prev = powers.last().unwrap().clone();
            // x * prev, reducing x^n = -sum f[i] x^i
            let mut v = vec![zero.clone(); n];
            v[1..n].clone_from_slice(&prev[..n - 1]);
            let top = prev[n - 1].clone();
            for i in 0..n {
                v[i] = v[i].clone() - top.clone() * f[i].resolve_in(&base);
            }
            powers.push(v);
        }
        let mut unit = vec![zero; n];
        if n > 0 {
            unit[0] = one;
        }
        Self::from_products(base, unit, |i, j| powers[i + j].clone()).expect("consistent shape")
    }

    /// Direct product in the concatenated basis.
    pub fn direct_product(factors: &[Self]) -> Result<Self, AlgebraError> {
        let Some(first) = factors.first() else {
            return Err(AlgebraError::Unsupported("empty product".into()));
        };
        let base = first.base.clone();
        for f in factors {
            if f.base != base {
                return Err(AlgebraError::BaseMismatch(base, f.base.clone()));
            }
        }
        let d: usize = factors.iter().map(|f| f.rank).sum();
        let zero = embed::<R>(0, &base);
        let mut unit = Vec::with_capacity(d);
        let mut mult = vec![zero; d * d * d];
        let mut off = 0;
        for f in factors {
            unit.extend(f.unit.iter().cloned());
            let r = f.rank;
            for i in 0..r {
                for j in 0..r {
                    for k in 0..r {
                        mult[idx(d, off + i, off + j, off + k)] = f.c(i, j, k).clone();
                    }
                }
            }
            off += r;
        }
        Self::from_flat(base, d, unit, mult)
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> &[R] {
        &self.unit
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &R {
        &self.mult[idx(self.rank, i, j, k)]
    }

    pub fn mult_flat(&self) -> &[R] {
        &self.mult
    }

    pub fn mult_tensor(&self) -> Vec<Vec<Vec<R>>> {
        nest(self.rank, &self.mult)
    }

    pub fn zero_vec(&self) -> Vec<R> {
        vec![embed(0, &self.base); self.rank]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<R> {
        let mut v = self.zero_vec();
        v[i] = embed(1, &self.base);
        v
    }

    /// Coordinates of `e_i * e_j`.
    pub fn product(&self, i: usize, j: usize) -> Vec<R> {
        let s = idx(self.rank, i, j, 0);
        self.mult[s..s + self.rank].to_vec()
    }

    pub fn mul(&self, x: &[R], y: &[R]) -> Vec<R> {
        tensor_mul(self.rank, &self.mult, x, y)
    }

    pub fn pow(&self, x: &[R], e: u32) -> Vec<R> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Matrix of `y ↦ x * y`.
    pub fn left_mult_matrix(&self, x: &[R]) -> Matrix<R> {
        let cols: Vec<Vec<R>> = (0..self.rank)
            .map(|j| self.mul(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_cols(self.rank, &cols)
    }

    pub fn check_axioms(&self) -> AxiomReport {
        check_tensor(self.rank, &self.mult, Some(&self.unit))
    }

    /// The unit is `e_0` and every product `e_i e_j` with `i, j ≥ 1` vanishes.
    pub fn is_square_zero(&self) -> bool {
        let d = self.rank;
        if d == 0 {
            return true;
        }
        if self.unit != self.basis_vector(0) {
            return false;
        }
        (1..d).all(|i| (1..d).all(|j| (0..d).all(|k| self.c(i, j, k).is_zero())))
    }

    pub fn map_base<S: Ring>(&self, base: BaseRing, f: impl Fn(&R) -> S) -> Algebra<S> {
        Algebra::from_flat(
            base,
            self.rank,
            self.unit.iter().map(&f).collect(),
            self.mult.iter().map(&f).collect(),
        )
        .expect("shape preserved")
    }

    /// Structure constants in the basis of columns of `p`, given its inverse.
    pub fn conjugate(&self, p: &Matrix<R>, p_inv: &Matrix<R>) -> Result<Self, AlgebraError> {
        let d = self.rank;
        if p.rows() != d || p.cols() != d || p_inv.rows() != d || p_inv.cols() != d {
            return Err(AlgebraError::DimensionMismatch(format!("base change must be {d}x{d}")));
        }
        let p = p.map(|x| x.resolve_in(&self.base));
        let p_inv = p_inv.map(|x| x.resolve_in(&self.base));
        let mult = conjugate_tensor(d, &self.mult, &p, &p_inv);
        let unit = p_inv.mul_vec(&self.unit);
        Self::from_flat(self.base.clone(), d, unit, mult)
    }
}

impl<R: ExactLinalg> Algebra<R> {
    /// Structure constants in the basis of columns of `p`.
    pub fn change_basis(&self, p: &Matrix<R>) -> Result<Self, AlgebraError> {
        let p = p.map(|x| x.resolve_in(&self.base));
        let p_inv = R::invert(&p).ok_or(AlgebraError::Singular)?;
        self.conjugate(&p, &p_inv)
    }
}

impl<R: Ring> fmt::Display for Algebra<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank {} algebra over {}", self.rank, self.base)?;
        writeln!(f, "unit = {}", show_vec(&self.unit))?;
        write_products(f, self.rank, &self.mult)
    }
}

fn show_vec<R: Ring>(v: &[R]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn write_products<R: Ring>(f: &mut fmt::Formatter<'_>, d: usize, mult: &[R]) -> fmt::Result {
    for i in 0..d {
        for j in i..d {
            let s = idx(d, i, j, 0);
            writeln!(f, "e{i}*e{j} = {}", show_vec(&mult[s..s + d]))?;
        }
    }
    Ok(())
}

/// A commutative associative algebra without unit, free of finite rank.
#[derive(Clone, Debug, PartialEq)]
pub struct NonunitalAlgebra<R> {
    base: BaseRing,
    rank: usize,
    mult: Vec<R>,
}

impl<R: Ring> NonunitalAlgebra<R> {
    pub fn new(base: BaseRing, rank: usize, mult: Vec<Vec<Vec<R>>>) -> Result<Self, AlgebraError> {
        let flat = flatten(rank, mult)?;
        Self::from_flat(base, rank, flat)
    }

    pub fn from_flat(base: BaseRing, rank: usize, mult: Vec<R>) -> Result<Self, AlgebraError> {
        if mult.len() != rank * rank * rank {
            return Err(AlgebraError::DimensionMismatch(format!(
                "rank {rank} needs {} structure constants",
                rank * rank * rank
            )));
        }
        let mult = mult.iter().map(|x| x.resolve_in(&base)).collect();
        Ok(NonunitalAlgebra { base, rank, mult })
    }

    pub fn zero_multiplication(rank: usize, base: BaseRing) -> Self {
        let zero = embed::<R>(0, &base);
        NonunitalAlgebra {
            base,
            rank,
            mult: vec![zero; rank * rank * rank],
        }
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &R {
        &self.mult[idx(self.rank, i, j, k)]
    }

    pub fn mult_flat(&self) -> &[R] {
        &self.mult
    }

    pub fn mult_tensor(&self) -> Vec<Vec<Vec<R>>> {
        nest(self.rank, &self.mult)
    }

    pub fn mul(&self, x: &[R], y: &[R]) -> Vec<R> {
        tensor_mul(self.rank, &self.mult, x, y)
    }

    pub fn check_axioms(&self) -> AxiomReport {
        check_tensor(self.rank, &self.mult, None)
    }

    pub fn is_zero_multiplication(&self) -> bool {
        self.mult.iter().all(|c| c.is_zero())
    }

    pub fn map_base<S: Ring>(&self, base: BaseRing, f: impl Fn(&R) -> S) -> NonunitalAlgebra<S> {
        NonunitalAlgebra::from_flat(base, self.rank, self.mult.iter().map(f).collect())
            .expect("shape preserved")
    }
}

impl<R: ExactLinalg> NonunitalAlgebra<R> {
    pub fn change_basis(&self, p: &Matrix<R>) -> Result<Self, AlgebraError> {
        let d = self.rank;
        if p.rows() != d || p.cols() != d {
            return Err(AlgebraError::DimensionMismatch(format!("base change must be {d}x{d}")));
        }
        let p = p.map(|x| x.resolve_in(&self.base));
        let p_inv = R::invert(&p).ok_or(AlgebraError::Singular)?;
        let mult = conjugate_tensor(d, &self.mult, &p, &p_inv);
        Self::from_flat(self.base.clone(), d, mult)
    }
}

impl<R: Ring> fmt::Display for NonunitalAlgebra<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank {} nonunital algebra over {}", self.rank, self.base)?;
        write_products(f, self.rank, &self.mult)
    }
}

/// A linear map between algebras over the same base, as a
/// `target.rank() x source.rank()` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraHom<R> {
    source: Algebra<R>,
    target: Algebra<R>,
    matrix: Matrix<R>,
}

impl<R: Ring> AlgebraHom<R> {
    /// Checks shapes and bases only; see [`AlgebraHom::check`].
    pub fn new(source: Algebra<R>, target: Algebra<R>, matrix: Matrix<R>) -> Result<Self, AlgebraError> {
        if source.base != target.base {
            return Err(AlgebraError::BaseMismatch(source.base, target.base));
        }
        if matrix.rows() != target.rank || matrix.cols() != source.rank {
            return Err(AlgebraError::DimensionMismatch(format!(
                "map matrix must be {}x{}",
                target.rank, source.rank
            )));
        }
        let matrix = matrix.map(|x| x.resolve_in(&source.base));
        Ok(AlgebraHom {
            source,
            target,
            matrix,
        })
    }

    /// Like [`AlgebraHom::new`] followed by [`AlgebraHom::check`].
    pub fn checked(source: Algebra<R>, target: Algebra<R>, matrix: Matrix<R>) -> Result<Self, AlgebraError> {
        let h = Self::new(source, target, matrix)?;
        h.check()?;
        Ok(h)
    }

    pub fn identity(a: &Algebra<R>) -> Self {
        let m = Matrix::identity(a.rank).map(|x: &R| x.resolve_in(&a.base));
        AlgebraHom {
            source: a.clone(),
            target: a.clone(),
            matrix: m,
        }
    }

    /// The projection `e_0 ↦ 1`, `e_i ↦ 0` onto the base ring.
    pub fn first_coordinate(a: &Algebra<R>) -> Self {
        let target = Algebra::base_algebra(a.base.clone());
        let mut m = Matrix::zeros(1, a.rank).map(|x: &R| x.resolve_in(&a.base));
        if a.rank > 0 {
            m[(0, 0)] = embed(1, &a.base);
        }
        AlgebraHom {
            source: a.clone(),
            target,
            matrix: m,
        }
    }

    pub fn source(&self) -> &Algebra<R> {
        &self.source
    }

    pub fn target(&self) -> &Algebra<R> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.matrix
    }

    pub fn apply(&self, x: &[R]) -> Vec<R> {
        self.matrix.mul_vec(x)
    }

    /// Unit preservation and multiplicativity on basis pairs.
    pub fn check(&self) -> Result<(), AlgebraError> {
        if self.apply(self.source.unit()) != self.target.unit() {
            return Err(AlgebraError::NotAlgebraMap("unit is not preserved".into()));
        }
        let imgs = self.matrix.columns();
        for i in 0..self.source.rank {
            for j in i..self.source.rank {
                let lhs = self.apply(&self.source.product(i, j));
                let rhs = self.target.mul(&imgs[i], &imgs[j]);
                if lhs != rhs {
                    return Err(AlgebraError::NotAlgebraMap(format!(
                        "f(e{i}*e{j}) != f(e{i})*f(e{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn map_base<S: Ring>(&self, base: BaseRing, f: impl Fn(&R) -> S) -> AlgebraHom<S> {
        AlgebraHom {
            source: self.source.map_base(base.clone(), &f),
            target: self.target.map_base(base.clone(), &f),
            matrix: self.matrix.map(|x| f(x).resolve_in(&base)),
        }
    }
}

impl<R: ExactLinalg> AlgebraHom<R> {
    pub fn is_surjective(&self) -> bool {
        R::is_surjective(&self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corealg::Fp;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn f5() -> BaseRing {
        BaseRing::Fp { p: 5 }
    }

    fn truncated(n: usize, base: BaseRing) -> Algebra<Fp> {
        Algebra::monogenic(base, &vec![Fp::from_int(0); n])
    }

    #[test]
    fn truncated_polynomials_pass() {
        let a = truncated(3, f5());
        assert!(a.check_axioms().is_pass());
        assert_eq!(a.product(1, 1), vec![Fp::new(0, 5), Fp::new(0, 5), Fp::new(1, 5)]);
        assert!(a.product(1, 2).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn perturbed_unit_square_fails_associativity() {
        let a = truncated(3, f5());
        let mut m = a.mult_tensor();
        m[0][0][1] = m[0][0][1] + Fp::from_int(1);
        let b = Algebra::new(f5(), a.unit().to_vec(), m).unwrap();
        assert_eq!(
            b.check_axioms(),
            AxiomReport::Fail(AxiomViolation::Associativity { i: 0, j: 0, l: 1 })
        );
    }

    #[test]
    fn asymmetric_tensor_fails_commutativity() {
        let a = Algebra::<BigInt>::square_zero_extension(2, BaseRing::Z);
        let mut m = a.mult_tensor();
        m[1][2][0] = BigInt::from(1);
        let b = Algebra::new(BaseRing::Z, a.unit().to_vec(), m).unwrap();
        assert_eq!(
            b.check_axioms(),
            AxiomReport::Fail(AxiomViolation::Commutativity { i: 1, j: 2, k: 0 })
        );
    }

    #[test]
    fn square_zero_shapes() {
        let a = Algebra::<BigInt>::square_zero_extension(2, BaseRing::Z);
        assert_eq!(a.rank(), 3);
        assert!(a.check_axioms().is_pass());
        assert!(a.is_square_zero());
        let k = Algebra::<BigInt>::square_zero_extension(0, BaseRing::Z);
        assert_eq!(k.rank(), 1);
        assert_eq!(k.product(0, 0), vec![BigInt::from(1)]);
        let dual = Algebra::<Fp>::square_zero_extension(1, BaseRing::Fp { p: 2 });
        assert_eq!(dual, truncated(2, BaseRing::Fp { p: 2 }));
    }

    #[test]
    fn rank_zero_passes_vacuously() {
        let z = Algebra::<BigInt>::from_flat(BaseRing::Z, 0, vec![], vec![]).unwrap();
        assert!(z.check_axioms().is_pass());
    }

    #[test]
    fn bad_shapes_are_rejected() {
        let r = Algebra::<BigInt>::new(BaseRing::Z, vec![BigInt::from(1)], vec![vec![]]);
        assert!(matches!(r, Err(AlgebraError::DimensionMismatch(_))));
    }

    #[test]
    fn change_basis_round_trip() {
        let a = truncated(3, f5());
        let p = Matrix::from_ints(&[&[1, 2, 0], &[0, 1, 3], &[0, 0, 4]]).map(|x: &BigInt| {
            Fp::new(i64::try_from(x).unwrap(), 5)
        });
        let b = a.change_basis(&p).unwrap();
        assert!(b.check_axioms().is_pass());
        let back = b.change_basis(&p.inverse().unwrap()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn homomorphism_checks() {
        let a = Algebra::<BigInt>::split(2, BaseRing::Z);
        let proj = Matrix::from_ints(&[&[1, 0]]);
        let k = Algebra::base_algebra(BaseRing::Z);
        assert!(AlgebraHom::checked(a.clone(), k.clone(), proj).is_ok());
        let bad = Matrix::from_ints(&[&[1, 1]]);
        assert!(AlgebraHom::checked(a, k, bad).is_err());
    }
}
