//! Dense matrices over a [`Ring`] and Gaussian elimination over fields.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};


use super::scalar::{Field, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Like [`Matrix::from_rows`] but keeps the column count when there are no rows.
    pub fn from_rows_sized(rows: Vec<Vec<R>>, cols: usize) -> Self {
        assert!(rows.iter().all(|x| x.len() == cols), "ragged matrix rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Columns given as vectors of equal length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<R>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| R::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<R> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<R>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(R::zero(), |acc, j| acc + self[(i, j)].clone() * v[j].clone())
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row counts");
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Determinant by cofactor expansion along the first row. Exact over any
    /// ring; intended for the small matrices used in certificates.
    pub fn det_cofactor(&self) -> R {
        assert_eq!(self.rows, self.cols, "square matrix");
        let n = self.rows;
        match n {
            0 => R::one(),
            1 => self[(0, 0)].clone(),
            _ => {
                let mut acc = R::zero();
                for j in 0..n {
                    if self[(0, j)].is_zero() {
                        continue;
                    }
                    let minor = self.minor(0, j);
                    let term = self[(0, j)].clone() * minor.det_cofactor();
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    pub fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let rows: Vec<Vec<R>> = (0..self.rows)
            .filter(|&i| i != skip_row)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| j != skip_col)
                    .map(|j| self[(i, j)].clone())
                    .collect()
            })
            .collect();
        if rows.is_empty() {
            Self::zeros(0, self.cols.saturating_sub(1))
        } else {
            Self::from_rows(rows)
        }
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Ring> Mul for &Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, rhs: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, rhs.rows, "matrix dimensions");
        let mut out = Matrix::<R>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * rhs[(k, j)].clone();
                }
            }
        }
        out
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form with the list of pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn rref(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().unwrap();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let sub = factor.clone() * m[(r, j)].clone();
                        m[(i, j)] = m[(i, j)].clone() - sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let Echelon { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -reduced[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n));
        let Echelon { reduced, pivots } = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = reduced[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// One solution of `M x = b`, if any.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let col = Matrix::from_cols(self.rows, &[b.to_vec()]);
        let Echelon { reduced, pivots } = self.hstack(&col).rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = reduced[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * pivot.clone();
            let inv = pivot.inv().unwrap();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * inv.clone();
                for j in c..n {
                    let sub = f.clone() * m[(c, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() - sub;
                }
            }
        }
        det
    }
}

/// Linear algebra over a free base ring: a field, or `Z` via Smith normal form.
///
/// Algebra constructions are written against this trait so that they run
/// unchanged over `Z`, `Q` and `F_p`.
pub trait ExactLinalg: Ring {
    /// Basis of the right kernel, saturated over `Z`.
    fn kernel(m: &Matrix<Self>) -> Vec<Vec<Self>>;
    fn invert(m: &Matrix<Self>) -> Option<Matrix<Self>>;
    /// Whether `M: R^cols -> R^rows` is onto.
    fn is_surjective(m: &Matrix<Self>) -> bool;
    /// Coordinates of `b` in the column span, if it lies there.
    fn solve(m: &Matrix<Self>, b: &[Self]) -> Option<Vec<Self>>;
    /// An invertible matrix whose first column is `v`; `None` when `v` is
    /// not part of any basis (zero, or non-primitive over `Z`).
    fn complete_to_basis(v: &[Self]) -> Option<Matrix<Self>>;
    fn rank_of(m: &Matrix<Self>) -> usize;
}

/// Greedy basis completion over a field: the first vector, then the first
/// standard basis vectors not yet in the span.
pub fn field_complete_to_basis<F: Field>(v: &[F]) -> Option<Matrix<F>> {
    let n = v.len();
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut cols = vec![v.to_vec()];
    for j in 0..n {
        if cols.len() == n {
            break;
        }
        let mut e = vec![F::zero(); n];
        e[j] = F::one();
        let mut trial = cols.clone();
        trial.push(e);
        if Matrix::from_cols(n, &trial).rank() == trial.len() {
            cols = trial;
        }
    }
    Some(Matrix::from_cols(n, &cols))
}

macro_rules! field_linalg {
    ($t:ty) => {
        impl ExactLinalg for $t {
            fn kernel(m: &Matrix<Self>) -> Vec<Vec<Self>> {
                m.kernel_basis()
            }
            fn invert(m: &Matrix<Self>) -> Option<Matrix<Self>> {
                m.inverse()
            }
            fn is_surjective(m: &Matrix<Self>) -> bool {
                m.rank() == m.rows()
            }
            fn solve(m: &Matrix<Self>, b: &[Self]) -> Option<Vec<Self>> {
                m.solve(b)
            }
            fn complete_to_basis(v: &[Self]) -> Option<Matrix<Self>> {
                field_complete_to_basis(v)
            }
            fn rank_of(m: &Matrix<Self>) -> usize {
                m.rank()
            }
        }
    };
}

field_linalg!(num_rational::BigRational);
field_linalg!(super::fp::Fp);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corealg::Fp;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn identity_has_empty_kernel() {
        for n in 0..5 {
            assert!(Matrix::<Q>::identity(n).kernel_basis().is_empty());
        }
    }

    #[test]
    fn parity_kernel_over_f2() {
        let m = Matrix::from_rows(vec![vec![Fp::new(1, 2), Fp::new(1, 2)]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![Fp::new(1, 2), Fp::new(1, 2)]);
    }

    #[test]
    fn inverse_and_solve() {
        let m: Matrix<Q> = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        let x = m.solve(&[Q::from_int(3), Q::from_int(2)]).unwrap();
        assert_eq!(x, vec![Q::from_int(1), Q::from_int(1)]);
        assert_eq!(m.det(), Q::from_int(1));
        let singular: Matrix<Q> = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&[Q::from_int(1), Q::from_int(0)]).is_none());
    }

    #[test]
    fn cofactor_det_matches_elimination() {
        let m: Matrix<Q> = Matrix::from_ints(&[&[2, -1, 3], &[0, 4, 1], &[5, 2, -2]]);
        assert_eq!(m.det_cofactor(), m.det());
    }

    #[test]
    fn greedy_completion() {
        let v = vec![Q::from_int(0), Q::from_int(1), Q::from_int(1)];
        let p = field_complete_to_basis(&v).unwrap();
        assert_eq!(p.col(0), v);
        assert_eq!(p.col(1), vec![Q::from_int(1), Q::from_int(0), Q::from_int(0)]);
        assert_eq!(p.col(2), vec![Q::from_int(0), Q::from_int(1), Q::from_int(0)]);
        assert!(field_complete_to_basis(&[Q::from_int(0)]).is_none());
    }
}
