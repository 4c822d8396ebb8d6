//! Smith normal form over `Z` with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{ExactLinalg, Matrix};

/// `u * m * v == d`, with `d` diagonal, nonnegative, and `d[i][i] | d[i+1][i+1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SmithForm {
    pub d: Matrix<BigInt>,
    pub u: Matrix<BigInt>,
    pub v: Matrix<BigInt>,
}

impl SmithForm {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn add_row_multiple(m: &mut Matrix<BigInt>, target: usize, source: usize, q: &BigInt) {
    for j in 0..m.cols() {
        let s = q * &m[(source, j)];
        m[(target, j)] -= s;
    }
}

fn add_col_multiple(m: &mut Matrix<BigInt>, target: usize, source: usize, q: &BigInt) {
    for i in 0..m.rows() {
        let s = q * &m[(i, source)];
        m[(i, target)] -= s;
    }
}

/// Position of the smallest nonzero entry (by absolute value) in the
/// trailing submatrix starting at `(t, t)`.
fn min_pivot(a: &Matrix<BigInt>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, bj)) => a[(i, j)].abs() < a[(bi, bj)].abs(),
            };
            if better {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &Matrix<BigInt>) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = Matrix::<BigInt>::identity(rows);
    let mut v = Matrix::<BigInt>::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_pivot(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                add_row_multiple(&mut a, i, t, &q);
                add_row_multiple(&mut u, i, t, &q);
                dirty |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                add_col_multiple(&mut a, j, t, &q);
                add_col_multiple(&mut v, j, t, &q);
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                // A smaller remainder appeared in row or column t; move it to the pivot.
                let (pi, pj) = min_pivot_cross(&a, t);
                a.swap_rows(t, pi);
                u.swap_rows(t, pi);
                a.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // Row and column cleared; enforce divisibility of the remainder.
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)]))
            });
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    add_row_multiple(&mut a, t, i, &minus_one);
                    add_row_multiple(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            for j in 0..cols {
                a[(t, j)] = -a[(t, j)].clone();
            }
            for j in 0..rows {
                u[(t, j)] = -u[(t, j)].clone();
            }
        }
    }
    SmithForm { d: a, u, v }
}

/// Smallest nonzero entry restricted to row `t` and column `t`.
fn min_pivot_cross(a: &Matrix<BigInt>, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    for i in t..a.rows() {
        if !a[(i, t)].is_zero() && (a[(best.0, best.1)].is_zero() || a[(i, t)].abs() < a[(best.0, best.1)].abs()) {
            best = (i, t);
        }
    }
    for j in t..a.cols() {
        if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[(best.0, best.1)].abs() {
            best = (t, j);
        }
    }
    best
}

fn to_rational(m: &Matrix<BigInt>) -> Matrix<BigRational> {
    m.map(|x| BigRational::from_integer(x.clone()))
}

/// Inverse over `Z`, present iff the determinant is a unit.
pub fn integer_inverse(m: &Matrix<BigInt>) -> Option<Matrix<BigInt>> {
    let inv = to_rational(m).inverse()?;
    let mut out = Matrix::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let x = &inv[(i, j)];
            if !x.is_integer() {
                return None;
            }
            out[(i, j)] = x.to_integer();
        }
    }
    Some(out)
}

impl ExactLinalg for BigInt {
    fn kernel(m: &Matrix<Self>) -> Vec<Vec<Self>> {
        let s = smith_normal_form(m);
        let r = s.rank();
        (r..m.cols()).map(|j| s.v.col(j)).collect()
    }

    fn invert(m: &Matrix<Self>) -> Option<Matrix<Self>> {
        integer_inverse(m)
    }

    fn is_surjective(m: &Matrix<Self>) -> bool {
        let s = smith_normal_form(m);
        let f = s.invariant_factors();
        f.len() == m.rows() && f.iter().all(|x| x.is_one())
    }

    fn solve(m: &Matrix<Self>, b: &[Self]) -> Option<Vec<Self>> {
        let s = smith_normal_form(m);
        let ub = s.u.mul_vec(b);
        let r = s.rank();
        let mut y = vec![BigInt::zero(); m.cols()];
        for (i, x) in ub.iter().enumerate() {
            if i < r {
                let (q, rem) = x.div_rem(&s.d[(i, i)]);
                if !rem.is_zero() {
                    return None;
                }
                y[i] = q;
            } else if !x.is_zero() {
                return None;
            }
        }
        Some(s.v.mul_vec(&y))
    }

    fn complete_to_basis(vec: &[Self]) -> Option<Matrix<Self>> {
        let n = vec.len();
        let col = Matrix::from_cols(n, &[vec.to_vec()]);
        let s = smith_normal_form(&col);
        if n == 0 || !s.d[(0, 0)].is_one() {
            return None;
        }
        // u * v * s.v = e_1, so v = u^{-1} e_1 * s.v^{-1}.
        let mut p = integer_inverse(&s.u)?;
        let sign = s.v[(0, 0)].clone();
        for i in 0..n {
            p[(i, 0)] = p[(i, 0)].clone() * sign.clone();
        }
        debug_assert_eq!(p.col(0), vec);
        Some(p)
    }

    fn rank_of(m: &Matrix<Self>) -> usize {
        smith_normal_form(m).rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_ints(rows)
    }

    fn check(m: &Matrix<BigInt>) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert!(s.d.is_diagonal());
        assert!(s.u.det_cofactor().abs().is_one());
        assert!(s.v.det_cofactor().abs().is_one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&z(&[&[1, 0], &[0, 1]]));
        assert_eq!(s.d, z(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn two_by_two_example() {
        let s = check(&z(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.d, z(&[&[2, 0], &[0, 4]]));
    }

    #[test]
    fn zero_matrix() {
        let m = Matrix::<BigInt>::zeros(2, 3);
        let s = check(&m);
        assert!(s.d.is_zero());
        assert_eq!(s.u, Matrix::identity(2));
        assert_eq!(s.v, Matrix::identity(3));
    }

    #[test]
    fn divisibility_needs_row_mixing() {
        // diag(2, 3) has Smith form diag(1, 6).
        let s = check(&z(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn integer_kernel_and_solve() {
        let m = z(&[&[2, 4, 6]]);
        let k = BigInt::kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        assert!(!BigInt::is_surjective(&m));
        assert!(BigInt::solve(&m, &[BigInt::from(3)]).is_none());
        let x = BigInt::solve(&m, &[BigInt::from(8)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![BigInt::from(8)]);
    }

    #[test]
    fn unit_completion_over_z() {
        let v: Vec<BigInt> = [3, 5, 7].iter().map(|&x| BigInt::from(x)).collect();
        let p = BigInt::complete_to_basis(&v).unwrap();
        assert_eq!(p.col(0), v);
        assert!(p.det_cofactor().abs().is_one());
        let bad: Vec<BigInt> = [2, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert!(BigInt::complete_to_basis(&bad).is_none());
    }
}
