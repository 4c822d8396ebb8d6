//! Quotient by the unit, the two-step Rees degeneration, and unitalization.

use super::algebra::{embed, idx};
use super::{Algebra, AlgebraError, AlgebraHom, FamilyOverLine, NonunitalAlgebra};
use num_traits::Zero;

use crate::corealg::{BaseRing, ExactLinalg, Matrix, Ring, UniPoly};

/// `A / R·1` is free of rank `rank`; the columns of `basis` after the first
/// (which is the unit) project to a basis of it.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitQuotient<R> {
    pub rank: usize,
    pub basis: Matrix<R>,
}

impl<R: ExactLinalg> UnitQuotient<R> {
    /// Lifts of the quotient basis.
    pub fn complement(&self) -> Vec<Vec<R>> {
        self.basis.columns().into_iter().skip(1).collect()
    }

    /// Coordinates of the class of `x` in the quotient basis.
    pub fn class_of(&self, x: &[R]) -> Option<Vec<R>> {
        let y = R::solve(&self.basis, x)?;
        Some(y.into_iter().skip(1).collect())
    }
}

pub fn quotient_by_unit<R: ExactLinalg>(a: &Algebra<R>) -> Result<UnitQuotient<R>, AlgebraError> {
    if a.rank() == 0 {
        return Err(AlgebraError::ZeroRank);
    }
    let basis = R::complete_to_basis(a.unit()).ok_or(AlgebraError::NonPrimitiveUnit)?;
    Ok(UnitQuotient {
        rank: a.rank() - 1,
        basis: basis.map(|x| x.resolve_in(a.base())),
    })
}

/// A family over the `t`-line whose fiber at `t = 1` is `A` written in the
/// basis of columns of `base_change`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReesFamily<R> {
    pub family: FamilyOverLine<R>,
    pub base_change: Matrix<R>,
}

pub fn rees_family<R: ExactLinalg>(a: &Algebra<R>) -> Result<ReesFamily<R>, AlgebraError> {
    let q = quotient_by_unit(a)?;
    rees_family_with_completion(a, &q.complement())
}

/// Rees family for the filtration `R·1 ⊂ A`, using the lifts `completion`
/// of a basis of `A / R·1`.
pub fn rees_family_with_completion<R: ExactLinalg>(
    a: &Algebra<R>,
    completion: &[Vec<R>],
) -> Result<ReesFamily<R>, AlgebraError> {
    a.check_axioms().into_result()?;
    let d = a.rank();
    if d == 0 {
        return Err(AlgebraError::ZeroRank);
    }
    if completion.len() + 1 != d || completion.iter().any(|v| v.len() != d) {
        return Err(AlgebraError::DimensionMismatch(format!(
            "completion needs {} vectors of length {d}",
            d - 1
        )));
    }
    let mut cols = vec![a.unit().to_vec()];
    cols.extend(completion.iter().cloned());
    let p = Matrix::from_cols(d, &cols).map(|x| x.resolve_in(a.base()));
    let b = a.change_basis(&p).map_err(|e| match e {
        AlgebraError::Singular => AlgebraError::NonPrimitiveUnit,
        e => e,
    })?;
    let weight = |i: usize| usize::from(i > 0);
    let fbase = BaseRing::poly_t(a.base().clone());
    let mut mult = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let c = b.c(i, j, k);
                if c.is_zero() {
                    mult.push(UniPoly::zero());
                    continue;
                }
                let e = (weight(i) + weight(j))
                    .checked_sub(weight(k))
                    .ok_or_else(|| AlgebraError::Internal("negative Rees weight".into()))?;
                mult.push(UniPoly::monomial(c.clone(), e));
            }
        }
    }
    let unit = b.unit().iter().map(|c| UniPoly::constant(c.clone())).collect();
    let family = Algebra::from_flat(fbase, d, unit, mult)?;
    Ok(ReesFamily {
        family,
        base_change: p,
    })
}

fn inner_base(base: &BaseRing) -> Result<BaseRing, AlgebraError> {
    base.inner()
        .cloned()
        .ok_or_else(|| AlgebraError::Unsupported(format!("{base} is not a polynomial ring in t")))
}

/// Substitutes `t = t0` in every structure constant.
pub fn specialize_family<R: Ring>(f: &FamilyOverLine<R>, t0: &R) -> Result<Algebra<R>, AlgebraError> {
    let base = inner_base(f.base())?;
    let t0 = t0.resolve_in(&base);
    Ok(f.map_base(base, |p| p.eval(&t0)))
}

pub fn specialize_nonunital<R: Ring>(
    f: &NonunitalAlgebra<UniPoly<R>>,
    t0: &R,
) -> Result<NonunitalAlgebra<R>, AlgebraError> {
    let base = inner_base(f.base())?;
    let t0 = t0.resolve_in(&base);
    Ok(f.map_base(base, |p| p.eval(&t0)))
}

/// `R ⊕ N` with the adjoined unit as basis vector 0.
pub fn unitalize<R: Ring>(n: &NonunitalAlgebra<R>) -> Algebra<R> {
    let r = n.rank();
    let d = r + 1;
    let base = n.base().clone();
    let one = embed::<R>(1, &base);
    let zero = embed::<R>(0, &base);
    let mut mult = vec![zero.clone(); d * d * d];
    for j in 0..d {
        mult[idx(d, 0, j, j)] = one.clone();
        mult[idx(d, j, 0, j)] = one.clone();
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                mult[idx(d, i + 1, j + 1, k + 1)] = n.c(i, j, k).clone();
            }
        }
    }
    let mut unit = vec![zero; d];
    unit[0] = one;
    Algebra::from_flat(base, d, unit, mult).expect("consistent shape")
}

/// The kernel of an augmentation `A → R`, as a nonunital algebra in a
/// kernel basis.
pub fn augmentation_ideal<R: ExactLinalg>(
    a: &Algebra<R>,
    aug: &AlgebraHom<R>,
) -> Result<NonunitalAlgebra<R>, AlgebraError> {
    if aug.source() != a {
        return Err(AlgebraError::NotAlgebraMap("augmentation has a different source".into()));
    }
    if *aug.target() != Algebra::base_algebra(a.base().clone()) {
        return Err(AlgebraError::NotAlgebraMap("augmentation must land in the base ring".into()));
    }
    aug.check()?;
    let d = a.rank();
    let kernel = R::kernel(aug.matrix());
    if kernel.len() + 1 != d {
        return Err(AlgebraError::WrongRank {
            expected: d - 1,
            found: kernel.len(),
        });
    }
    let km = Matrix::from_cols(d, &kernel).map(|x| x.resolve_in(a.base()));
    let r = kernel.len();
    let mut mult = Vec::with_capacity(r * r * r);
    for i in 0..r {
        for j in 0..r {
            let prod = a.mul(&kernel[i], &kernel[j]);
            let y = R::solve(&km, &prod)
                .ok_or_else(|| AlgebraError::Internal("kernel is not closed under products".into()))?;
            mult.extend(y);
        }
    }
    NonunitalAlgebra::from_flat(a.base().clone(), r, mult)
}

/// Multiplies every structure constant by `t`.
pub fn scaled_mult_family<R: Ring>(n: &NonunitalAlgebra<R>) -> NonunitalAlgebra<UniPoly<R>> {
    let base = BaseRing::poly_t(n.base().clone());
    let mult = n
        .mult_flat()
        .iter()
        .map(|c| if c.is_zero() { UniPoly::zero() } else { UniPoly::monomial(c.clone(), 1) })
        .collect();
    NonunitalAlgebra::from_flat(base, n.rank(), mult).expect("shape preserved")
}
