use super::{Algebra, AlgebraError, AlgebraHom};
use crate::corealg::{BaseRing, ExactLinalg, Matrix};

/// `B ×_D C` in a kernel basis, with its two projections.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberProduct<R> {
    pub algebra: Algebra<R>,
    pub to_b: AlgebraHom<R>,
    pub to_c: AlgebraHom<R>,
}

/// Pullback of `f: B → D` and `g: C → D`, with `f` surjective.
pub fn fiber_product<R: ExactLinalg>(
    f: &AlgebraHom<R>,
    g: &AlgebraHom<R>,
) -> Result<FiberProduct<R>, AlgebraError> {
    let base = f.source().base().clone();
    for other in [g.source().base(), f.target().base()] {
        if *other != base {
            return Err(AlgebraError::BaseMismatch(base, other.clone()));
        }
    }
    if !(base.is_field() || base == BaseRing::Z) {
        return Err(AlgebraError::Unsupported(format!("fiber products over {base}")));
    }
    if f.target() != g.target() {
        return Err(AlgebraError::DimensionMismatch("maps have different targets".into()));
    }
    f.check()?;
    g.check()?;
    if !f.is_surjective() {
        return Err(AlgebraError::NotSurjective);
    }
    let (b, c, dd) = (f.source().rank(), g.source().rank(), f.target().rank());
    let minus_g = g.matrix().map(|x| -x.clone());
    let diff = f.matrix().hstack(&minus_g);
    if !R::is_surjective(&diff) {
        return Err(AlgebraError::KernelNotFree);
    }
    let kernel = R::kernel(&diff);
    if kernel.len() + dd != b + c {
        return Err(AlgebraError::KernelNotFree);
    }
    let km = Matrix::from_cols(b + c, &kernel).map(|x| x.resolve_in(&base));
    let split = |v: &[R]| (v[..b].to_vec(), v[b..].to_vec());
    let join = |x: Vec<R>, y: Vec<R>| -> Vec<R> { x.into_iter().chain(y).collect() };
    let coords = |v: &[R]| -> Result<Vec<R>, AlgebraError> {
        R::solve(&km, v).ok_or_else(|| AlgebraError::Internal("element outside the fiber product".into()))
    };

    let unit = coords(&join(f.source().unit().to_vec(), g.source().unit().to_vec()))?;
    let r = kernel.len();
    let mut mult = Vec::with_capacity(r * r * r);
    for i in 0..r {
        for j in 0..r {
            let (xb, xc) = split(&kernel[i]);
            let (yb, yc) = split(&kernel[j]);
            let prod = join(f.source().mul(&xb, &yb), g.source().mul(&xc, &yc));
            mult.extend(coords(&prod)?);
        }
    }
    let algebra = Algebra::from_flat(base, r, unit, mult)?;
    let rows_b: Vec<Vec<R>> = (0..b).map(|i| km.row(i)).collect();
    let rows_c: Vec<Vec<R>> = (b..b + c).map(|i| km.row(i)).collect();
    let to_b = AlgebraHom::checked(algebra.clone(), f.source().clone(), Matrix::from_rows_sized(rows_b, r))?;
    let to_c = AlgebraHom::checked(algebra.clone(), g.source().clone(), Matrix::from_rows_sized(rows_c, r))?;
    Ok(FiberProduct { algebra, to_b, to_c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corealg::Fp;
    use num_bigint::BigInt;

    fn k(p: u64) -> BaseRing {
        BaseRing::Fp { p }
    }

    #[test]
    fn adds_a_tangent_direction() {
        let base = k(5);
        let b = Algebra::<Fp>::split(2, base.clone());
        let d = Algebra::<Fp>::base_algebra(base.clone());
        let c = Algebra::<Fp>::square_zero_extension(1, base.clone());
        let f = AlgebraHom::checked(b.clone(), d.clone(), Matrix::from_rows(vec![vec![Fp::new(1, 5), Fp::new(0, 5)]])).unwrap();
        let g = AlgebraHom::first_coordinate(&c);
        let fp = fiber_product(&f, &g).unwrap();
        assert_eq!(fp.algebra.rank(), 3);
        assert!(fp.algebra.check_axioms().is_pass());
        let rep = crate::finalg::isotype_report(&fp.algebra).unwrap();
        let mut ranks: Vec<usize> = rep.factors.iter().map(|t| t.rank).collect();
        ranks.sort();
        assert_eq!(ranks, vec![1, 2]);
    }

    #[test]
    fn pullback_along_identity() {
        let c = Algebra::<BigInt>::monogenic(BaseRing::Z, &[BigInt::from(0), BigInt::from(0)]);
        let d = Algebra::<BigInt>::base_algebra(BaseRing::Z);
        let g = AlgebraHom::first_coordinate(&c);
        let id = AlgebraHom::identity(&d);
        let fp = fiber_product(&id, &g).unwrap();
        assert_eq!(fp.algebra.rank(), c.rank());
        assert!(fp.to_c.is_surjective());
        let fp2 = fiber_product(&g, &id).unwrap();
        assert_eq!(fp2.algebra.rank(), c.rank());
        assert!(fp2.to_b.is_surjective());
    }

    #[test]
    fn non_surjective_is_rejected() {
        let base = k(3);
        let d = Algebra::<Fp>::square_zero_extension(1, base.clone());
        let b = Algebra::<Fp>::base_algebra(base.clone());
        let f = AlgebraHom::checked(b, d.clone(), Matrix::from_rows(vec![vec![Fp::new(1, 3)], vec![Fp::new(0, 3)]])).unwrap();
        let g = AlgebraHom::identity(&d);
        assert_eq!(fiber_product(&f, &g), Err(AlgebraError::NotSurjective));
    }
}
