//! Two explicit families over `Z[t]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{specialize_family, Algebra, AlgebraError, AlgebraHom, FamilyOverLine};
use crate::corealg::{BaseRing, Matrix, UniPoly};

type ZT = UniPoly<BigInt>;

fn zt(c: i64, deg: usize) -> ZT {
    UniPoly::monomial(BigInt::from(c), deg)
}

fn fail(msg: &str) -> AlgebraError {
    AlgebraError::Internal(msg.to_string())
}

/// Basis `1, x, y` over `Z[t]` with `x^2 = t x`, `y^2 = t y`, `x y = 0`:
/// three lines through a point at `t = 0`, three disjoint points at `t = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeLinesWitness {
    pub family: FamilyOverLine<BigInt>,
    /// `1 ↦ 1, x ↦ y, y ↦ t - x - y`.
    pub family_automorphism: Matrix<ZT>,
    /// The fiber of the family automorphism at `t = 0`, on the span of `x, y`.
    pub automorphism: Matrix<BigInt>,
}

pub fn three_lines_witness() -> ThreeLinesWitness {
    let base = BaseRing::poly_t(BaseRing::Z);
    let zero = || vec![ZT::zero(); 3];
    let e = |i: usize, c: ZT| {
        let mut v = zero();
        v[i] = c;
        v
    };
    let family = Algebra::from_products(base, e(0, ZT::one()), |i, j| match (i, j) {
        (0, k) | (k, 0) => e(k, ZT::one()),
        (1, 1) => e(1, ZT::t()),
        (2, 2) => e(2, ZT::t()),
        _ => zero(),
    })
    .expect("rank 3 shape");
    let family_automorphism = Matrix::from_rows(vec![
        vec![zt(1, 0), zt(0, 0), zt(1, 1)],
        vec![zt(0, 0), zt(0, 0), zt(-1, 0)],
        vec![zt(0, 0), zt(1, 0), zt(-1, 0)],
    ]);
    let automorphism = Matrix::from_ints(&[&[0, -1], &[1, -1]]);
    ThreeLinesWitness {
        family,
        family_automorphism,
        automorphism,
    }
}

impl ThreeLinesWitness {
    pub fn verify(&self) -> Result<(), AlgebraError> {
        self.family.check_axioms().into_result()?;
        let fiber0 = specialize_family(&self.family, &BigInt::zero())?;
        if fiber0 != Algebra::square_zero_extension(2, BaseRing::Z) {
            return Err(fail("fiber at t = 0 is not square-zero of rank 3"));
        }
        let fiber1 = specialize_family(&self.family, &BigInt::one())?;
        if fiber1.product(1, 1) != fiber1.basis_vector(1) {
            return Err(fail("x is not idempotent at t = 1"));
        }

        let sigma = AlgebraHom::new(self.family.clone(), self.family.clone(), self.family_automorphism.clone())?;
        sigma.check()?;

        let c = &self.automorphism;
        if c.det_cofactor() != BigInt::one() {
            return Err(fail("det c != 1"));
        }
        if c.pow(3) != Matrix::identity(2) {
            return Err(fail("c^3 != 1"));
        }
        let at0 = self.family_automorphism.map(|p| p.eval(&BigInt::zero()));
        let on_v = Matrix::from_rows(vec![
            vec![at0[(1, 1)].clone(), at0[(1, 2)].clone()],
            vec![at0[(2, 1)].clone(), at0[(2, 2)].clone()],
        ]);
        if on_v != *c {
            return Err(fail("family automorphism does not restrict to c at t = 0"));
        }
        AlgebraHom::new(fiber0.clone(), fiber0, at0)?.check()?;

        self.check_branches()
    }

    /// At `t = 1` over `Q` the idempotents `x, y, 1 - x - y` split the fiber,
    /// and the automorphism cycles them.
    fn check_branches(&self) -> Result<(), AlgebraError> {
        let q = |n: i64| BigRational::from_integer(BigInt::from(n));
        let fam_q = self.family.map_base(
            BaseRing::poly_t(BaseRing::Q),
            |p| p.map(|c| BigRational::from_integer(c.clone())),
        );
        let fiber = specialize_family(&fam_q, &q(1))?;
        let sigma = self
            .family_automorphism
            .map(|p| BigRational::from_integer(p.eval(&BigInt::one())));
        let branches = [
            vec![q(0), q(1), q(0)],
            vec![q(0), q(0), q(1)],
            vec![q(1), q(-1), q(-1)],
        ];
        let mut sum = fiber.zero_vec();
        for (i, e) in branches.iter().enumerate() {
            if fiber.mul(e, e) != *e {
                return Err(fail("branch is not idempotent"));
            }
            for f in &branches[i + 1..] {
                if fiber.mul(e, f) != fiber.zero_vec() {
                    return Err(fail("branches are not orthogonal"));
                }
            }
            if sigma.mul_vec(e) != branches[(i + 1) % 3] {
                return Err(fail("automorphism does not cycle the branches"));
            }
            sum = sum.iter().zip(e).map(|(a, b)| a + b).collect();
        }
        if sum != fiber.unit() {
            return Err(fail("branches do not sum to 1"));
        }
        Ok(())
    }
}

/// Basis `1, x` over `Z[t]` with `x^2 = t x`, marked by `x ↦ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct RobberWitness {
    pub family: FamilyOverLine<BigInt>,
    pub marking: AlgebraHom<ZT>,
}

pub fn robber_witness() -> RobberWitness {
    let base = BaseRing::poly_t(BaseRing::Z);
    let unit = vec![zt(1, 0), ZT::zero()];
    let family = Algebra::from_products(base, unit, |i, j| match (i, j) {
        (0, 0) => vec![zt(1, 0), ZT::zero()],
        (1, 1) => vec![ZT::zero(), ZT::t()],
        _ => vec![ZT::zero(), zt(1, 0)],
    })
    .expect("rank 2 shape");
    let marking = AlgebraHom::first_coordinate(&family);
    RobberWitness { family, marking }
}

impl RobberWitness {
    pub fn verify(&self) -> Result<(), AlgebraError> {
        self.family.check_axioms().into_result()?;
        self.marking.check()?;
        for t0 in [0i64, 1, 2, -1] {
            let t0 = BigInt::from(t0);
            let m = self.marking.map_base(BaseRing::Z, |p| p.eval(&t0));
            m.check()?;
            if *m.source() != specialize_family(&self.family, &t0)? {
                return Err(fail("marking fiber does not match the family fiber"));
            }
        }
        let fiber0 = specialize_family(&self.family, &BigInt::zero())?;
        if fiber0 != Algebra::square_zero_extension(1, BaseRing::Z) {
            return Err(fail("fiber at t = 0 is not the dual numbers"));
        }
        let fiber1 = specialize_family(&self.family, &BigInt::one())?;
        if fiber1.product(1, 1) != fiber1.basis_vector(1) {
            return Err(fail("x is not idempotent at t = 1"));
        }
        // basis x, 1 - x
        let p = Matrix::from_ints(&[&[0, 1], &[1, -1]]);
        if fiber1.change_basis(&p)? != Algebra::split(2, BaseRing::Z) {
            return Err(fail("fiber at t = 1 is not Z x Z"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_lines_passes() {
        let w = three_lines_witness();
        w.verify().unwrap();
        assert_eq!(w.automorphism.det_cofactor(), BigInt::one());
    }

    #[test]
    fn three_lines_rejects_wrong_automorphism() {
        let mut w = three_lines_witness();
        w.automorphism = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert!(w.verify().is_err());
    }

    #[test]
    fn robber_passes() {
        robber_witness().verify().unwrap();
    }
}
