//! Serialized form of algebras: coefficients are strings in the polynomial
//! grammar, `mult[i][j][k]` is the coefficient of `e_k` in `e_i * e_j`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{Algebra, AlgebraError, FamilyOverLine, NonunitalAlgebra};
use crate::corealg::{BaseRing, Fp, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub base: BaseRing,
    pub rank: usize,
    pub unit: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonunitalJson {
    pub base: BaseRing,
    pub rank: usize,
    pub mult: Vec<Vec<Vec<String>>>,
}

fn check_base<R: Ring>(base: &BaseRing) -> Result<(), AlgebraError> {
    if R::accepts(base) {
        Ok(())
    } else {
        Err(AlgebraError::Unsupported(format!("coefficients cannot live in {base}")))
    }
}

fn parse_tensor<R: Ring>(base: &BaseRing, m: &[Vec<Vec<String>>]) -> Result<Vec<Vec<Vec<R>>>, AlgebraError> {
    m.iter()
        .map(|a| {
            a.iter()
                .map(|b| b.iter().map(|s| R::parse(s, base)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(AlgebraError::from)
}

fn show_tensor<R: Ring>(m: Vec<Vec<Vec<R>>>) -> Vec<Vec<Vec<String>>> {
    m.into_iter()
        .map(|a| a.into_iter().map(|b| b.into_iter().map(|x| x.to_string()).collect()).collect())
        .collect()
}

impl<R: Ring> Algebra<R> {
    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson {
            base: self.base().clone(),
            rank: self.rank(),
            unit: self.unit().iter().map(|x| x.to_string()).collect(),
            mult: show_tensor(self.mult_tensor()),
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self, AlgebraError> {
        check_base::<R>(&j.base)?;
        if j.unit.len() != j.rank {
            return Err(AlgebraError::DimensionMismatch(format!(
                "rank {} but unit has {} entries",
                j.rank,
                j.unit.len()
            )));
        }
        let unit = j
            .unit
            .iter()
            .map(|s| R::parse(s, &j.base))
            .collect::<Result<Vec<_>, _>>()?;
        Algebra::new(j.base.clone(), unit, parse_tensor(&j.base, &j.mult)?)
    }
}

impl<R: Ring> NonunitalAlgebra<R> {
    pub fn to_json(&self) -> NonunitalJson {
        NonunitalJson {
            base: self.base().clone(),
            rank: self.rank(),
            mult: show_tensor(self.mult_tensor()),
        }
    }

    pub fn from_json(j: &NonunitalJson) -> Result<Self, AlgebraError> {
        check_base::<R>(&j.base)?;
        NonunitalAlgebra::new(j.base.clone(), j.rank, parse_tensor(&j.base, &j.mult)?)
    }
}

/// An algebra over any supported base, chosen at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyAlgebra {
    Z(Algebra<BigInt>),
    Q(Algebra<BigRational>),
    Fp(Algebra<Fp>),
    ZT(FamilyOverLine<BigInt>),
    QT(FamilyOverLine<BigRational>),
    FpT(FamilyOverLine<Fp>),
}

impl AnyAlgebra {
    pub fn from_json(j: &AlgebraJson) -> Result<Self, AlgebraError> {
        Ok(match &j.base {
            BaseRing::Z => AnyAlgebra::Z(Algebra::from_json(j)?),
            BaseRing::Q => AnyAlgebra::Q(Algebra::from_json(j)?),
            BaseRing::Fp { p } => {
                BaseRing::fp(*p)?;
                AnyAlgebra::Fp(Algebra::from_json(j)?)
            }
            BaseRing::PolyT { inner } => match inner.as_ref() {
                BaseRing::Z => AnyAlgebra::ZT(Algebra::from_json(j)?),
                BaseRing::Q => AnyAlgebra::QT(Algebra::from_json(j)?),
                BaseRing::Fp { p } => {
                    BaseRing::fp(*p)?;
                    AnyAlgebra::FpT(Algebra::from_json(j)?)
                }
                other => {
                    return Err(AlgebraError::Unsupported(format!(
                        "families over {other}[t] are not supported"
                    )))
                }
            },
        })
    }

    pub fn to_json(&self) -> AlgebraJson {
        match self {
            AnyAlgebra::Z(a) => a.to_json(),
            AnyAlgebra::Q(a) => a.to_json(),
            AnyAlgebra::Fp(a) => a.to_json(),
            AnyAlgebra::ZT(a) => a.to_json(),
            AnyAlgebra::QT(a) => a.to_json(),
            AnyAlgebra::FpT(a) => a.to_json(),
        }
    }

    pub fn rank(&self) -> usize {
        self.to_json().rank
    }

    pub fn base(&self) -> BaseRing {
        self.to_json().base
    }
}
