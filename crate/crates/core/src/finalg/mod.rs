//! Finite free commutative algebras given by structure constants.
//!
//! An algebra of rank `d` over a base ring `R` is a unit vector in `R^d`
//! together with a tensor `c[i][j][k]`, the coefficient of `e_k` in
//! `e_i * e_j`. Families over the affine line are algebras whose base is
//! `R[t]`.

mod algebra;
mod decompose;
mod fiber;
mod json;
mod rees;
mod witnesses;

pub use algebra::{Algebra, AlgebraHom, AxiomReport, AxiomViolation, NonunitalAlgebra};
pub use decompose::{
    classify_degree3, isotype_report, local_decomposition, FactorType, IsotypeReport,
    LocalDecomposition, LocalField,
};
pub use fiber::{fiber_product, FiberProduct};
pub use json::{AlgebraJson, AnyAlgebra, NonunitalJson};
pub use rees::{
    augmentation_ideal, quotient_by_unit, rees_family, rees_family_with_completion,
    scaled_mult_family, specialize_family, specialize_nonunital, unitalize, ReesFamily,
    UnitQuotient,
};
pub use witnesses::{robber_witness, three_lines_witness, RobberWitness, ThreeLinesWitness};

use thiserror::Error;

use crate::corealg::{BaseRing, CoreError, UniPoly};

/// An algebra over `R[t]`.
pub type FamilyOverLine<R> = Algebra<UniPoly<R>>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("algebra axioms fail: {0}")]
    AxiomFailure(AxiomViolation),
    #[error("rank 0 algebra has no unit to quotient by")]
    ZeroRank,
    #[error("unit vector is not part of a basis (not primitive)")]
    NonPrimitiveUnit,
    #[error("base change matrix is not invertible")]
    Singular,
    #[error("base rings differ: {0} vs {1}")]
    BaseMismatch(BaseRing, BaseRing),
    #[error("expected rank {expected}, found {found}")]
    WrongRank { expected: usize, found: usize },
    #[error("not an algebra homomorphism: {0}")]
    NotAlgebraMap(String),
    #[error("map is not surjective")]
    NotSurjective,
    #[error("kernel of the difference map is not a free direct summand")]
    KernelNotFree,
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}
