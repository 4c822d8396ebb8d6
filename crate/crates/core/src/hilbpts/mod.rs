//! Points of `Hilb_d(A^n)` as zero-dimensional ideals.

mod groebner;
mod ideal;
mod paths;
mod syzygy;

pub use groebner::{divide, groebner_with_cofactors, reduce, s_polynomial, GroebnerTrace};
pub use ideal::{colength, groebner_basis, Colength, IdealPoint, QuotientRing};
pub use paths::{
    canonical_basepoint, certify_step, path_to_basepoint, rees_path_to_basepoint, straighten_coordinates,
    BasepointPath, HomotopyStep, ReesPath, StepKind, Straightening, SurjectionData,
};
pub use syzygy::{
    schreyer_syzygies, tangent_space, tangent_space_dim, taylor_syzygies, Syzygy, SyzygyMethod, TangentReport,
    GENERAL_TANGENT_LIMIT,
};

use thiserror::Error;

use crate::corealg::CoreError;
use crate::finalg::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HilbError {
    #[error("quotient is infinite: no leading term is a pure power of {0}")]
    InfiniteColength(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("generator {0} is not a monomial")]
    NonMonomial(usize),
    #[error("images do not generate the algebra")]
    NotSurjective,
    #[error("spanning condition fails: {0}")]
    SpanningFailure(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Core(#[from] CoreError),
}
