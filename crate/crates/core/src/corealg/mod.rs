//! Exact scalars, sparse polynomials and exact linear algebra.

pub mod fp;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod snf;
pub mod unipoly;

pub use fp::Fp;
pub use matrix::{ExactLinalg, Matrix};
pub use poly::{format_terms, parse_terms, poly_op, vars_of, Exponents, MonomialOrder, MultiPoly, ParsedTerm, PolyOp, Vars};
pub use scalar::{content, is_prime, BaseRing, Field, Ring};
pub use snf::{smith_normal_form, SmithForm};
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("polynomials have different variable lists")]
    VariableMismatch,
    #[error("coefficients come from different rings")]
    DomainMismatch,
    #[error("negative exponent in a non-Laurent polynomial")]
    NegativeExponent,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not an element of {1}")]
    NotInRing(String, BaseRing),
    #[error("value does not belong to base ring {0}")]
    BaseMismatch(BaseRing),
    #[error("{0} is not prime")]
    NotPrime(u64),
}
