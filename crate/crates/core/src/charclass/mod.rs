//! Chern classes of bundles built from tautological ones, by the splitting
//! principle, in `CH*(BGL_n) = Z[c_1, ..., c_n]`.

mod chern;
mod expr;
mod gl2;
mod hilb3;

pub use chern::{primitive_part, ChernRing, PolyInChern};
pub use expr::{BundleExpr, Generator, GeneratorSet, RootMultiset, ROOT_LIMIT};
pub use gl2::{gl2_decompose, reconstruct, GL2Character, Weight};
pub use hilb3::{verify_hilb3_presentation, Hilb3Report, ModPCheck, CHECK_PRIMES};

use thiserror::Error;

use crate::corealg::CoreError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CharError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("wedge({m}) of a rank {rank} bundle")]
    WedgeTooLarge { m: usize, rank: usize },
    #[error("degree {k} is outside 0..={rank}")]
    DegreeOutOfRange { k: usize, rank: usize },
    #[error("polynomial is not symmetric in the roots")]
    NotSymmetric,
    #[error("not a GL2 character: {0}")]
    NotCharacter(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}
