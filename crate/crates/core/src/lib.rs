//! Exact computations with finite algebras, points of Hilbert schemes,
//! Chern classes and enumerative bounds.

pub mod corealg;
pub mod finalg;
pub mod hilbpts;
pub mod charclass;
pub mod bounds;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub type ZAlgebra = finalg::Algebra<BigInt>;
pub type QAlgebra = finalg::Algebra<BigRational>;
pub type FpAlgebra = finalg::Algebra<corealg::Fp>;
pub type ZFamily = finalg::FamilyOverLine<BigInt>;
pub type QFamily = finalg::FamilyOverLine<BigRational>;
pub type FpFamily = finalg::FamilyOverLine<corealg::Fp>;
