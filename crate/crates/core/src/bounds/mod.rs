//! Codimension and connectivity formulas for `Hilb_d(A^n)`, with brute-force
//! point counts to check the linear-algebra inputs.

mod count;

pub use count::{
    count_nonsurjective_algebra_homs, count_nonsurjective_homs, count_nonsurjective_linear, surjection_count,
    CountKind, CountReport, SmallAlgebra, COUNT_LIMIT,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("outside the regime of the formula: {0}")]
    OutOfRegime(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
}

/// Codimension of the non-surjective maps in `Hom(k^n, k^r)`.
pub fn codim_nonsurjective_linear(n: usize, r: usize) -> Result<usize, BoundsError> {
    if r == 0 || n < r {
        return Err(BoundsError::OutOfRegime(format!("need n >= r >= 1, got n = {n}, r = {r}")));
    }
    Ok(n - r + 1)
}

/// Codimension bound for the locus of algebras that do not embed in `A^n`,
/// attained by the square-zero algebra.
pub fn hilb_complement_codim(n: usize, d: usize) -> Result<usize, BoundsError> {
    if d == 0 || n < d {
        return Err(BoundsError::OutOfRegime(format!("need n >= d >= 1, got n = {n}, d = {d}")));
    }
    Ok(n - d + 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub n: usize,
    pub d: usize,
    pub complex_connectivity: i64,
    pub real_connectivity: i64,
    pub suspension_a1_connectivity: i64,
    pub very_effective_index: i64,
    pub motivic_weight_iso_bound: i64,
}

impl ConnectivityReport {
    pub fn is_consistent(&self) -> bool {
        let (n, d) = (self.n as i64, self.d as i64);
        self.complex_connectivity == 2 * self.real_connectivity + 2
            && self.very_effective_index == self.suspension_a1_connectivity + 1
            && self.real_connectivity == n - d
            && self.motivic_weight_iso_bound == n - d + 1
    }
}

pub fn connectivity_report(n: usize, d: usize) -> Result<ConnectivityReport, BoundsError> {
    if n < d {
        return Err(BoundsError::OutOfRegime(format!("need n >= d >= 0, got n = {n}, d = {d}")));
    }
    let (ni, di) = (n as i64, d as i64);
    Ok(ConnectivityReport {
        n,
        d,
        complex_connectivity: 2 * ni - 2 * di + 2,
        real_connectivity: ni - di,
        suspension_a1_connectivity: ni - di + 1,
        very_effective_index: ni - di + 2,
        motivic_weight_iso_bound: ni - di + 1,
    })
}
