//! The Chow ring presentation for degree-3 points of infinite affine space.
//!
//! The locus of non-curvilinear points is `Gr_2` times the ambient space, with
//! normal bundle `Hom(S^2 V*, V*) / V = S^3 V ⊗ det V*`. Its top Chern class
//! generates the relation.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::chern::ChernRing;
use super::expr::BundleExpr;
use super::gl2::{gl2_decompose, GL2Character, Weight};
use super::CharError;

pub const CHECK_PRIMES: [u64; 4] = [2, 3, 5, 7];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModPCheck {
    pub p: u64,
    pub reduction: String,
    pub nonzero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hilb3Report {
    pub presentation: String,
    pub generator: String,
    pub factored: String,
    pub content: String,
    pub chern_classes: Vec<String>,
    pub tangent_weights: Vec<Weight>,
    pub normal_weights: Vec<Weight>,
    pub rank2_summands: usize,
    pub mod_p_nonzero: Vec<ModPCheck>,
}

fn check(ok: bool, what: &str) -> Result<(), CharError> {
    if ok {
        Ok(())
    } else {
        Err(CharError::Check(what.to_string()))
    }
}

pub fn verify_hilb3_presentation() -> Result<Hilb3Report, CharError> {
    let ring = ChernRing::parse_gens(&["V:2"])?;
    let normal = BundleExpr::parse("sym(3, V) * dual(det(V))")?;
    let classes = ring.total_chern_class(&normal)?;
    let top = classes[4].clone();
    let expected = ring.parse("9*c2^2 - 2*c1^2*c2")?;
    check(top == expected, "c4 differs from c2*(9*c2 - 2*c1^2)")?;
    let c2 = ring.parse("c2")?;
    let cofactor = ring.parse("9*c2 - 2*c1^2")?;
    check(ring.wrap(c2.poly.clone() * cofactor.poly.clone()) == top, "factorisation fails")?;
    let content = top.content();
    check(content == BigInt::one(), "generator is not primitive")?;
    let mut mod_p = Vec::new();
    for p in CHECK_PRIMES {
        let r = top.reduce_mod(p);
        check(!r.is_zero(), &format!("generator vanishes mod {p}"))?;
        mod_p.push(ModPCheck {
            p,
            reduction: r.to_string(),
            nonzero: true,
        });
    }

    // Hom(S^2 V*, V*) contains V once; the complement is the normal bundle.
    let tangent = BundleExpr::parse("hom(sym(2, dual(V)), dual(V))")?;
    let tangent_chi = GL2Character::from_roots(&ring.gens.chern_roots(&tangent)?)?;
    let tangent_weights = gl2_decompose(&tangent_chi)?;
    let normal_chi = GL2Character::from_roots(&ring.gens.chern_roots(&normal)?)?;
    let normal_weights = gl2_decompose(&normal_chi)?;
    let rank2: Vec<Weight> = tangent_weights.iter().copied().filter(|(p, q)| p - q + 1 == 2).collect();
    check(rank2 == [(1, 0)], "V is not the only rank 2 summand")?;
    check(
        tangent_weights == [(1, 0), (2, -1)] && normal_weights == [(2, -1)],
        "tangent space does not split as V plus the normal bundle",
    )?;

    Ok(Hilb3Report {
        presentation: format!("Z[c1, c2]/({top})"),
        generator: top.to_string(),
        factored: format!("c2*({cofactor})"),
        content: content.to_string(),
        chern_classes: classes.iter().map(|c| c.to_string()).collect(),
        tangent_weights,
        normal_weights,
        rank2_summands: rank2.len(),
        mod_p_nonzero: mod_p,
    })
}
