mod common;

use common::*;
use hilbcalc::corealg::{vars_of, BaseRing, Fp, MonomialOrder, MultiPoly};
use hilbcalc::hilbpts::{
    canonical_basepoint, colength, groebner_basis, path_to_basepoint, straighten_coordinates, tangent_space,
    tangent_space_dim, IdealPoint, SyzygyMethod,
};
use hilbcalc::BigRational;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const IDEALS: [&str; 5] = ["x^2, x*y, y^2", "x^2 - y, y^2", "x^3, y", "x*y, x^2 - y^2, y^3", "x^2 + y, x*y"];

fn point(ideal: &str, p: u64, order: MonomialOrder) -> IdealPoint<Fp> {
    IdealPoint::parse(ideal, &["x", "y"], fp(p), order).unwrap()
}

/// The monomial generators of a staircase in `x, y` after `x ↦ x + a y`.
fn sheared(s: &[Vec<u32>], a: i64, p: u64) -> Vec<MultiPoly<Fp>> {
    let vars = vars_of(&["x", "y"]);
    let shifted = MultiPoly::parse(&format!("x + {a}*y"), &vars, &fp(p)).unwrap();
    let y = MultiPoly::<Fp>::var(&vars, "y").unwrap();
    staircase_generators(s)
        .iter()
        .map(|g| shifted.pow(g[0]) * y.pow(g[1]))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reduced_basis_ignores_presentation(seed in any::<u64>(), which in 0usize..5, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = point(IDEALS[which], p, MonomialOrder::Degrevlex);
        let mut gens = base.gens().to_vec();
        let c = MultiPoly::constant(base.vars(), Fp::new(rng.gen_range(1..p as i64), p));
        let extra = gens[0].clone() * c + gens[gens.len() - 1].clone();
        gens.push(extra);
        gens.shuffle(&mut rng);
        let other = base.with_gens(gens);
        prop_assert_eq!(groebner_basis(&base), groebner_basis(&other));
        prop_assert_eq!(tangent_space_dim(&base).unwrap(), tangent_space_dim(&other).unwrap());
    }

    #[test]
    fn colength_does_not_depend_on_the_order(which in 0usize..5, p in prop::sample::select(vec![2u64, 3, 5])) {
        let a = colength(&point(IDEALS[which], p, MonomialOrder::Degrevlex)).unwrap();
        let b = colength(&point(IDEALS[which], p, MonomialOrder::Lex)).unwrap();
        prop_assert_eq!(a.d, b.d);
    }

    #[test]
    fn tangent_dimension_survives_a_shear(idx in 0usize..10, a in 1i64..5) {
        let p = 5;
        let all: Vec<_> = (1..=4).flat_map(|d| staircases(2, d)).collect();
        let s = &all[idx % all.len()];
        let mono = IdealPoint::new(vars_of(&["x", "y"]), sheared(s, 0, p), MonomialOrder::Degrevlex, fp(p)).unwrap();
        let shear = mono.with_gens(sheared(s, a, p));
        let t = tangent_space(&shear).unwrap();
        prop_assert_eq!(colength(&shear).unwrap().d, s.len());
        prop_assert_eq!(t.dim, tangent_space_dim(&mono).unwrap());
        if !shear.is_monomial() {
            prop_assert_eq!(t.method, SyzygyMethod::Schreyer);
        }
    }

    #[test]
    fn paths_end_at_the_basepoint(seed in any::<u64>(), d in 1usize..5, extra in 0usize..3, p in prop::sample::select(vec![3u64, 5])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = (d - 1).max(1) + extra;
        let s = random_surjection(&mut rng, d, n, p);
        let path = path_to_basepoint(&s).unwrap();
        path.verify(&s).unwrap();
        prop_assert!(path.straightening.result.is_straight());
        prop_assert_eq!(path.rees.basepoint().unwrap(), canonical_basepoint(d, n, fp(p)).unwrap());
        prop_assert!(straighten_coordinates(&path.straightening.result).unwrap().steps.is_empty());
    }
}

#[test]
fn frozen_groebner_and_tangent_values() {
    let q = |s: &str| IdealPoint::<BigRational>::parse(s, &["x", "y"], BaseRing::Q, MonomialOrder::Degrevlex).unwrap();
    let strs = |p: &IdealPoint<BigRational>| groebner_basis(p).iter().map(ToString::to_string).collect::<Vec<_>>();
    assert_eq!(strs(&q("x^2, x*y, y^2")), ["y^2", "x*y", "x^2"]);
    assert_eq!(strs(&q("x - 1, x")), ["1"]);
    assert_eq!(colength(&q("x^2 - y, y^2")).unwrap().basis, ["1", "x", "y", "x*y"]);
    assert_eq!(tangent_space_dim(&q("x^2 - y, y^2")).unwrap(), 8);
    for p in [2, 5] {
        assert_eq!(tangent_space_dim(&point("x^2, x*y, y^2", p, MonomialOrder::Degrevlex)).unwrap(), 6);
    }
}
