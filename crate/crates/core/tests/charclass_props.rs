use hilbcalc::charclass::{
    gl2_decompose, reconstruct, verify_hilb3_presentation, BundleExpr, ChernRing, GL2Character, GeneratorSet,
    PolyInChern,
};
use hilbcalc::corealg::MultiPoly;
use hilbcalc::BigInt;
use proptest::prelude::*;

fn bundle() -> impl Strategy<Value = BundleExpr> {
    let leaf = prop_oneof![
        Just(BundleExpr::gen("V")),
        Just(BundleExpr::gen("V").dual()),
        Just(BundleExpr::gen("V").det()),
        Just(BundleExpr::Trivial(1)),
    ];
    leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.plus(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.tensor(b)),
            inner.clone().prop_map(|a| a.sym(2)),
            inner.clone().prop_map(|a| a.wedge(2)),
            inner.prop_map(BundleExpr::dual),
        ]
    })
    .prop_filter("defined and small", |e| {
        let gens = GeneratorSet::parse(&["V:2"]).unwrap();
        gens.rank(e).is_ok_and(|r| r <= 12) && gens.chern_roots(e).is_ok()
    })
}

fn total(ring: &ChernRing, e: &BundleExpr) -> Vec<MultiPoly<BigInt>> {
    ring.total_chern_class(e).unwrap().into_iter().map(|c| c.poly).collect()
}

fn strings(v: &[PolyInChern]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn whitney_sum(e in bundle(), f in bundle()) {
        let ring = ChernRing::parse_gens(&["V:2"]).unwrap();
        let (ce, cf) = (total(&ring, &e), total(&ring, &f));
        let sum = total(&ring, &e.clone().plus(f.clone()));
        for (k, c) in sum.iter().enumerate() {
            let mut conv = MultiPoly::zero(ring.vars());
            for i in 0..=k {
                if let (Some(a), Some(b)) = (ce.get(i), cf.get(k - i)) {
                    conv = conv + a.clone() * b.clone();
                }
            }
            prop_assert_eq!(c, &conv);
        }
    }

    #[test]
    fn dual_flips_odd_classes(e in bundle()) {
        let ring = ChernRing::parse_gens(&["V:2"]).unwrap();
        let c = total(&ring, &e);
        let d = total(&ring, &e.clone().dual());
        for (k, (a, b)) in c.iter().zip(&d).enumerate() {
            if k % 2 == 0 {
                prop_assert_eq!(a, b);
            } else {
                prop_assert_eq!(a, &(-b.clone()));
            }
        }
    }

    #[test]
    fn classes_are_homogeneous_and_rank_bounded(e in bundle()) {
        let ring = ChernRing::parse_gens(&["V:2"]).unwrap();
        let rank = ring.gens.rank(&e).unwrap();
        let c = ring.total_chern_class(&e).unwrap();
        prop_assert_eq!(c.len(), rank + 1);
        prop_assert!(c.iter().all(PolyInChern::is_homogeneous));
        prop_assert_eq!(ring.gens.chern_roots(&e).unwrap().len(), rank);
    }

    #[test]
    fn gl2_reconstruction(ws in prop::collection::vec((0i32..4, -3i32..3), 1..5)) {
        let weights: Vec<(i32, i32)> = ws.iter().map(|&(l, q)| (q + l, q)).collect();
        let chi = reconstruct(&weights);
        let mut sorted = weights.clone();
        sorted.sort();
        prop_assert_eq!(gl2_decompose(&chi).unwrap(), sorted);
        let dim: i32 = weights.iter().map(|(p, q)| p - q + 1).sum();
        prop_assert_eq!(chi.dim(), dim as u64);
    }

    #[test]
    fn bundle_characters_decompose(e in bundle()) {
        let gens = GeneratorSet::parse(&["V:2"]).unwrap();
        let chi = GL2Character::from_roots(&gens.chern_roots(&e).unwrap()).unwrap();
        let w = gl2_decompose(&chi).unwrap();
        prop_assert_eq!(reconstruct(&w), chi);
    }
}

#[test]
fn line_bundle_twist() {
    let ring = ChernRing::parse_gens(&["V:2", "L:1"]).unwrap();
    let e = BundleExpr::parse("V * L").unwrap();
    assert_eq!(ring.chern_class(&e, 1).unwrap(), ring.parse("c1_V + 2*c1_L").unwrap());
    assert_eq!(ring.chern_class(&e, 2).unwrap(), ring.parse("c2_V + c1_V*c1_L + c1_L^2").unwrap());
}

#[test]
fn frozen_classes() {
    let ring = ChernRing::parse_gens(&["V:2"]).unwrap();
    let e = BundleExpr::parse("hom(sym(2, dual(V)), dual(V))").unwrap();
    let gens = GeneratorSet::parse(&["V:2"]).unwrap();
    let chi = GL2Character::from_roots(&gens.chern_roots(&e).unwrap()).unwrap();
    assert_eq!(gl2_decompose(&chi).unwrap(), [(1, 0), (2, -1)]);
    assert_eq!(strings(&ring.total_chern_class(&BundleExpr::parse("sym(2, V)").unwrap()).unwrap()), [
        "1",
        "3*c1",
        "2*c1^2 + 4*c2",
        "4*c1*c2"
    ]);
    let r = verify_hilb3_presentation().unwrap();
    assert_eq!(r.generator, "9*c2^2 - 2*c1^2*c2");
    assert_eq!(r.factored, "c2*(-2*c1^2 + 9*c2)");
    assert_eq!(r.content, "1");
    assert!(r.mod_p_nonzero.iter().all(|m| m.nonzero));
}
