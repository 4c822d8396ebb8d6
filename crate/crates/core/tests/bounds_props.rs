use hilbcalc::bounds::{
    codim_nonsurjective_linear, connectivity_report, count_nonsurjective_algebra_homs, count_nonsurjective_homs,
    count_nonsurjective_linear, hilb_complement_codim, surjection_count, BoundsError, SmallAlgebra,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn linear_counts_match_the_formula(n in 1usize..5, r in 1usize..4, p in prop::sample::select(vec![2u64, 3])) {
        prop_assume!(p.pow((n * r) as u32) <= 100_000);
        let c = count_nonsurjective_linear(n, r, p).unwrap();
        prop_assert!(c.matches_formula());
        prop_assert_eq!(c.total, p.pow((n * r) as u32));
        prop_assert_eq!(c.total - c.nonsurjective, surjection_count(n, r, p));
    }

    #[test]
    fn connectivity_is_consistent(n in 0usize..40, d in 0usize..40) {
        match connectivity_report(n, d) {
            Ok(r) => {
                prop_assert!(d <= n);
                prop_assert!(r.is_consistent());
                prop_assert_eq!(r.complex_connectivity, 2 * (n as i64 - d as i64) + 2);
            }
            Err(e) => {
                prop_assert!(d > n);
                prop_assert!(matches!(e, BoundsError::OutOfRegime(_)), "unexpected error");
            }
        }
    }
}

#[test]
fn nonsurjective_fraction_shrinks_with_n() {
    for p in [2u64, 3] {
        let fr: Vec<f64> = (2..=5)
            .filter(|&n| p.pow(2 * n as u32) <= 100_000)
            .map(|n| count_nonsurjective_linear(n, 2, p).unwrap().fraction())
            .collect();
        assert!(fr.windows(2).all(|w| w[1] < w[0]), "{fr:?}");
    }
}

#[test]
fn frozen_counts() {
    let c = count_nonsurjective_linear(2, 2, 2).unwrap();
    assert_eq!((c.nonsurjective, c.total, c.codimension), (10, 16, Some(1)));
    let c = count_nonsurjective_linear(3, 2, 2).unwrap();
    assert_eq!(c.nonsurjective, 22);
    let h = count_nonsurjective_algebra_homs(3, 2).unwrap();
    assert_eq!(h.nonsurjective, 176);
    assert_eq!(h.nonsurjective, 8 * c.nonsurjective);
    let direct = count_nonsurjective_homs(&SmallAlgebra::square_zero(2, 2), 3).unwrap();
    assert_eq!(direct.nonsurjective, 176);
    assert_eq!(hilb_complement_codim(5, 3), Ok(4));
    assert_eq!(codim_nonsurjective_linear(3, 2), Ok(2));
    let r = connectivity_report(5, 3).unwrap();
    assert_eq!(
        [r.complex_connectivity, r.real_connectivity, r.suspension_a1_connectivity, r.very_effective_index, r.motivic_weight_iso_bound],
        [6, 2, 3, 4, 3]
    );
}

#[test]
fn regime_and_size_errors() {
    assert_eq!(count_nonsurjective_linear(2, 2, 6), Err(BoundsError::NotPrime(6)));
    assert!(matches!(count_nonsurjective_linear(12, 2, 3), Err(BoundsError::SizeLimit(_))));
    assert!(codim_nonsurjective_linear(1, 3).is_err());
    assert!(hilb_complement_codim(0, 0).is_err());
}
