mod common;

use common::*;
use hilbcalc::corealg::{BaseRing, MonomialOrder};
use hilbcalc::hilbpts::{colength, tangent_space, IdealPoint, SyzygyMethod};
use hilbcalc::BigRational;

#[test]
fn staircase_counts() {
    // plane partitions / partitions of small sizes
    assert_eq!(staircases(1, 4).len(), 1);
    assert_eq!(staircases(2, 3).len(), 3);
    assert_eq!(staircases(2, 4).len(), 5);
    assert_eq!(staircases(3, 3).len(), 6);
    assert_eq!(staircases(3, 4).len(), 13);
}

#[test]
fn direct_oracle_on_known_points() {
    let fat = vec![vec![0, 0], vec![0, 1], vec![1, 0]];
    assert_eq!(direct_tangent_dim(&fat), 6);
    let curvilinear = vec![vec![0], vec![1], vec![2]];
    assert_eq!(direct_tangent_dim(&curvilinear), 3);
    let spatial = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
    assert_eq!(direct_tangent_dim(&spatial), 18);
}

#[test]
fn taylor_matches_direct_oracle() {
    for k in 1..=3 {
        for d in 1..=4 {
            for s in staircases(k, d) {
                let ideal = ideal_string(k, &staircase_generators(&s));
                let p = IdealPoint::<BigRational>::parse(&ideal, &VARS[..k], BaseRing::Q, MonomialOrder::Degrevlex)
                    .unwrap();
                assert_eq!(colength(&p).unwrap().d, d, "{ideal}");
                let t = tangent_space(&p).unwrap();
                assert_eq!(t.method, SyzygyMethod::Taylor);
                assert_eq!(t.dim, direct_tangent_dim(&s), "{ideal}");
            }
        }
    }
}
