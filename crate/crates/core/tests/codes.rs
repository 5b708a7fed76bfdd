mod common;

use common::{
    brute_gaps, brute_min_distance, brute_points, complement_dimension, curve,
    dual_distance_search, maximal,
};
use goppa_core::agcode::{
    build_code, dual, dual_distance, hermitian_dual, is_hermitian_self_orthogonal, min_distance,
    weight_enumerator, DistanceMode,
};
use goppa_core::semigroup::{ell, gaps};

#[test]
fn point_sets_match_brute_force() {
    for (p, s) in [(3, 2), (3, 4), (5, 3), (5, 6), (7, 4)] {
        let c = curve(p, s);
        assert_eq!(c.points(), brute_points(&c).as_slice(), "q={p} s={s}");
    }
}

#[test]
fn gaps_match_brute_force() {
    for (q, s) in [
        (3, 2),
        (3, 4),
        (5, 3),
        (5, 6),
        (7, 4),
        (7, 8),
        (11, 6),
        (11, 12),
    ] {
        assert_eq!(gaps(q, s), brute_gaps(q as u64, s as u64), "q={q} s={s}");
    }
}

#[test]
fn dimension_beyond_n_matches_complement_formula() {
    for p in [3, 5] {
        let c = maximal(p);
        let n = c.points().len() as i64;
        let g = c.genus() as i64;
        for m in n..=n + 2 * g - 2 {
            assert_eq!(
                build_code(&c, m, None).unwrap().k(),
                complement_dimension(&c, m),
                "q={p} m={m}"
            );
        }
        // Beyond n + 2g - 2 the code is the whole space.
        assert_eq!(build_code(&c, n + 2 * g - 1, None).unwrap().k(), n as usize);
    }
}

#[test]
fn dimension_below_n_is_ell() {
    for p in [3, 5] {
        let c = maximal(p);
        for m in 0..c.points().len() as i64 {
            assert_eq!(
                build_code(&c, m, None).unwrap().k(),
                ell(&c, m),
                "q={p} m={m}"
            );
        }
    }
}

#[test]
fn exhaustive_distance_matches_direct_combinations() {
    let c = maximal(3);
    for m in [0, 2, 3, 4] {
        let code = build_code(&c, m, None).unwrap();
        let d = min_distance(&code, DistanceMode::Exhaustive)
            .unwrap()
            .unwrap();
        assert_eq!(Some(d.d), brute_min_distance(&code), "m={m}");
        let e = min_distance(&code, DistanceMode::Enumerator)
            .unwrap()
            .unwrap();
        assert_eq!(d, e);
    }
}

#[test]
fn dual_distance_matches_search() {
    let c = maximal(3);
    for (m, expected) in [(0, 2), (1, 2), (2, 2), (3, 3)] {
        let code = build_code(&c, m, None).unwrap();
        assert_eq!(dual_distance(&code).unwrap(), Some(expected), "m={m}");
        assert_eq!(
            dual_distance_search(&code, expected),
            Some(expected),
            "m={m}"
        );
        assert_eq!(dual_distance_search(&code, expected - 1), None, "m={m}");
    }
}

#[test]
fn hermitian_and_euclidean_duals_share_weights() {
    let c = maximal(3);
    for m in [10, 11, 12] {
        let code = build_code(&c, m, None).unwrap();
        let e = dual(&code);
        let h = hermitian_dual(&code);
        assert_eq!(e.k(), h.k());
        assert_eq!(
            weight_enumerator(&e).unwrap(),
            weight_enumerator(&h).unwrap(),
            "m={m}"
        );
    }
}

#[test]
fn self_orthogonal_codes_are_small() {
    for (p, s, m_max) in [(3, 2, 16), (3, 4, 20), (5, 3, 30)] {
        let c = curve(p, s);
        for m in 0..=m_max {
            let code = build_code(&c, m, None).unwrap();
            if is_hermitian_self_orthogonal(&code) {
                assert!(2 * code.k() <= code.n(), "q={p} s={s} m={m}");
                assert!(hermitian_dual(&code).k() + code.k() == code.n());
            }
        }
    }
}

#[test]
fn hermitian_curve_threshold() {
    // The self-orthogonal range on y^3 + y = x^4 ends at m = q^2 - 2.
    let c = curve(3, 4);
    let so: Vec<i64> = (0..=20)
        .filter(|&m| is_hermitian_self_orthogonal(&build_code(&c, m, None).unwrap()))
        .collect();
    assert_eq!(so, (0..=7).collect::<Vec<_>>());
}
