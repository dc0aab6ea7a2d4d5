use num_bigint::BigUint;
use symquot::bwb::hilb2_p2_hkr;
use symquot::engine::{
    boissiere_diff, corrected_conjecture_rhs, deformation_summary, hh_series_product, hs_sym, series_slice,
};
use symquot::geometry::{hs_of_variety, line_bundle_family, preset_bielliptic, preset_projective_space, serre_family};
use symquot::quiver::{coxeter, hh_euler_characteristic, sym2_p1_cartan, sym2_p1_series};
use symquot::{GradedDimension, MultiDegree};

fn by_degree(g: &GradedDimension) -> Vec<(i64, u64)> {
    g.iter().map(|(d, v)| (d.get(0), u64::try_from(v).unwrap())).collect()
}

#[test]
fn sym2_p1_hochschild() {
    let p1 = preset_projective_space(1).unwrap();
    assert_eq!(by_degree(&hs_sym(&p1, 0, 2).unwrap().dims), vec![(0, 1), (1, 3), (2, 3)]);
}

#[test]
fn hilb2_p2_hochschild_series() {
    let p2 = preset_projective_space(2).unwrap();
    assert_eq!(by_degree(&hs_sym(&p2, 0, 2).unwrap().dims), vec![(0, 1), (1, 8), (2, 48), (3, 115), (4, 83)]);
}

#[test]
fn hilb2_p2_hkr_columns() {
    let h = hilb2_p2_hkr().unwrap();
    let col = |p: usize| (0..2).map(|q| u64::try_from(&h.h(p, q)).unwrap()).collect::<Vec<_>>();
    assert_eq!(col(0), vec![1, 0]);
    assert_eq!(col(1), vec![8, 10]);
    assert_eq!(col(2), vec![38, 35]);
    assert_eq!(col(3), vec![80, 28]);
    assert_eq!(col(4), vec![55, 0]);
    assert_eq!(h.wedge3_euler, 52.into());
    let sums: Vec<u64> = h.hkr_series().iter().map(|v| u64::try_from(v).unwrap()).collect();
    assert_eq!(sums, vec![1, 8, 48, 115, 83]);
}

#[test]
fn bielliptic_hochschild_inputs() {
    let cases: [(usize, Vec<(i64, u64)>, Vec<(i64, u64)>); 4] = [
        (2, vec![(0, 1), (1, 2), (2, 2), (3, 2), (4, 1)], vec![(3, 2), (4, 4), (5, 2)]),
        (3, vec![(0, 1), (1, 2), (2, 1)], vec![(4, 1), (5, 2), (6, 1)]),
        (4, vec![(0, 1), (1, 2), (2, 1)], vec![]),
        (6, vec![(0, 1), (1, 2), (2, 1)], vec![]),
    ];
    for (ord, hh, hs) in cases {
        let s = preset_bielliptic(ord).unwrap();
        assert_eq!(by_degree(&hs_of_variety(&s, 0).unwrap().dims), hh, "HH ord {ord}");
        assert_eq!(by_degree(&hs_of_variety(&s, -1).unwrap().dims), hs, "HS_-1 ord {ord}");
    }
}

#[test]
fn bielliptic_hilbert_square() {
    let cases: [(usize, Vec<u64>); 4] = [
        (2, vec![1, 2, 3, 8, 12, 8, 3, 2, 1]),
        (3, vec![1, 2, 2, 2, 2, 2, 1]),
        (4, vec![1, 2, 2, 2, 1]),
        (6, vec![1, 2, 2, 2, 1]),
    ];
    for (ord, series) in cases {
        let s = preset_bielliptic(ord).unwrap();
        let got: Vec<u64> = by_degree(&hs_sym(&s, 0, 2).unwrap().dims).into_iter().map(|(_, v)| v).collect();
        assert_eq!(got, series, "ord {ord}");
    }
}

#[test]
fn counterexample_monomials() {
    let p2 = preset_projective_space(2).unwrap();
    let f = line_bundle_family(&p2, "O3", 2).unwrap();
    let diff: Vec<(String, u64, u64)> = boissiere_diff(&f, 2)
        .unwrap()
        .into_iter()
        .map(|e| (e.monomial, u64::try_from(&e.corrected).unwrap(), u64::try_from(&e.original).unwrap()))
        .collect();
    assert_eq!(
        diff,
        vec![("x y t^2".into(), 28, 10), ("x^2 y t^2".into(), 35, 8), ("x^3 y t^2".into(), 10, 1)]
    );
    let rhs = corrected_conjecture_rhs(&f, 2).unwrap();
    assert_eq!(rhs.get(&MultiDegree::from([0, 0, 2])), BigUint::from(55u8));
}

#[test]
fn deformation_values() {
    for (ord, expected) in [(2, 3u64), (3, 2), (4, 2), (6, 2)] {
        let s = preset_bielliptic(ord).unwrap();
        for n in 2..=4 {
            let d = deformation_summary(&s, n).unwrap();
            assert_eq!(d.h1_tangent, BigUint::from(expected), "ord {ord} n {n}");
            assert!(d.consistent(), "ord {ord} n {n}: {d:?}");
        }
    }
    let p2 = preset_projective_space(2).unwrap();
    let d = deformation_summary(&p2, 2).unwrap();
    assert_eq!(d.h1_tangent, BigUint::from(10u8));
    assert!(d.consistent());
}

#[test]
fn quiver_trace() {
    let a = sym2_p1_cartan();
    let c = coxeter(&a).unwrap();
    assert_eq!((0..5).map(|i| c[i][i]).sum::<i64>(), -1);
    assert_eq!(hh_euler_characteristic(&a).unwrap(), 1);
    let s = sym2_p1_series().unwrap();
    assert_eq!(s, [BigUint::from(1u8), BigUint::from(3u8), BigUint::from(3u8)]);
}

#[test]
fn product_series_matches_sym2_p1() {
    let p1 = preset_projective_space(1).unwrap();
    let f = serre_family(&p1, 0, 4).unwrap();
    let series = hh_series_product(&f, 4).unwrap();
    assert_eq!(by_degree(&series_slice(&series, 2).unwrap()), vec![(0, 1), (1, 3), (2, 3)]);
}
