use std::collections::BTreeMap;

use num_bigint::BigUint;
use proptest::prelude::*;
use symquot::bwb::{bott, bwb_cohomology, schur_dim, BundleWeight, BwbResult, GLWeight};
use symquot::Error;

fn dim(w: &[i64]) -> u64 {
    u64::try_from(&schur_dim(&GLWeight(w.to_vec())).unwrap()).unwrap()
}

fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[test]
fn schur_dimensions() {
    assert_eq!(dim(&[1, 0, -1]), 8);
    assert_eq!(dim(&[1, 1, -2]), 10);
    assert_eq!(dim(&[2, 1, -3]), 35);
    assert_eq!(dim(&[2, -1, -1]), 10);
    assert_eq!(dim(&[3, 0, 0]), 10);
    assert_eq!(dim(&[1, -1]), 3);
    assert!(matches!(schur_dim(&GLWeight(vec![0, 1])), Err(Error::NonDominant(_))));
}

#[test]
fn tangent_bundle_of_the_plane_as_grassmannian() {
    // T_G = S^∨ ⊗ Q on Gr(2, 3)
    let w = BundleWeight::new(vec![0, -1], vec![1]);
    assert_eq!(
        bwb_cohomology(&w, 2).unwrap(),
        BwbResult::Cohomology { degree: 0, weight: GLWeight(vec![1, 0, -1]) }
    );
}

#[test]
fn line_bundles_on_projective_space() {
    for n in 1..=4usize {
        // O(1) = S^∨ on Gr(1, n+1)
        let mut q = vec![0; n];
        let w = BundleWeight::new(vec![-1], q.clone());
        let (deg, d) = bwb_cohomology(&w, n).unwrap().dimension().unwrap();
        assert_eq!((deg, d), (0, BigUint::from(n + 1)));
        // O(-n-1) has one-dimensional top cohomology
        let w = BundleWeight::new(vec![n as i64 + 1], q.clone());
        let (deg, d) = bwb_cohomology(&w, n).unwrap().dimension().unwrap();
        assert_eq!((deg, d), (n, BigUint::from(1u8)));
        // O(-1) .. O(-n) are acyclic
        for j in 1..=n as i64 {
            assert_eq!(bwb_cohomology(&BundleWeight::new(vec![j], q.clone()), n).unwrap(), BwbResult::Zero);
        }
        q.push(0);
        assert!(bwb_cohomology(&BundleWeight::new(vec![0], q), n).is_err());
    }
}

#[test]
fn bott_formula_against_closed_form() {
    // h^0(P^n, Ω^p(j)) = C(j+n-p, j) C(j-1, p) for j > p; h^p(Ω^p) = 1.
    for n in 1..=4usize {
        for p in 0..=n {
            let diag = bott(p, 0, n).unwrap();
            assert_eq!(diag, BTreeMap::from([(p, BigUint::from(1u8))]), "n={n} p={p}");
            for j in (p as i64 + 1)..=8 {
                let expected = binom(j + n as i64 - p as i64, j) * binom(j - 1, p as i64);
                assert_eq!(bott(p, j, n).unwrap(), BTreeMap::from([(0, BigUint::from(expected))]), "n={n} p={p} j={j}");
            }
        }
    }
    assert_eq!(bott(1, 2, 2).unwrap(), BTreeMap::from([(0, BigUint::from(3u8))]));
    assert!(bott(3, 0, 2).unwrap().is_empty());
}

#[test]
fn bott_reproduces_cubic_twists_of_the_plane() {
    let column = |j: i64| -> Vec<u64> {
        (0..=2).map(|p| bott(p, j, 2).unwrap().get(&0).map_or(0, |v| u64::try_from(v).unwrap())).collect()
    };
    assert_eq!(column(3), vec![10, 8, 1]);
    assert_eq!(column(6), vec![28, 35, 10]);
}

fn random_weight(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #[test]
    fn dominant_concatenation_has_only_sections(s in random_weight(2), q in random_weight(2)) {
        let w = BundleWeight::new(s.clone(), q.clone());
        if q.last() >= s.first() {
            let r = bwb_cohomology(&w, 3).unwrap();
            let concatenated = w.concatenated();
            prop_assert_eq!(r, BwbResult::Cohomology { degree: 0, weight: GLWeight(concatenated) });
        }
    }

    #[test]
    fn serre_duality_on_grassmannians(k in 1usize..4, extra in 1usize..3, seed in prop::collection::vec(-3i64..=3, 6)) {
        let n_plus_1 = k + extra;
        let mut s: Vec<i64> = seed[..k].to_vec();
        s.sort_unstable_by(|a, b| b.cmp(a));
        let mut q: Vec<i64> = seed.iter().rev().take(extra).copied().collect();
        q.sort_unstable_by(|a, b| b.cmp(a));
        let n = n_plus_1 - 1;
        let dim_g = k * extra;
        let w = BundleWeight::new(s.clone(), q.clone());
        // dual ⊗ ω_G, ω_G = (det S)^{n+1-k} ⊗ (det Q)^{-k}
        let ds: Vec<i64> = s.iter().rev().map(|c| -c + extra as i64).collect();
        let dq: Vec<i64> = q.iter().rev().map(|c| -c - k as i64).collect();
        let dual = BundleWeight::new(ds, dq);
        let a = bwb_cohomology(&w, n).unwrap().dimension();
        let b = bwb_cohomology(&dual, n).unwrap().dimension();
        match (a, b) {
            (None, None) => {}
            (Some((i, x)), Some((j, y))) => {
                prop_assert_eq!(i + j, dim_g);
                prop_assert_eq!(x, y);
            }
            other => prop_assert!(false, "mismatch {:?}", other),
        }
    }

    #[test]
    fn schur_dim_is_shift_invariant_and_dual_invariant(w in random_weight(4), c in -3i64..=3) {
        let shifted: Vec<i64> = w.iter().map(|x| x + c).collect();
        let dual: Vec<i64> = w.iter().rev().map(|x| -x).collect();
        let d = schur_dim(&GLWeight(w)).unwrap();
        prop_assert_eq!(&d, &schur_dim(&GLWeight(shifted)).unwrap());
        prop_assert_eq!(&d, &schur_dim(&GLWeight(dual)).unwrap());
    }
}
