use proptest::prelude::*;
use symquot::engine::hs_sym;
use symquot::geometry::preset_projective_space;
use symquot::quiver::{coxeter, hh_euler_characteristic, matmul, sym2_p1_cartan, sym2_p1_series, transpose, CartanMatrix};

#[test]
fn identity_cartan() {
    for r in 1..5 {
        let a = CartanMatrix::identity(r);
        let c = coxeter(&a).unwrap();
        for (i, row) in c.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, if i == j { -1 } else { 0 });
            }
        }
        assert_eq!(hh_euler_characteristic(&a).unwrap(), r as i64);
    }
}

#[test]
fn sym2_p1_algebra() {
    let a = sym2_p1_cartan();
    let c = coxeter(&a).unwrap();
    assert_eq!(c.iter().enumerate().map(|(i, r)| r[i]).sum::<i64>(), -1);
    let neg_c: Vec<Vec<i64>> = c.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    assert_eq!(matmul(a.rows(), &neg_c).unwrap(), transpose(a.rows()));
    assert_eq!(hh_euler_characteristic(&a).unwrap(), 1);

    let series = sym2_p1_series().unwrap();
    let p1 = preset_projective_space(1).unwrap();
    let engine = hs_sym(&p1, 0, 2).unwrap().dims;
    for (j, v) in series.iter().enumerate() {
        assert_eq!(&engine.get(&[j as i64].into()), v);
    }
    let chi: i64 = series.iter().enumerate().map(|(j, v)| if j % 2 == 0 { 1 } else { -1 } * i64::try_from(v).unwrap()).sum();
    assert_eq!(chi, hh_euler_characteristic(&a).unwrap());
}

#[test]
fn rejects_non_unitriangular() {
    assert!(CartanMatrix::new(vec![vec![1, 0], vec![1, 1]]).is_err());
    assert!(CartanMatrix::new(vec![vec![2, 0], vec![0, 1]]).is_err());
    assert!(CartanMatrix::new(vec![vec![1, 0, 0], vec![0, 1]]).is_err());
}

fn unitriangular(r: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(0i64..4, r * r).prop_map(move |v| {
        (0..r).map(|i| (0..r).map(|j| if i == j { 1 } else if j > i { v[i * r + j] } else { 0 }).collect()).collect()
    })
}

proptest! {
    #[test]
    fn coxeter_identity(rows in (1usize..6).prop_flat_map(unitriangular)) {
        let a = CartanMatrix::new(rows).unwrap();
        let c = coxeter(&a).unwrap();
        let neg_c: Vec<Vec<i64>> = c.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        prop_assert_eq!(matmul(a.rows(), &neg_c).unwrap(), transpose(a.rows()));
        // C^{-1} = -A^{-T} A
        let inv_t = transpose(&a.inverse().unwrap());
        let c_inv: Vec<Vec<i64>> = matmul(&inv_t, a.rows()).unwrap().iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        let id = matmul(&c, &c_inv).unwrap();
        for (i, row) in id.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                prop_assert_eq!(x, i64::from(i == j));
            }
        }
    }

    #[test]
    fn block_diagonal_is_additive(x in (1usize..4).prop_flat_map(unitriangular), y in (1usize..4).prop_flat_map(unitriangular)) {
        let (r, s) = (x.len(), y.len());
        let mut rows = vec![vec![0i64; r + s]; r + s];
        for i in 0..r { for j in 0..r { rows[i][j] = x[i][j]; } }
        for i in 0..s { for j in 0..s { rows[r + i][r + j] = y[i][j]; } }
        let total = hh_euler_characteristic(&CartanMatrix::new(rows).unwrap()).unwrap();
        let parts = hh_euler_characteristic(&CartanMatrix::new(x).unwrap()).unwrap()
            + hh_euler_characteristic(&CartanMatrix::new(y).unwrap()).unwrap();
        prop_assert_eq!(total, parts);
    }
}
