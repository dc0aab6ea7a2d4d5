#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigUint;
use symquot::geometry::{hodge_table_from_rows, VarietyData};
use symquot::{AxisSystem, GradedDimension, MultiDegree};

/// A series in `x, y, t` with signed machine coefficients.
pub type Series = BTreeMap<(i64, i64, i64), i128>;

fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn mul(a: &Series, b: &Series, max_t: i64) -> Series {
    let mut out = Series::new();
    for (&(x1, y1, t1), &c1) in a {
        for (&(x2, y2, t2), &c2) in b {
            if t1 + t2 <= max_t {
                *out.entry((x1 + x2, y1 + y2, t1 + t2)).or_insert(0) += c1 * c2;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expands `∏_k ∏_{p,q} (1 - (-1)^{p+q} x^{p+k-1} y^{q+k-1} t^k)^{-(-1)^{p+q} h_k^{p,q}}`
/// factor by factor with binomial series, through `t^max_t`.
pub fn hodge_product(tables: impl Fn(i64) -> Vec<Vec<u64>>, max_t: i64) -> Series {
    let mut acc = Series::from([((0, 0, 0), 1)]);
    for k in 1..=max_t {
        for (p, row) in tables(k).iter().enumerate() {
            for (q, &h) in row.iter().enumerate() {
                if h == 0 {
                    continue;
                }
                let (dx, dy) = (p as i64 + k - 1, q as i64 + k - 1);
                let h = h as i128;
                let mut factor = Series::new();
                let mut j = 0i64;
                while j * k <= max_t {
                    // even: (1 - z)^{-h}; odd: (1 + z)^h
                    let c = if (p + q) % 2 == 0 { binom(h + j as i128 - 1, j as i128) } else { binom(h, j as i128) };
                    if c != 0 {
                        factor.insert((dx * j, dy * j, k * j), c);
                    }
                    j += 1;
                }
                acc = mul(&acc, &factor, max_t);
            }
        }
    }
    acc
}

/// The `t^n` slice as a table on axes `(x, y)`.
pub fn slice_xy(s: &Series, n: i64) -> GradedDimension {
    let mut g = GradedDimension::zero(AxisSystem::orbifold_hodge());
    for (&(x, y, t), &c) in s {
        if t == n {
            assert!(c > 0, "negative coefficient at x^{x} y^{y} t^{t}");
            g.add_at(MultiDegree::new(vec![x, y]), BigUint::from(c as u128)).unwrap();
        }
    }
    g
}

/// As a series on axes `(x, y, t)`.
pub fn to_graded(s: &Series) -> GradedDimension {
    let mut g = GradedDimension::zero(AxisSystem::hodge_series());
    for (&(x, y, t), &c) in s {
        assert!(c > 0);
        g.add_at(MultiDegree::new(vec![x, y, t]), BigUint::from(c as u128)).unwrap();
    }
    g
}

pub const K3_DIAMOND: [[u64; 3]; 3] = [[1, 0, 1], [0, 20, 0], [1, 0, 1]];

/// A surface with trivial canonical bundle and the Hodge diamond of a K3.
pub fn k3_type() -> VarietyData {
    let rows: Vec<Vec<u64>> = K3_DIAMOND.iter().map(|r| r.to_vec()).collect();
    let t = hodge_table_from_rows(&rows);
    let bundles = BTreeMap::from([("O".to_string(), (1..=6).map(|k| (k, t.clone())).collect())]);
    VarietyData::new("k3", 2, 1, BTreeMap::from([(0, t)]), bundles).unwrap()
}
