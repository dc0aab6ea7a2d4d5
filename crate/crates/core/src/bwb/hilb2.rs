//! HKR decomposition of Hochschild cohomology of the Hilbert square of `P^2`.
//!
//! `Hilb^2 P^2` is a `P^2`-bundle `π` over `Gr(2, 3)`. The pushforwards of the
//! relative polyvector fields are fixed sums of homogeneous bundles whose
//! cohomology comes from [`bwb_cohomology`].

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::{bwb_cohomology, schur_dim, BundleWeight, GLWeight};
use crate::engine::{corrected_conjecture_rhs, hs_sym};
use crate::error::{Error, Result};
use crate::geometry::{line_bundle_family, preset_projective_space};
use crate::multigraded::MultiDegree;

/// Columns `h^q(Hilb^2 P^2, ∧^p T)` for `p = 0..=4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hilb2P2Hkr {
    pub columns: BTreeMap<usize, BTreeMap<usize, BigUint>>,
    /// `χ(∧^3 T)`.
    pub wedge3_euler: BigInt,
    /// `HH^j` of `[Sym^2 P^2]` from the orbifold engine.
    pub engine: Vec<BigUint>,
}

impl Hilb2P2Hkr {
    pub fn h(&self, p: usize, q: usize) -> BigUint {
        self.columns.get(&p).and_then(|c| c.get(&q)).cloned().unwrap_or_default()
    }

    /// `HH^j = Σ_{p+q=j} h^q(∧^p T)`.
    pub fn hkr_series(&self) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); 5];
        for (p, col) in &self.columns {
            for (q, v) in col {
                if p + q < out.len() {
                    out[p + q] += v;
                }
            }
        }
        out
    }
}

/// Cohomology of `𝕊_{λ_S} S ⊗ 𝕊_{λ_Q} Q` on `Gr(2, 3)`, added into `acc`.
fn add_bundle(acc: &mut BTreeMap<usize, BigUint>, lambda_s: [i64; 2], lambda_q: i64, copies: u32) -> Result<()> {
    let w = BundleWeight::new(lambda_s.to_vec(), vec![lambda_q]);
    if let Some((q, d)) = bwb_cohomology(&w, 2)?.dimension() {
        *acc.entry(q).or_default() += d * copies;
    }
    Ok(())
}

pub fn hilb2_p2_hkr() -> Result<Hilb2P2Hkr> {
    let p2 = preset_projective_space(2)?;
    let engine_dims = hs_sym(&p2, 0, 2)?.dims;
    let engine: Vec<BigUint> = (0..5).map(|j| engine_dims.get(&MultiDegree::new(vec![j]))).collect();

    let mut columns = BTreeMap::new();
    columns.insert(0, BTreeMap::from([(0, BigUint::from(1u8))]));

    // T: π_* T_π, then π^* T_G = S^∨ ⊗ Q.
    let mut tangent = BTreeMap::new();
    add_bundle(&mut tangent, [2, -2], 0, 1)?;
    add_bundle(&mut tangent, [1, -1], 0, 1)?;
    add_bundle(&mut tangent, [0, -1], 1, 1)?;
    columns.insert(1, tangent);

    // ∧²T: ∧²T_π, T_π ⊗ π^* T_G, ∧²π^* T_G.
    let mut bivectors = BTreeMap::new();
    add_bundle(&mut bivectors, [3, -3], 0, 1)?;
    add_bundle(&mut bivectors, [1, -1], 0, 1)?;
    add_bundle(&mut bivectors, [2, -3], 1, 1)?;
    add_bundle(&mut bivectors, [1, -2], 1, 2)?;
    add_bundle(&mut bivectors, [0, -1], 1, 1)?;
    add_bundle(&mut bivectors, [-1, -1], 2, 1)?;
    columns.insert(2, bivectors);

    // ω^∨ = Sym^2 of the cubics on P^2.
    let cubics = schur_dim(&GLWeight(vec![3, 0, 0]))?;
    let r = usize::try_from(&cubics).map_err(|_| Error::Overflow("cubic forms"))?;
    let mut sym2 = vec![0i64; r];
    sym2[0] = 2;
    let anticanonical = schur_dim(&GLWeight(sym2))?;
    columns.insert(4, BTreeMap::from([(0, anticanonical.clone())]));

    let below = |j: usize, cols: &BTreeMap<usize, BTreeMap<usize, BigUint>>| -> BigUint {
        cols.iter().filter(|(p, _)| **p < 3).flat_map(|(p, c)| c.iter().filter(move |(q, _)| *p + *q == j)).map(|(_, v)| v).sum()
    };
    let remainder = |total: &BigUint, known: BigUint, j: usize| -> Result<BigUint> {
        if &known > total {
            return Err(Error::Inconsistent(format!("HH^{j}: known columns {known} exceed engine {total}")));
        }
        Ok(total - known)
    };
    let h0 = remainder(&engine[3], below(3, &columns), 3)?;
    let h1 = remainder(&engine[4], below(4, &columns) + &anticanonical, 4)?;
    columns.insert(3, BTreeMap::from([(0, h0.clone()), (1, h1.clone())]));
    let wedge3_euler = BigInt::from(h0.clone()) - BigInt::from(h1.clone());

    let out = Hilb2P2Hkr { columns, wedge3_euler, engine };
    let sums = out.hkr_series();
    for j in 0..3 {
        if sums[j] != out.engine[j] {
            return Err(Error::Inconsistent(format!("HH^{j}: HKR {} vs engine {}", sums[j], out.engine[j])));
        }
    }

    // H^{p,q}(Hilb^2, ω^∨) = H^q(∧^{4-p} T).
    let family = line_bundle_family(&p2, "O3", 2)?;
    let rhs = corrected_conjecture_rhs(&family, 2)?;
    for (q, v) in [(0, &h0), (1, &h1)] {
        let expected = rhs.get(&MultiDegree::new(vec![1, q, 2]));
        if &expected != v {
            return Err(Error::Inconsistent(format!("h^{q}(∧^3 T): bootstrap {v} vs Hodge series {expected}")));
        }
    }
    Ok(out)
}
