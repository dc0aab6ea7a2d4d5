//! Built-in varieties: projective spaces and bielliptic surfaces.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::{HodgeTable, VarietyData};
use crate::bwb::bott;
use crate::error::{Error, Result};
use crate::multigraded::{AxisSystem, GradedDimension, MultiDegree};

/// Omega tables of projective spaces cover `m ∈ [-W, W]`; line bundles cover `k ≤ W`.
pub const DEFAULT_OMEGA_WINDOW: usize = 12;

pub const PRESET_NAMES: [&str; 7] = ["p1", "p2", "p3", "bielliptic2", "bielliptic3", "bielliptic4", "bielliptic6"];

pub fn preset_by_name(name: &str) -> Result<VarietyData> {
    match name {
        "p1" => preset_projective_space(1),
        "p2" => preset_projective_space(2),
        "p3" => preset_projective_space(3),
        "bielliptic2" => preset_bielliptic(2),
        "bielliptic3" => preset_bielliptic(3),
        "bielliptic4" => preset_bielliptic(4),
        "bielliptic6" => preset_bielliptic(6),
        _ => Err(Error::Unsupported(format!("unknown preset `{name}`; known: {}", PRESET_NAMES.join(", ")))),
    }
}

fn twisted_projective(n: usize, j: i64) -> Result<HodgeTable> {
    let mut t = GradedDimension::zero(AxisSystem::hodge());
    for p in 0..=n {
        for (q, v) in bott(p, j, n)? {
            t.add_at(MultiDegree::new(vec![p as i64, q as i64]), v)?;
        }
    }
    Ok(t)
}

pub fn preset_projective_space(n: usize) -> Result<VarietyData> {
    preset_projective_space_with_window(n, DEFAULT_OMEGA_WINDOW)
}

/// `P^n` with `ω = O(-n-1)`; bundles `O`, `omega`, `omega_dual`, and `O3` on `P^2`.
pub fn preset_projective_space_with_window(n: usize, window: usize) -> Result<VarietyData> {
    if n == 0 {
        return Err(Error::InvalidVariety("P^0 is a point".into()));
    }
    let w = window as i64;
    let deg = n as i64 + 1;
    let mut omega = BTreeMap::new();
    for m in -w..=w {
        omega.insert(m, twisted_projective(n, -deg * m)?);
    }
    let mut bundles = BTreeMap::new();
    let mut family = |label: &str, step: i64| -> Result<()> {
        let mut tables = BTreeMap::new();
        for k in 0..=window {
            tables.insert(k, twisted_projective(n, step * k as i64)?);
        }
        bundles.insert(label.to_string(), tables);
        Ok(())
    };
    family("O", 0)?;
    family("omega", -deg)?;
    family("omega_dual", deg)?;
    if n == 2 {
        family("O3", 3)?;
    }
    VarietyData::new(format!("p{n}"), n, 0, omega, bundles)
}

/// `h^i(S, alb^* L^m)` for a torsion line bundle `L` of order `ord` on the
/// Albanese curve: `k ⊕ k[-1]` if `m ≡ 0`, `k[-1] ⊕ k[-2]` if `m ≡ -1`, else zero.
fn albanese_pullback(m: i64, ord: i64) -> [u64; 3] {
    if m.rem_euclid(ord) == 0 {
        [1, 1, 0]
    } else if (m + 1).rem_euclid(ord) == 0 {
        [0, 1, 1]
    } else {
        [0, 0, 0]
    }
}

/// Bielliptic surface whose canonical bundle has order `ord ∈ {2, 3, 4, 6}`,
/// with `Ω¹ = O ⊕ alb^* L^{-1}` and `ω = alb^* L^{-1}`.
pub fn preset_bielliptic(ord: usize) -> Result<VarietyData> {
    if ![2, 3, 4, 6].contains(&ord) {
        return Err(Error::Unsupported(format!("bielliptic surfaces have canonical order 2, 3, 4 or 6, not {ord}")));
    }
    let r = ord as i64;
    let table = |m: i64| -> Result<HodgeTable> {
        // Ω^p ⊗ ω^m as sums of alb^* L^e.
        let summands: [&[i64]; 3] = [&[-m], &[-m, -m - 1], &[-m - 1]];
        let mut t = GradedDimension::zero(AxisSystem::hodge());
        for (p, exps) in summands.iter().enumerate() {
            for &e in exps.iter() {
                for (q, v) in albanese_pullback(e, r).iter().enumerate() {
                    t.add_at(MultiDegree::new(vec![p as i64, q as i64]), BigUint::from(*v))?;
                }
            }
        }
        Ok(t)
    };
    let mut omega = BTreeMap::new();
    for m in 0..r {
        omega.insert(m, table(m)?);
    }
    let mut bundles = BTreeMap::new();
    for (label, step) in [("O", 0), ("omega", 1), ("omega_dual", -1)] {
        let mut tables = BTreeMap::new();
        for k in 0..=DEFAULT_OMEGA_WINDOW {
            tables.insert(k, table(step * k as i64)?);
        }
        bundles.insert(label.to_string(), tables);
    }
    VarietyData::new(format!("bielliptic{ord}"), 2, ord, omega, bundles)
}
