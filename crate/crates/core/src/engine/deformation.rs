//! Deformation-theoretic invariants of Hilbert schemes of points on surfaces.

use num_bigint::BigUint;
use num_traits::Zero;

use super::orbifold::hs_sym;
use crate::error::{Error, Result};
use crate::geometry::VarietyData;
use crate::multigraded::MultiDegree;

/// Low-degree invariants of `Hilb^n S` and the engine values they must match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationSummary {
    pub n: usize,
    /// `h^0(Hilb^n S, T)`.
    pub h0_tangent: BigUint,
    /// `h^1(Hilb^n S, O)`.
    pub h1_structure: BigUint,
    /// `h^1(Hilb^n S, T) = h^1(T) + h^0(T) h^1(O) + h^0(ω^∨)`.
    pub h1_tangent: BigUint,
    /// `h^2(Hilb^n S, O) = h^2(O) + C(h^1(O), 2)`.
    pub h2_structure: BigUint,
    /// `h^0(Hilb^n S, ∧²T) = C(h^0(T), 2) + h^0(ω^∨)`.
    pub h0_bivectors: BigUint,
    /// `HH^1` and `HH^2` of `[Sym^n S]` from the orbifold decomposition.
    pub engine_hh1: BigUint,
    pub engine_hh2: BigUint,
}

impl DeformationSummary {
    /// `HH^1 = h^1(O) + h^0(T)` and `HH^2 = h^1(T) + h^2(O) + h^0(∧²T)`.
    pub fn consistent(&self) -> bool {
        self.engine_hh1 == &self.h1_structure + &self.h0_tangent
            && self.engine_hh2 == &self.h1_tangent + &self.h2_structure + &self.h0_bivectors
    }
}

fn choose2(a: &BigUint) -> BigUint {
    if a.is_zero() {
        BigUint::zero()
    } else {
        a * (a - 1u8) / 2u8
    }
}

pub fn deformation_summary(x: &VarietyData, n: usize) -> Result<DeformationSummary> {
    if x.dim() != 2 {
        return Err(Error::Unsupported(format!("{} is not a surface", x.name())));
    }
    if n < 2 {
        return Err(Error::Unsupported(format!("need n >= 2, got {n}")));
    }
    // T = Ω¹ ⊗ ω^∨ on a surface.
    let h1_t = x.h(1, 1, -1)?;
    let h0_t = x.h(1, 0, -1)?;
    let h1_o = x.h(0, 1, 0)?;
    let h2_o = x.h(0, 2, 0)?;
    let h0_anti = x.h(0, 0, -1)?;

    let engine = hs_sym(x, 0, n)?.dims;
    Ok(DeformationSummary {
        n,
        h1_tangent: &h1_t + &h0_t * &h1_o + &h0_anti,
        h2_structure: h2_o + choose2(&h1_o),
        h0_bivectors: choose2(&h0_t) + &h0_anti,
        h0_tangent: h0_t,
        h1_structure: h1_o,
        engine_hh1: engine.get(&MultiDegree::new(vec![1])),
        engine_hh2: engine.get(&MultiDegree::new(vec![2])),
    })
}
