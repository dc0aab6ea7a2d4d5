//! Orbifold decomposition over conjugacy classes of `S_n`.

use num_bigint::BigUint;
use num_traits::Zero;

use super::SymQuotResult;
use crate::error::{Error, Result};
use crate::geometry::{hs_of_variety, CoefficientFamily, VarietyData};
use crate::multigraded::{
    collapse, direct_sum, sym_n, sym_total, tensor, AxisSystem, GradedDimension, LinearCollapse, MultiDegree,
    SuperAxes, TruncationWindow,
};
use crate::partitions::{partitions_of, CycleType};

fn hodge_super() -> SuperAxes {
    SuperAxes::new(["p", "q"])
}

fn hh_super() -> SuperAxes {
    SuperAxes::new(["hh"])
}

/// `⊗_i Sym^{λ_i}` of per-part tables, over all `ν ⊢ n` accepted by `keep`.
fn partition_sum<F>(
    axes: &AxisSystem,
    n: usize,
    k: &SuperAxes,
    keep: impl Fn(&CycleType) -> bool,
    mut factor: F,
) -> Result<Vec<(CycleType, GradedDimension)>>
where
    F: FnMut(usize) -> Result<GradedDimension>,
{
    let none = TruncationWindow::new();
    let mut out = Vec::new();
    for nu in partitions_of(n) {
        if !keep(&nu) {
            continue;
        }
        let mut acc = GradedDimension::unit(axes.clone());
        for (i, m) in nu.multiplicities() {
            let s = sym_n(&factor(i)?, m, k)?;
            acc = tensor(&acc, &s, &none)?;
        }
        out.push((nu, acc));
    }
    Ok(out)
}

/// Per-partition summands `⊗_i Sym^{λ_i} H^{#,⋆}(X, F^{⟨i⟩})` on axes `(p, q)`.
pub fn inertia_summands(f: &CoefficientFamily, n: usize) -> Result<Vec<(CycleType, GradedDimension)>> {
    partition_sum(&AxisSystem::hodge(), n, &hodge_super(), |_| true, |i| f.effective_table(i))
}

/// Bigraded cohomology of `(I[Sym^n X], F^{n})`.
pub fn inertia_hodge_sym(f: &CoefficientFamily, n: usize) -> Result<SymQuotResult> {
    let mut dims = GradedDimension::zero(AxisSystem::hodge());
    for (_, s) in inertia_summands(f, n)? {
        dims = direct_sum(&dims, &s)?;
    }
    Ok(SymQuotResult { n, dims })
}

/// `HH_*([Sym^n X], F^{n})` on the `hh` axis.
pub fn hh_with_coefficients_sym(f: &CoefficientFamily, n: usize) -> Result<SymQuotResult> {
    let bigraded = inertia_hodge_sym(f, n)?;
    Ok(SymQuotResult { n, dims: collapse(&bigraded.dims, &LinearCollapse::hkr())? })
}

/// `HS_k([Sym^n X])` on the `hh` axis, from the `HS` tables of `X`.
pub fn hs_sym(x: &VarietyData, k: i64, n: usize) -> Result<SymQuotResult> {
    let odd = ((k - 1) * x.dim() as i64).rem_euclid(2) == 1;
    let mut dims = GradedDimension::zero(AxisSystem::hochschild());
    let summands = partition_sum(
        &AxisSystem::hochschild(),
        n,
        &hh_super(),
        |nu| !odd || nu.all_parts_odd(),
        |i| Ok(hs_of_variety(x, 1 + (k - 1) * i as i64)?.dims),
    )?;
    for (_, s) in summands {
        dims = direct_sum(&dims, &s)?;
    }
    Ok(SymQuotResult { n, dims })
}

/// `∏_k ∏_j (1 - (-s)^j t^k)^{-(-1)^j hh_j(X, F^{⟨k⟩})}` through `t^N`, on axes `(hh, t)`.
pub fn hh_series_product(f: &CoefficientFamily, max_n: usize) -> Result<GradedDimension> {
    let mut gens = GradedDimension::zero(AxisSystem::hochschild_series());
    for k in 1..=max_n {
        gens = direct_sum(&gens, &f.hochschild_table(k)?.with_axis("t", k as i64)?)?;
    }
    sym_total(&gens, &hh_super(), &TruncationWindow::new().upper("t", max_n as i64))
}

/// Coefficient of `t^n` in a series on axes `(…, t)`.
pub fn series_slice(series: &GradedDimension, n: usize) -> Result<GradedDimension> {
    series.slice("t", n as i64)
}

/// Orbifold Hodge numbers on axes `(x, y)`: each summand shifted by `(age, age)`.
pub fn orbifold_hodge_age(f: &CoefficientFamily, n: usize) -> Result<SymQuotResult> {
    let mut dims = GradedDimension::zero(AxisSystem::orbifold_hodge());
    for (nu, s) in inertia_summands(f, n)? {
        let age = nu.age() as i64;
        for (d, v) in s.iter() {
            dims.add_at(MultiDegree::new(vec![d.get(0) + age, d.get(1) + age]), v.clone())?;
        }
    }
    Ok(SymQuotResult { n, dims })
}

/// Closed forms for `HH^1` and `HH^2` of `[Sym^n X]`, `n ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowDegreeHochschild {
    pub n: usize,
    pub hh1: BigUint,
    pub hh2: BigUint,
}

/// `HH^1 = HH^1(X)` and `HH^2 = HH^2(X) ⊕ ∧²HH^1(X)`, plus `HS^2_{-1}(X)` for
/// surfaces and `HS^2_{-2}(X)` for curves with `n ≥ 3`.
pub fn closed_hh1_hh2(x: &VarietyData, n: usize) -> Result<LowDegreeHochschild> {
    if n < 2 {
        return Err(Error::Unsupported(format!("closed forms need n >= 2, got {n}")));
    }
    let hh = hs_of_variety(x, 0)?.dims;
    let at = |t: &GradedDimension, j: i64| t.get(&MultiDegree::new(vec![j]));
    if at(&hh, 0) != BigUint::from(1u8) {
        return Err(Error::Unsupported(format!("{} is not connected: HH^0 = {}", x.name(), at(&hh, 0))));
    }
    let hh1 = at(&hh, 1);
    let wedge2 = if hh1.is_zero() { BigUint::zero() } else { &hh1 * (&hh1 - 1u8) / 2u8 };
    let mut hh2 = at(&hh, 2) + wedge2;
    match x.dim() {
        2 => hh2 += at(&hs_of_variety(x, -1)?.dims, 2),
        1 if n >= 3 => hh2 += at(&hs_of_variety(x, -2)?.dims, 2),
        _ => {}
    }
    Ok(LowDegreeHochschild { n, hh1, hh2 })
}
