//! Twisted Hodge numbers of a smooth projective variety and the coefficient
//! families built from them.

mod io;
mod presets;

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::multigraded::{collapse, shift, AxisSystem, GradedDimension, LinearCollapse, MultiDegree};

pub use io::{load_variety, save_variety, variety_from_json, variety_to_json};
pub use presets::{
    preset_bielliptic, preset_by_name, preset_projective_space, preset_projective_space_with_window,
    DEFAULT_OMEGA_WINDOW, PRESET_NAMES,
};

/// Hodge table `h^{p,q}` on axes `(p, q)`.
pub type HodgeTable = GradedDimension;

/// Builds a Hodge table from a dense matrix with rows `p` and columns `q`.
pub fn hodge_table_from_rows(rows: &[Vec<u64>]) -> HodgeTable {
    let mut t = GradedDimension::zero(AxisSystem::hodge());
    for (p, row) in rows.iter().enumerate() {
        for (q, &v) in row.iter().enumerate() {
            t.add_at(MultiDegree::new(vec![p as i64, q as i64]), BigUint::from(v)).unwrap();
        }
    }
    t
}

/// Dense `(d+1) × (d+1)` rows of a Hodge table.
pub fn hodge_table_rows(t: &HodgeTable, dim: usize) -> Result<Vec<Vec<u64>>> {
    let mut rows = vec![vec![0u64; dim + 1]; dim + 1];
    for (d, v) in t.iter() {
        let (p, q) = (d.get(0), d.get(1));
        if p < 0 || q < 0 || p > dim as i64 || q > dim as i64 {
            return Err(Error::OutsideBox { p, q, table: "export".into() });
        }
        rows[p as usize][q as usize] = u64::try_from(v).map_err(|_| Error::Overflow("hodge table export"))?;
    }
    Ok(rows)
}

/// Twisted Hodge data `h^{p,q}(X, ω^m)` and optional line-bundle tables.
#[derive(Clone, Debug, PartialEq)]
pub struct VarietyData {
    name: String,
    dim: usize,
    omega_order: usize,
    omega_tables: BTreeMap<i64, HodgeTable>,
    line_bundles: BTreeMap<String, BTreeMap<usize, HodgeTable>>,
}

impl VarietyData {
    /// Validates box support, periodicity when `omega_order > 0`, and twisted
    /// Serre duality `h^{p,q}(ω^m) = h^{d-p,d-q}(ω^{-m})` wherever both sides are known.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        omega_order: usize,
        omega_tables: BTreeMap<i64, HodgeTable>,
        line_bundles: BTreeMap<String, BTreeMap<usize, HodgeTable>>,
    ) -> Result<Self> {
        let name = name.into();
        if dim == 0 {
            return Err(Error::InvalidVariety("dimension must be positive".into()));
        }
        if omega_tables.is_empty() {
            return Err(Error::InvalidVariety("no omega tables".into()));
        }
        for (m, t) in &omega_tables {
            check_box(t, dim, &format!("omega^{m}"))?;
        }
        for (label, tables) in &line_bundles {
            for (k, t) in tables {
                check_box(t, dim, &format!("{label}^{k}"))?;
            }
        }
        let x = VarietyData { name, dim, omega_order, omega_tables, line_bundles };
        if omega_order > 0 {
            let mut by_residue: BTreeMap<i64, &HodgeTable> = BTreeMap::new();
            for (m, t) in &x.omega_tables {
                let r = m.rem_euclid(omega_order as i64);
                if let Some(prev) = by_residue.insert(r, t) {
                    if prev != t {
                        return Err(Error::Periodicity { order: omega_order, m: *m });
                    }
                }
            }
        }
        let d = dim as i64;
        for (m, t) in &x.omega_tables {
            let Ok(dual) = x.omega_table(-m) else { continue };
            for p in 0..=d {
                for q in 0..=d {
                    let a = t.get(&MultiDegree::new(vec![p, q]));
                    let b = dual.get(&MultiDegree::new(vec![d - p, d - q]));
                    if a != b {
                        return Err(Error::DualityViolation {
                            p,
                            q,
                            m: *m,
                            left: a.to_string(),
                            right: b.to_string(),
                        });
                    }
                }
            }
        }
        Ok(x)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn omega_order(&self) -> usize {
        self.omega_order
    }

    pub fn omega_tables(&self) -> &BTreeMap<i64, HodgeTable> {
        &self.omega_tables
    }

    pub fn line_bundles(&self) -> &BTreeMap<String, BTreeMap<usize, HodgeTable>> {
        &self.line_bundles
    }

    pub fn line_bundle_labels(&self) -> impl Iterator<Item = &str> {
        self.line_bundles.keys().map(String::as_str)
    }

    /// `h^{p,q}(X, ω^m)`, using periodicity when `omega_order > 0`.
    pub fn omega_table(&self, m: i64) -> Result<&HodgeTable> {
        if let Some(t) = self.omega_tables.get(&m) {
            return Ok(t);
        }
        if self.omega_order > 0 {
            let r = self.omega_order as i64;
            if let Some((_, t)) = self.omega_tables.iter().find(|(k, _)| (*k - m).rem_euclid(r) == 0) {
                return Ok(t);
            }
        }
        Err(Error::MissingTable(format!("{}: omega^{m}", self.name)))
    }

    /// The Hodge diamond `h^{p,q}(X)`.
    pub fn hodge_diamond(&self) -> Result<&HodgeTable> {
        self.omega_table(0)
    }

    pub fn line_bundle_table(&self, label: &str, k: usize) -> Result<&HodgeTable> {
        self.line_bundles
            .get(label)
            .ok_or_else(|| Error::MissingTable(format!("{}: unknown line bundle `{label}`", self.name)))?
            .get(&k)
            .ok_or_else(|| Error::MissingTable(format!("{}: {label}^{k}", self.name)))
    }

    /// `h^{p,q}(X, ω^m)` as a number.
    pub fn h(&self, p: i64, q: i64, m: i64) -> Result<BigUint> {
        Ok(self.omega_table(m)?.get(&MultiDegree::new(vec![p, q])))
    }
}

fn check_box(t: &HodgeTable, dim: usize, label: &str) -> Result<()> {
    if t.axes() != &AxisSystem::hodge() {
        return Err(Error::AxisMismatch { left: t.axes().to_string(), right: AxisSystem::hodge().to_string() });
    }
    for (d, _) in t.iter() {
        let (p, q) = (d.get(0), d.get(1));
        if p < 0 || q < 0 || p > dim as i64 || q > dim as i64 {
            return Err(Error::OutsideBox { p, q, table: label.to_string() });
        }
    }
    Ok(())
}

/// `HS_k^j(X) = ⊕_{q-p = j+(k-1)d} h^{p,q}(X, ω^{k-1})` on the `hh` axis.
#[derive(Clone, Debug, PartialEq)]
pub struct HSTable {
    pub k: i64,
    pub dims: GradedDimension,
}

pub fn hs_of_variety(x: &VarietyData, k: i64) -> Result<HSTable> {
    let t = x.omega_table(k - 1)?;
    let offset = (k - 1) * x.dim as i64;
    let mut dims = GradedDimension::zero(AxisSystem::hochschild());
    for (d, v) in t.iter() {
        dims.add_at(MultiDegree::new(vec![d.get(1) - d.get(0) - offset]), v.clone())?;
    }
    Ok(HSTable { k, dims })
}

/// Hodge tables `H^{p,q}(X, F^{⟨i⟩})` for `i = 1, …, max_i`, each with a degree
/// shift applied before symmetrization.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientFamily {
    tables: BTreeMap<usize, HodgeTable>,
    shifts: BTreeMap<usize, MultiDegree>,
    provenance: String,
}

impl CoefficientFamily {
    pub fn new(
        tables: BTreeMap<usize, HodgeTable>,
        shifts: BTreeMap<usize, MultiDegree>,
        provenance: impl Into<String>,
    ) -> Self {
        CoefficientFamily { tables, shifts, provenance: provenance.into() }
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn max_index(&self) -> usize {
        self.tables.keys().next_back().copied().unwrap_or(0)
    }

    /// Unshifted table for `F^{⟨i⟩}`.
    pub fn table(&self, i: usize) -> Result<&HodgeTable> {
        self.tables.get(&i).ok_or_else(|| Error::MissingTable(format!("{}: F^<{i}>", self.provenance)))
    }

    pub fn shift(&self, i: usize) -> MultiDegree {
        self.shifts.get(&i).cloned().unwrap_or_else(|| MultiDegree::zero(2))
    }

    /// `H^{p,q}(X, F^{⟨i⟩})` with its degree shift applied.
    pub fn effective_table(&self, i: usize) -> Result<HodgeTable> {
        shift(self.table(i)?, &self.shift(i))
    }

    /// `HH_*(X, F^{⟨i⟩})` on the `hh` axis.
    pub fn hochschild_table(&self, i: usize) -> Result<GradedDimension> {
        collapse(&self.effective_table(i)?, &LinearCollapse::hkr())
    }
}

/// Family `F = ω^{k-1}[(k-1)d]`, with `F^{⟨i⟩} = ω^{i(k-1)}[i(k-1)d]`, zero when
/// `(k-1)d` is odd and `i` even.
pub fn serre_family(x: &VarietyData, k: i64, max_i: usize) -> Result<CoefficientFamily> {
    let d = x.dim as i64;
    let mut tables = BTreeMap::new();
    let mut shifts = BTreeMap::new();
    for i in 1..=max_i {
        let ii = i as i64;
        let s = ii * (k - 1) * d;
        if ((k - 1) * d).rem_euclid(2) == 1 && i % 2 == 0 {
            tables.insert(i, GradedDimension::zero(AxisSystem::hodge()));
        } else {
            tables.insert(i, x.omega_table(ii * (k - 1))?.clone());
        }
        shifts.insert(i, MultiDegree::new(vec![0, s]));
    }
    Ok(CoefficientFamily::new(tables, shifts, format!("{}: omega^{}[{}]", x.name, k - 1, (k - 1) * d)))
}

/// Family `F = L` with `F^{⟨i⟩} = L^i`.
pub fn line_bundle_family(x: &VarietyData, label: &str, max_i: usize) -> Result<CoefficientFamily> {
    let mut tables = BTreeMap::new();
    for i in 1..=max_i {
        tables.insert(i, x.line_bundle_table(label, i)?.clone());
    }
    Ok(CoefficientFamily::new(tables, BTreeMap::new(), format!("{}: {label}", x.name)))
}
