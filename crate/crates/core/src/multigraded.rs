//! Finitely supported multigraded dimension series.
//!
//! A [`GradedDimension`] maps a [`MultiDegree`] (a vector of integers, one per
//! named axis) to a positive dimension. Symmetric powers are super-graded: the
//! parity of a degree is the sum of its components along a chosen set of
//! [`SuperAxes`].

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Ordered list of named axes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AxisSystem(Arc<[String]>);

impl AxisSystem {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateAxis(n.clone()));
            }
        }
        Ok(AxisSystem(names.into()))
    }

    /// Axes `(p, q)` of a Hodge table.
    pub fn hodge() -> Self {
        Self::new(["p", "q"]).unwrap()
    }

    /// Single Hochschild degree axis `hh`.
    pub fn hochschild() -> Self {
        Self::new(["hh"]).unwrap()
    }

    /// Axes `(hh, t)`: Hochschild degree and number of points.
    pub fn hochschild_series() -> Self {
        Self::new(["hh", "t"]).unwrap()
    }

    /// Axes `(x, y)` of an orbifold Hodge polynomial.
    pub fn orbifold_hodge() -> Self {
        Self::new(["x", "y"]).unwrap()
    }

    /// Axes `(x, y, t)` of a Hodge generating series.
    pub fn hodge_series() -> Self {
        Self::new(["x", "y", "t"]).unwrap()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownAxis(name.to_string()))
    }

    fn ensure_same(&self, other: &AxisSystem) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AxisMismatch { left: self.to_string(), right: other.to_string() })
        }
    }
}

impl fmt::Display for AxisSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(","))
    }
}

impl fmt::Debug for AxisSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Integer vector indexed by the axes of an [`AxisSystem`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct MultiDegree(Vec<i64>);

impl MultiDegree {
    pub fn new(components: Vec<i64>) -> Self {
        MultiDegree(components)
    }

    pub fn zero(arity: usize) -> Self {
        MultiDegree(vec![0; arity])
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, axis: usize) -> i64 {
        self.0[axis]
    }

    pub fn scaled(&self, factor: i64) -> Self {
        MultiDegree(self.0.iter().map(|c| c * factor).collect())
    }

    /// Parity `Σ_{k∈K} d_k mod 2` along resolved super-axis indices.
    pub fn parity(&self, super_axes: &[usize]) -> bool {
        super_axes.iter().map(|&i| self.0[i]).sum::<i64>().rem_euclid(2) == 1
    }

    /// Koszul pairing `Σ_{k∈K} a_k b_k mod 2`.
    pub fn koszul_pairing(&self, other: &MultiDegree, super_axes: &[usize]) -> bool {
        super_axes.iter().map(|&i| self.0[i] * other.0[i]).sum::<i64>().rem_euclid(2) == 1
    }
}

impl From<Vec<i64>> for MultiDegree {
    fn from(v: Vec<i64>) -> Self {
        MultiDegree(v)
    }
}

impl From<&[i64]> for MultiDegree {
    fn from(v: &[i64]) -> Self {
        MultiDegree(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for MultiDegree {
    fn from(v: [i64; N]) -> Self {
        MultiDegree(v.to_vec())
    }
}

impl Add for &MultiDegree {
    type Output = MultiDegree;
    fn add(self, rhs: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &MultiDegree {
    type Output = MultiDegree;
    fn sub(self, rhs: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &MultiDegree {
    type Output = MultiDegree;
    fn neg(self) -> MultiDegree {
        MultiDegree(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl std::str::FromStr for MultiDegree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(MultiDegree(Vec::new()));
        }
        s.split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Inconsistent(format!("bad degree key `{s}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(MultiDegree)
    }
}

/// Finitely supported map from multidegrees to positive dimensions.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedDimension {
    axes: AxisSystem,
    terms: BTreeMap<MultiDegree, BigUint>,
}

impl GradedDimension {
    /// The zero series.
    pub fn zero(axes: AxisSystem) -> Self {
        GradedDimension { axes, terms: BTreeMap::new() }
    }

    /// One-dimensional in degree zero.
    pub fn unit(axes: AxisSystem) -> Self {
        let mut g = Self::zero(axes.clone());
        g.terms.insert(MultiDegree::zero(axes.len()), BigUint::from(1u8));
        g
    }

    /// Builds a series, summing repeated degrees and dropping zeros.
    pub fn from_terms<I, D, V>(axes: AxisSystem, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (D, V)>,
        D: Into<MultiDegree>,
        V: Into<BigUint>,
    {
        let mut g = Self::zero(axes);
        for (d, v) in terms {
            g.add_at(d.into(), v.into())?;
        }
        Ok(g)
    }

    /// Adds `value` to the dimension at `degree`.
    pub fn add_at(&mut self, degree: MultiDegree, value: BigUint) -> Result<()> {
        if degree.arity() != self.axes.len() {
            return Err(Error::Arity { expected: self.axes.len(), found: degree.arity() });
        }
        if !value.is_zero() {
            *self.terms.entry(degree).or_default() += value;
        }
        Ok(())
    }

    pub fn axes(&self) -> &AxisSystem {
        &self.axes
    }

    /// Dimension at `degree` (zero off the support).
    pub fn get(&self, degree: &MultiDegree) -> BigUint {
        self.terms.get(degree).cloned().unwrap_or_default()
    }

    /// Dimension at `degree`, as `u64`; panics on overflow.
    pub fn get_u64(&self, degree: impl Into<MultiDegree>) -> u64 {
        self.get(&degree.into()).to_u64().expect("dimension exceeds u64")
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiDegree, &BigUint)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_dimension(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Terms whose component along `axis` equals `value`, with that axis removed.
    pub fn slice(&self, axis: &str, value: i64) -> Result<GradedDimension> {
        let idx = self.axes.index_of(axis)?;
        let names: Vec<String> =
            self.axes.names().iter().enumerate().filter(|(i, _)| *i != idx).map(|(_, n)| n.clone()).collect();
        let mut out = GradedDimension::zero(AxisSystem::new(names)?);
        for (d, v) in &self.terms {
            if d.get(idx) == value {
                let rest: Vec<i64> =
                    d.components().iter().enumerate().filter(|(i, _)| *i != idx).map(|(_, c)| *c).collect();
                out.terms.insert(MultiDegree(rest), v.clone());
            }
        }
        Ok(out)
    }

    /// Appends a new axis, placing every term at `value` on it.
    pub fn with_axis(&self, axis: &str, value: i64) -> Result<GradedDimension> {
        let mut names = self.axes.names().to_vec();
        names.push(axis.to_string());
        let mut out = GradedDimension::zero(AxisSystem::new(names)?);
        for (d, v) in &self.terms {
            let mut c = d.components().to_vec();
            c.push(value);
            out.terms.insert(MultiDegree(c), v.clone());
        }
        Ok(out)
    }

    /// Terms inside `window`.
    pub fn restrict(&self, window: &TruncationWindow) -> Result<GradedDimension> {
        let bounds = window.resolve(&self.axes)?;
        let mut out = GradedDimension::zero(self.axes.clone());
        for (d, v) in &self.terms {
            if within(d.components(), &bounds) {
                out.terms.insert(d.clone(), v.clone());
            }
        }
        Ok(out)
    }

    /// Renders the series as a polynomial, one variable per axis.
    pub fn to_polynomial_string(&self, variables: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (d, v) in &self.terms {
            let mut mono = Vec::new();
            for (c, var) in d.components().iter().zip(variables) {
                match c {
                    0 => {}
                    1 => mono.push(var.to_string()),
                    _ => mono.push(format!("{var}^{c}")),
                }
            }
            let coeff = v.to_string();
            if mono.is_empty() {
                parts.push(coeff);
            } else if coeff == "1" {
                parts.push(mono.join(" "));
            } else {
                parts.push(format!("{coeff} {}", mono.join(" ")));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Debug for GradedDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedDimension{} {{", self.axes)?;
        for (i, (d, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, " ({d}): {v}")?;
        }
        f.write_str(" }")
    }
}

/// Axes along which the Koszul sign rule applies.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SuperAxes(BTreeSet<String>);

impl SuperAxes {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        SuperAxes(names.into_iter().map(Into::into).collect())
    }

    /// No super axes: ordinary symmetric powers.
    pub fn none() -> Self {
        SuperAxes(BTreeSet::new())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    /// Axis indices in `axes`; errors on names not in the system.
    pub fn resolve(&self, axes: &AxisSystem) -> Result<Vec<usize>> {
        self.0.iter().map(|n| axes.index_of(n)).collect()
    }
}

type Bounds = Vec<(Option<i64>, Option<i64>)>;

/// Per-axis optional inclusive bounds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TruncationWindow {
    bounds: BTreeMap<String, (Option<i64>, Option<i64>)>,
}

impl TruncationWindow {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn upper(mut self, axis: &str, hi: i64) -> Self {
        self.bounds.entry(axis.to_string()).or_default().1 = Some(hi);
        self
    }

    pub fn lower(mut self, axis: &str, lo: i64) -> Self {
        self.bounds.entry(axis.to_string()).or_default().0 = Some(lo);
        self
    }

    pub fn between(self, axis: &str, lo: i64, hi: i64) -> Self {
        self.lower(axis, lo).upper(axis, hi)
    }

    pub fn bound(&self, axis: &str) -> (Option<i64>, Option<i64>) {
        self.bounds.get(axis).copied().unwrap_or_default()
    }

    fn resolve(&self, axes: &AxisSystem) -> Result<Bounds> {
        let mut out = vec![(None, None); axes.len()];
        for (name, &(lo, hi)) in &self.bounds {
            if let (Some(l), Some(h)) = (lo, hi) {
                if l > h {
                    return Err(Error::InvalidWindow(format!("{name}: {l} > {h}")));
                }
            }
            out[axes.index_of(name)?] = (lo, hi);
        }
        Ok(out)
    }
}

fn within(d: &[i64], bounds: &Bounds) -> bool {
    d.iter().zip(bounds).all(|(c, (lo, hi))| lo.is_none_or(|l| *c >= l) && hi.is_none_or(|h| *c <= h))
}

/// `(V[d])_i = V_{i+d}`: every degree moves by `-d`.
pub fn shift(v: &GradedDimension, d: &MultiDegree) -> Result<GradedDimension> {
    if d.arity() != v.axes.len() {
        return Err(Error::Arity { expected: v.axes.len(), found: d.arity() });
    }
    let terms = v.terms.iter().map(|(e, c)| (e - d, c.clone())).collect();
    Ok(GradedDimension { axes: v.axes.clone(), terms })
}

pub fn direct_sum(u: &GradedDimension, v: &GradedDimension) -> Result<GradedDimension> {
    u.axes.ensure_same(&v.axes)?;
    let mut out = u.clone();
    for (d, c) in &v.terms {
        *out.terms.entry(d.clone()).or_default() += c;
    }
    Ok(out)
}

/// Graded tensor product, filtered to `window`.
pub fn tensor(u: &GradedDimension, v: &GradedDimension, window: &TruncationWindow) -> Result<GradedDimension> {
    u.axes.ensure_same(&v.axes)?;
    let bounds = window.resolve(&u.axes)?;
    let mut out = GradedDimension::zero(u.axes.clone());
    for (a, x) in &u.terms {
        for (b, y) in &v.terms {
            let d = a + b;
            if within(d.components(), &bounds) {
                *out.terms.entry(d).or_default() += x * y;
            }
        }
    }
    Ok(out)
}

/// Integer linear map on degrees, `target_r = Σ_c rows[r][c] * source_c`.
#[derive(Clone, Debug)]
pub struct LinearCollapse {
    source: AxisSystem,
    target: AxisSystem,
    rows: Vec<Vec<i64>>,
}

impl LinearCollapse {
    /// `rows[r]` lists `(source axis, coefficient)` pairs for target axis `r`.
    pub fn new(source: &AxisSystem, target: &[&str], rows: &[&[(&str, i64)]]) -> Result<Self> {
        if target.len() != rows.len() {
            return Err(Error::Arity { expected: target.len(), found: rows.len() });
        }
        let mut matrix = Vec::with_capacity(rows.len());
        for row in rows {
            let mut r = vec![0; source.len()];
            for (name, coeff) in row.iter() {
                r[source.index_of(name)?] += coeff;
            }
            matrix.push(r);
        }
        Ok(LinearCollapse { source: source.clone(), target: AxisSystem::new(target.iter().copied())?, rows: matrix })
    }

    /// `(p, q) ↦ q - p`.
    pub fn hkr() -> Self {
        Self::new(&AxisSystem::hodge(), &["hh"], &[&[("q", 1), ("p", -1)]]).unwrap()
    }

    /// `(x, y, t) ↦ (y - x, t)`, the substitution `x = s^{-1}, y = s`.
    pub fn hodge_to_hochschild() -> Self {
        Self::new(&AxisSystem::hodge_series(), &["hh", "t"], &[&[("y", 1), ("x", -1)], &[("t", 1)]]).unwrap()
    }

    pub fn source(&self) -> &AxisSystem {
        &self.source
    }

    pub fn target(&self) -> &AxisSystem {
        &self.target
    }

    pub fn apply(&self, d: &MultiDegree) -> MultiDegree {
        MultiDegree(self.rows.iter().map(|r| r.iter().zip(d.components()).map(|(a, b)| a * b).sum()).collect())
    }
}

pub fn collapse(v: &GradedDimension, map: &LinearCollapse) -> Result<GradedDimension> {
    v.axes.ensure_same(&map.source)?;
    let mut out = GradedDimension::zero(map.target.clone());
    for (d, c) in &v.terms {
        *out.terms.entry(map.apply(d)).or_default() += c;
    }
    Ok(out)
}

struct Generator {
    degree: Vec<i64>,
    odd: bool,
    mult: BigUint,
}

fn generators(v: &GradedDimension, k: &SuperAxes) -> Result<Vec<Generator>> {
    let idx = k.resolve(&v.axes)?;
    Ok(v.terms
        .iter()
        .map(|(d, c)| Generator { degree: d.components().to_vec(), odd: d.parity(&idx), mult: c.clone() })
        .collect())
}

/// Coefficient of `u^a` in the symmetric algebra of one homogeneous block.
fn block_coefficients(g: &Generator, max_power: u64) -> Vec<BigUint> {
    let mut out = vec![BigUint::from(1u8)];
    let mut c = BigUint::from(1u8);
    for a in 1..=max_power {
        let a_big = BigUint::from(a);
        if g.odd {
            if a_big > g.mult {
                break;
            }
            c = c * (&g.mult - &a_big + 1u8) / &a_big;
        } else {
            c = c * (&g.mult + &a_big - 1u8) / &a_big;
        }
        out.push(c.clone());
    }
    out
}

/// Product of the per-degree symmetric algebras, truncated to `bounds`.
fn windowed_product(arity: usize, gens: &[Generator], bounds: &Bounds) -> Result<BTreeMap<MultiDegree, BigUint>> {
    let hi_prunable: Vec<bool> =
        (0..arity).map(|a| bounds[a].1.is_some() && gens.iter().all(|g| g.degree[a] >= 0)).collect();
    let lo_prunable: Vec<bool> =
        (0..arity).map(|a| bounds[a].0.is_some() && gens.iter().all(|g| g.degree[a] <= 0)).collect();
    let keep = |d: &[i64]| {
        (0..arity).all(|a| {
            (!hi_prunable[a] || d[a] <= bounds[a].1.unwrap())
                && (!lo_prunable[a] || d[a] >= bounds[a].0.unwrap())
        })
    };

    let mut current: HashMap<Vec<i64>, BigUint> = HashMap::new();
    current.insert(vec![0; arity], BigUint::from(1u8));
    for g in gens {
        let mut cap: Option<u64> = if g.odd { Some(g.mult.to_u64().unwrap_or(u64::MAX)) } else { None };
        for a in 0..arity {
            let da = g.degree[a];
            let limit = if hi_prunable[a] && da > 0 {
                Some(bounds[a].1.unwrap().max(0) / da)
            } else if lo_prunable[a] && da < 0 {
                Some(bounds[a].0.unwrap().min(0) / da)
            } else {
                None
            };
            if let Some(l) = limit {
                let l = l as u64;
                cap = Some(cap.map_or(l, |c| c.min(l)));
            }
        }
        let cap = cap.ok_or_else(|| Error::Divergent { degree: MultiDegree(g.degree.clone()).to_string() })?;
        let coeffs = block_coefficients(g, cap);
        let mut next: HashMap<Vec<i64>, BigUint> = HashMap::with_capacity(current.len() * coeffs.len());
        for (d, c) in &current {
            for (a, ca) in coeffs.iter().enumerate() {
                let e: Vec<i64> = d.iter().zip(&g.degree).map(|(x, y)| x + (a as i64) * y).collect();
                if !keep(&e) {
                    continue;
                }
                *next.entry(e).or_default() += c * ca;
            }
        }
        current = next;
    }
    Ok(current
        .into_iter()
        .filter(|(d, c)| !c.is_zero() && within(d, bounds))
        .map(|(d, c)| (MultiDegree(d), c))
        .collect())
}

/// `Sym^n V` with the Koszul sign rule along `k`.
pub fn sym_n(v: &GradedDimension, n: usize, k: &SuperAxes) -> Result<GradedDimension> {
    let mut gens = generators(v, k)?;
    for g in &mut gens {
        g.degree.push(1);
    }
    let arity = v.axes.len() + 1;
    let mut bounds: Bounds = vec![(None, None); arity];
    bounds[arity - 1] = (Some(n as i64), Some(n as i64));
    let terms = windowed_product(arity, &gens, &bounds)?;
    let terms = terms
        .into_iter()
        .map(|(d, c)| {
            let mut comps = d.0;
            comps.pop();
            (MultiDegree(comps), c)
        })
        .collect();
    Ok(GradedDimension { axes: v.axes.clone(), terms })
}

/// `⊕_{n≥0} Sym^n V`, restricted to `window`.
///
/// Every even generator must move strictly along an axis that is bounded in
/// the direction all generators move; otherwise the sum is infinite and
/// [`Error::Divergent`] is returned.
pub fn sym_total(v: &GradedDimension, k: &SuperAxes, window: &TruncationWindow) -> Result<GradedDimension> {
    let gens = generators(v, k)?;
    let bounds = window.resolve(&v.axes)?;
    let terms = windowed_product(v.axes.len(), &gens, &bounds)?;
    Ok(GradedDimension { axes: v.axes.clone(), terms })
}
