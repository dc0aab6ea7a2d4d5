//! Hodge generating series of Hilbert schemes twisted by tautological line
//! bundles, and their specializations.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::orbifold::hh_series_product;
use super::{compare, monomial, CheckOutcome};
use crate::error::Result;
use crate::geometry::CoefficientFamily;
use crate::multigraded::{
    collapse, sym_n, sym_total, AxisSystem, GradedDimension, LinearCollapse, MultiDegree, SuperAxes, TruncationWindow,
};

fn hodge_rhs(max_n: usize, table_for: impl Fn(usize) -> Result<GradedDimension>) -> Result<GradedDimension> {
    let mut gens = GradedDimension::zero(AxisSystem::hodge_series());
    for k in 1..=max_n {
        let table = table_for(k)?;
        let s = k as i64 - 1;
        for (d, v) in table.iter() {
            gens.add_at(MultiDegree::new(vec![d.get(0) + s, d.get(1) + s, k as i64]), v.clone())?;
        }
    }
    sym_total(&gens, &SuperAxes::new(["x", "y"]), &TruncationWindow::new().upper("t", max_n as i64))
}

/// `∏_k ∏_{p,q} (1 - (-1)^{p+q} x^{p+k-1} y^{q+k-1} t^k)^{-(-1)^{p+q} h^{p,q}(S, L^k)}` through `t^N`.
pub fn corrected_conjecture_rhs(f: &CoefficientFamily, max_n: usize) -> Result<GradedDimension> {
    hodge_rhs(max_n, |k| f.effective_table(k))
}

/// The same product with `h^{p,q}(S, L)` in place of `h^{p,q}(S, L^k)` for every `k`.
pub fn boissiere_original_rhs(f: &CoefficientFamily, max_n: usize) -> Result<GradedDimension> {
    let first = f.effective_table(1)?;
    hodge_rhs(max_n, |_| Ok(first.clone()))
}

/// A monomial where the two products disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoissiereDiffEntry {
    pub degree: MultiDegree,
    pub monomial: String,
    pub corrected: BigUint,
    pub original: BigUint,
}

pub fn boissiere_diff(f: &CoefficientFamily, max_n: usize) -> Result<Vec<BoissiereDiffEntry>> {
    let corrected = corrected_conjecture_rhs(f, max_n)?;
    let original = boissiere_original_rhs(f, max_n)?;
    let mut degrees: Vec<MultiDegree> =
        corrected.iter().map(|(d, _)| d.clone()).chain(original.iter().map(|(d, _)| d.clone())).collect();
    degrees.sort_by_key(|a| (a.get(2), a.get(1), a.get(0)));
    degrees.dedup();
    Ok(degrees
        .into_iter()
        .filter_map(|d| {
            let (c, o) = (corrected.get(&d), original.get(&d));
            (c != o).then(|| BoissiereDiffEntry {
                monomial: monomial(corrected.axes(), &d),
                degree: d,
                corrected: c,
                original: o,
            })
        })
        .collect())
}

/// Outcomes of the three specializations of the corrected series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationReport {
    /// `x = s^{-1}, y = s` against the Hochschild product series.
    pub hochschild: CheckOutcome,
    /// `x = 0` against the symmetric algebra of `H^*(S, L)`.
    pub x_zero: CheckOutcome,
    /// `y = 0` against `∏_p (1 - (-1)^p x^p t)^{-(-1)^p h^{p,0}(S, L)}`.
    pub y_zero: CheckOutcome,
}

impl SpecializationReport {
    pub fn passed(&self) -> bool {
        self.hochschild.passed() && self.x_zero.passed() && self.y_zero.passed()
    }

    pub fn outcomes(&self) -> [&CheckOutcome; 3] {
        [&self.hochschild, &self.x_zero, &self.y_zero]
    }
}

fn y_zero_closed_form(row: &BTreeMap<i64, BigUint>, max_n: usize) -> Result<GradedDimension> {
    let axes = AxisSystem::new(["x", "t"])?;
    let mut series: BTreeMap<(i64, i64), BigUint> = BTreeMap::from([((0, 0), BigUint::one())]);
    for (&p, h) in row {
        let factor: Vec<BigUint> = (0..=max_n)
            .map(|a| {
                let a = BigUint::from(a);
                if p % 2 == 0 {
                    binomial(h + &a - 1u8, a)
                } else if &a > h {
                    BigUint::zero()
                } else {
                    binomial(h.clone(), a)
                }
            })
            .collect();
        let mut next: BTreeMap<(i64, i64), BigUint> = BTreeMap::new();
        for ((x, t), c) in &series {
            for (a, ca) in factor.iter().enumerate() {
                let a = a as i64;
                if t + a > max_n as i64 || ca.is_zero() {
                    continue;
                }
                *next.entry((x + p * a, t + a)).or_default() += c * ca;
            }
        }
        series = next;
    }
    GradedDimension::from_terms(axes, series.into_iter().map(|((x, t), c)| (MultiDegree::new(vec![x, t]), c)))
}

pub fn specialization_checks(f: &CoefficientFamily, max_n: usize) -> Result<SpecializationReport> {
    let rhs = corrected_conjecture_rhs(f, max_n)?;

    let hh = collapse(&rhs, &LinearCollapse::hodge_to_hochschild())?;
    let hochschild = compare("x=1/s, y=s", &hh_series_product(f, max_n)?, &hh);

    let table = f.effective_table(1)?;
    let column = GradedDimension::from_terms(
        AxisSystem::new(["y"])?,
        table.iter().filter(|(d, _)| d.get(0) == 0).map(|(d, v)| (MultiDegree::new(vec![d.get(1)]), v.clone())),
    )?;
    let mut sym = GradedDimension::zero(AxisSystem::new(["y", "t"])?);
    for n in 0..=max_n {
        for (d, v) in sym_n(&column, n, &SuperAxes::new(["y"]))?.iter() {
            sym.add_at(MultiDegree::new(vec![d.get(0), n as i64]), v.clone())?;
        }
    }
    let x_zero = compare("x=0", &sym, &rhs.slice("x", 0)?);

    let row: BTreeMap<i64, BigUint> =
        table.iter().filter(|(d, _)| d.get(1) == 0).map(|(d, v)| (d.get(0), v.clone())).collect();
    let y_zero = compare("y=0", &y_zero_closed_form(&row, max_n)?, &rhs.slice("y", 0)?);

    Ok(SpecializationReport { hochschild, x_zero, y_zero })
}

type QPoly = BTreeMap<i64, BigRational>;

fn add_into(target: &mut QPoly, exp: i64, c: BigRational) {
    let e = target.entry(exp).or_insert_with(BigRational::zero);
    *e += c;
    if e.is_zero() {
        target.remove(&exp);
    }
}

/// Checks that `x → -y, y → -1` turns the corrected series into
/// `exp(Σ_m t^m/m Σ_k (ty)^{(k-1)m} χ_{-y^m}(S, L^k))` through `t^N`.
pub fn chi_y_identity(f: &CoefficientFamily, max_n: usize) -> Result<CheckOutcome> {
    let name = "chi_y";
    let rhs = corrected_conjecture_rhs(f, max_n)?;
    let mut lhs: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
    for (d, v) in rhs.iter() {
        let sign = if (d.get(0) + d.get(1)).rem_euclid(2) == 0 { 1 } else { -1 };
        *lhs.entry((d.get(2), d.get(0))).or_default() += BigInt::from(sign) * BigInt::from(v.clone());
    }
    lhs.retain(|_, c| !c.is_zero());

    // Logarithm, coefficient of t^j for j = 1..=N.
    let mut log: Vec<QPoly> = vec![QPoly::new(); max_n + 1];
    for k in 1..=max_n {
        let table = f.effective_table(k)?;
        for m in 1..=max_n / k {
            let j = k * m;
            for (d, v) in table.iter() {
                let (p, q) = (d.get(0), d.get(1));
                let sign: i64 = if (p + q).rem_euclid(2) == 0 { 1 } else { -1 };
                let c = BigRational::new(BigInt::from(sign) * BigInt::from(v.clone()), BigInt::from(m));
                add_into(&mut log[j], (k as i64 - 1) * m as i64 + p * m as i64, c);
            }
        }
    }
    let mut exp: Vec<QPoly> = vec![QPoly::from([(0, BigRational::one())])];
    for n in 1..=max_n {
        let mut e = QPoly::new();
        for j in 1..=n {
            for (a, fa) in &log[j] {
                for (b, eb) in &exp[n - j] {
                    add_into(&mut e, a + b, fa * eb * BigRational::from(BigInt::from(j)));
                }
            }
        }
        let inv = BigRational::new(BigInt::one(), BigInt::from(n));
        exp.push(e.into_iter().map(|(a, c)| (a, c * &inv)).collect());
    }

    let mut keys: Vec<(i64, i64)> = lhs.keys().copied().collect();
    for (n, poly) in exp.iter().enumerate() {
        keys.extend(poly.keys().map(|&a| (n as i64, a)));
    }
    keys.sort();
    keys.dedup();
    for (t, y) in keys {
        let expected = exp[t as usize].get(&y).cloned().unwrap_or_else(BigRational::zero);
        let actual = BigRational::from(lhs.get(&(t, y)).cloned().unwrap_or_default());
        if expected != actual || !expected.is_integer() {
            let mono = monomial(&AxisSystem::new(["y", "t"])?, &MultiDegree::new(vec![y, t]));
            return Ok(CheckOutcome::fail(name, mono, expected.to_string(), actual.to_string()));
        }
    }
    Ok(CheckOutcome::pass(name))
}
