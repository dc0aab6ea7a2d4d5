//! Symmetric-quotient engine: orbifold decompositions, generating series and
//! the identities relating them.

mod conjecture;
mod deformation;
mod fock;
mod orbifold;

use std::fmt;

use crate::multigraded::{AxisSystem, GradedDimension, MultiDegree};

pub use conjecture::{
    boissiere_diff, boissiere_original_rhs, chi_y_identity, corrected_conjecture_rhs, specialization_checks,
    BoissiereDiffEntry, SpecializationReport,
};
pub use deformation::{deformation_summary, DeformationSummary};
pub use fock::{fock_series, sod_fock_check, FockReport};
pub use orbifold::{
    closed_hh1_hh2, hh_series_product, hh_with_coefficients_sym, hs_sym, inertia_hodge_sym, inertia_summands,
    orbifold_hodge_age, series_slice, LowDegreeHochschild,
};

/// Dimensions for a fixed number of points `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymQuotResult {
    pub n: usize,
    pub dims: GradedDimension,
}

/// First disagreement between two computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub monomial: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: expected {}, got {}", self.monomial, self.expected, self.actual)
    }
}

/// Result of one named identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub mismatch: Option<Mismatch>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    pub(crate) fn pass(name: impl Into<String>) -> Self {
        CheckOutcome { name: name.into(), mismatch: None }
    }

    pub(crate) fn fail(name: impl Into<String>, monomial: String, expected: String, actual: String) -> Self {
        CheckOutcome { name: name.into(), mismatch: Some(Mismatch { monomial, expected, actual }) }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "{}: ok", self.name),
            Some(m) => write!(f, "{}: MISMATCH {m}", self.name),
        }
    }
}

/// Renders a degree as a monomial in the axis names, e.g. `x^3 y t^2`.
pub fn monomial(axes: &AxisSystem, d: &MultiDegree) -> String {
    let parts: Vec<String> = axes
        .names()
        .iter()
        .zip(d.components())
        .filter(|(_, c)| **c != 0)
        .map(|(n, c)| if *c == 1 { n.clone() } else { format!("{n}^{c}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

/// Compares two series term by term and reports the first differing monomial.
pub fn compare(name: &str, expected: &GradedDimension, actual: &GradedDimension) -> CheckOutcome {
    if expected.axes() != actual.axes() {
        return CheckOutcome::fail(name, "axes".into(), expected.axes().to_string(), actual.axes().to_string());
    }
    let mut degrees: Vec<&MultiDegree> = expected.iter().map(|(d, _)| d).chain(actual.iter().map(|(d, _)| d)).collect();
    degrees.sort();
    degrees.dedup();
    for d in degrees {
        let (a, b) = (expected.get(d), actual.get(d));
        if a != b {
            return CheckOutcome::fail(name, monomial(expected.axes(), d), a.to_string(), b.to_string());
        }
    }
    CheckOutcome::pass(name)
}
