//! Fock-space series `⊕_n HH_*(Sym^n A)` and compatibility with semiorthogonal sums.

use super::{compare, CheckOutcome};
use crate::error::Result;
use crate::multigraded::{direct_sum, sym_total, tensor, GradedDimension, SuperAxes, TruncationWindow};

/// `Sym(⊕_{i≥1} A t^i)` through `t^N` on axes `(hh, t)`; `a` lives on `hh`.
pub fn fock_series(a: &GradedDimension, max_n: usize) -> Result<GradedDimension> {
    let mut gens = GradedDimension::zero(a.with_axis("t", 0)?.axes().clone());
    for i in 1..=max_n {
        gens = direct_sum(&gens, &a.with_axis("t", i as i64)?)?;
    }
    sym_total(&gens, &SuperAxes::new(["hh"]), &TruncationWindow::new().upper("t", max_n as i64))
}

/// Outcomes of [`sod_fock_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockReport {
    /// `Fock(A ⊕ B) = Fock(A) ⊗ Fock(B)`.
    pub factorization: CheckOutcome,
    /// `Fock_n(A ⊕ B) = ⊕_i Fock_i(A) ⊗ Fock_{n-i}(B)` for every `n ≤ N`.
    pub kunneth: CheckOutcome,
}

impl FockReport {
    pub fn passed(&self) -> bool {
        self.factorization.passed() && self.kunneth.passed()
    }
}

pub fn sod_fock_check(a: &GradedDimension, b: &GradedDimension, max_n: usize) -> Result<FockReport> {
    let window = TruncationWindow::new().upper("t", max_n as i64);
    let sum = fock_series(&direct_sum(a, b)?, max_n)?;
    let (fa, fb) = (fock_series(a, max_n)?, fock_series(b, max_n)?);
    let factorization = compare("fock(A+B) = fock(A) fock(B)", &tensor(&fa, &fb, &window)?, &sum);

    let none = TruncationWindow::new();
    let mut kunneth = CheckOutcome::pass("kunneth slices");
    for n in 0..=max_n {
        let mut assembled = GradedDimension::zero(a.axes().clone());
        for i in 0..=n {
            let piece = tensor(&fa.slice("t", i as i64)?, &fb.slice("t", (n - i) as i64)?, &none)?;
            assembled = direct_sum(&assembled, &piece)?;
        }
        let outcome = compare(&format!("kunneth slice t^{n}"), &sum.slice("t", n as i64)?, &assembled);
        if !outcome.passed() {
            kunneth = outcome;
            break;
        }
    }
    Ok(FockReport { factorization, kunneth })
}
