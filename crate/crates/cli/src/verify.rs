//! Self-check suites behind `symquot verify`.

use num_bigint::BigUint;
use symquot::bwb::{hilb2_p2_hkr, schur_dim, GLWeight};
use symquot::engine::{
    boissiere_diff, chi_y_identity, closed_hh1_hh2, compare, corrected_conjecture_rhs, deformation_summary,
    hh_series_product, hh_with_coefficients_sym, hs_sym, inertia_hodge_sym, orbifold_hodge_age, series_slice,
    sod_fock_check, specialization_checks, CheckOutcome, Mismatch,
};
use symquot::geometry::{hs_of_variety, line_bundle_family, preset_projective_space, serre_family, VarietyData};
use symquot::oracle::{inertia_sum_bruteforce, MAX_INERTIA_N};
use symquot::quiver::{hh_euler_characteristic, sym2_p1_cartan, sym2_p1_series};
use symquot::{AxisSystem, GradedDimension, MultiDegree, Result};

pub const SUITES: [&str; 9] =
    ["three-paths", "oracle", "specializations", "deformation", "counterexample", "hilb2", "fock", "quiver", "schur"];

fn value_check(name: String, monomial: &str, expected: impl ToString, actual: impl ToString) -> CheckOutcome {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    let mismatch = (expected != actual).then(|| Mismatch { monomial: monomial.to_string(), expected, actual });
    CheckOutcome { name, mismatch }
}

fn hh_axis(values: &[u64]) -> GradedDimension {
    GradedDimension::from_terms(
        AxisSystem::hochschild(),
        values.iter().enumerate().filter(|(_, v)| **v > 0).map(|(j, v)| (MultiDegree::new(vec![j as i64]), BigUint::from(*v))),
    )
    .expect("hochschild axis")
}

fn three_paths(x: &VarietyData, max_n: usize, out: &mut Vec<CheckOutcome>) -> Result<()> {
    for k in -1..=2 {
        let f = serre_family(x, k, max_n)?;
        let series = hh_series_product(&f, max_n)?;
        for n in 0..=max_n {
            let a = hs_sym(x, k, n)?.dims;
            let tag = format!("{} k={k} n={n}", x.name());
            out.push(compare(&format!("{tag}: hs_sym vs serre family"), &a, &hh_with_coefficients_sym(&f, n)?.dims));
            out.push(compare(&format!("{tag}: hs_sym vs product series"), &a, &series_slice(&series, n)?));
        }
    }
    Ok(())
}

fn oracle(x: &VarietyData, max_n: usize, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let top = max_n.min(MAX_INERTIA_N);
    let mut families = Vec::new();
    for k in -1..=2 {
        families.push((format!("k={k}"), serre_family(x, k, top)?));
    }
    for label in x.line_bundle_labels() {
        families.push((label.to_string(), line_bundle_family(x, label, top)?));
    }
    for (label, f) in families {
        for n in 0..=top {
            let name = format!("{} {label} n={n}: brute force inertia", x.name());
            out.push(compare(&name, &inertia_sum_bruteforce(&f, n)?, &inertia_hodge_sym(&f, n)?.dims));
        }
    }
    Ok(())
}

fn specializations(x: &VarietyData, max_n: usize, out: &mut Vec<CheckOutcome>) -> Result<()> {
    for label in x.line_bundle_labels() {
        let f = line_bundle_family(x, label, max_n)?;
        let report = specialization_checks(&f, max_n)?;
        for o in report.outcomes() {
            out.push(CheckOutcome { name: format!("{} {label}: {}", x.name(), o.name), mismatch: o.mismatch.clone() });
        }
        let chi = chi_y_identity(&f, max_n)?;
        out.push(CheckOutcome { name: format!("{} {label}: {}", x.name(), chi.name), mismatch: chi.mismatch });
        let rhs = corrected_conjecture_rhs(&f, max_n)?;
        for n in 0..=max_n {
            let name = format!("{} {label} n={n}: corrected rhs vs partition sum", x.name());
            out.push(compare(&name, &series_slice(&rhs, n)?, &orbifold_hodge_age(&f, n)?.dims));
        }
    }
    Ok(())
}

fn deformation(x: &VarietyData, max_n: usize, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let hh1 = hs_of_variety(x, 0)?.dims.get(&MultiDegree::new(vec![1]));
    for n in 2..=max_n.max(2) {
        let engine = hs_sym(x, 0, n)?.dims;
        let closed = closed_hh1_hh2(x, n)?;
        let tag = format!("{} n={n}", x.name());
        out.push(value_check(format!("{tag}: HH^1 stable"), "HH^1", &hh1, engine.get(&MultiDegree::new(vec![1]))));
        out.push(value_check(format!("{tag}: closed HH^2"), "HH^2", &closed.hh2, engine.get(&MultiDegree::new(vec![2]))));
        if x.dim() == 2 {
            let s = deformation_summary(x, n)?;
            let expected = &s.h1_tangent + &s.h2_structure + &s.h0_bivectors;
            out.push(value_check(format!("{tag}: deformation summary"), "HH^2", expected, &s.engine_hh2));
            out.push(value_check(format!("{tag}: tangent sections"), "HH^1", &s.h1_structure + &s.h0_tangent, &s.engine_hh1));
        }
    }
    Ok(())
}

fn counterexample(out: &mut Vec<CheckOutcome>) -> Result<()> {
    let p2 = preset_projective_space(2)?;
    let f = line_bundle_family(&p2, "O3", 2)?;
    let diff = boissiere_diff(&f, 2)?;
    let got: Vec<String> = diff.iter().map(|e| format!("{}: {} vs {}", e.monomial, e.corrected, e.original)).collect();
    let expected = ["x y t^2: 28 vs 10", "x^2 y t^2: 35 vs 8", "x^3 y t^2: 10 vs 1"];
    out.push(value_check("p2 O3: corrected vs original".into(), "t^2", expected.join("; "), got.join("; ")));
    Ok(())
}

fn hilb2(out: &mut Vec<CheckOutcome>) -> Result<()> {
    let h = hilb2_p2_hkr()?;
    let sums: Vec<u64> = h.hkr_series().iter().map(|v| u64::try_from(v).unwrap_or(u64::MAX)).collect();
    out.push(compare("Hilb^2 P^2: HKR columns", &hh_axis(&[1, 8, 48, 115, 83]), &hh_axis(&sums)));
    out.push(value_check("Hilb^2 P^2: chi of wedge^3 T".into(), "chi", 52, &h.wedge3_euler));
    let p2 = preset_projective_space(2)?;
    out.push(compare("Hilb^2 P^2: engine", &hh_axis(&[1, 8, 48, 115, 83]), &hs_sym(&p2, 0, 2)?.dims));
    for ord in [2usize, 3, 4, 6] {
        let x = symquot::geometry::preset_bielliptic(ord)?;
        let expected: &[u64] = match ord {
            2 => &[1, 2, 3, 8, 12, 8, 3, 2, 1],
            3 => &[1, 2, 2, 2, 2, 2, 1],
            _ => &[1, 2, 2, 2, 1],
        };
        out.push(compare(&format!("Hilb^2 bielliptic{ord}"), &hh_axis(expected), &hs_sym(&x, 0, 2)?.dims));
    }
    Ok(())
}

fn fock(max_n: usize, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let a = hs_of_variety(&preset_projective_space(1)?, 1)?.dims;
    let b = hs_of_variety(&preset_projective_space(2)?, 1)?.dims;
    let report = sod_fock_check(&a, &b, max_n)?;
    out.push(report.factorization);
    out.push(report.kunneth);
    Ok(())
}

fn quiver(out: &mut Vec<CheckOutcome>) -> Result<()> {
    let a = sym2_p1_cartan();
    let series = sym2_p1_series()?;
    let engine = hs_sym(&preset_projective_space(1)?, 0, 2)?.dims;
    let quiver = GradedDimension::from_terms(
        AxisSystem::hochschild(),
        series.iter().enumerate().map(|(j, v)| (MultiDegree::new(vec![j as i64]), v.clone())),
    )?;
    out.push(compare("Sym^2 P^1: quiver vs engine", &quiver, &engine));
    out.push(value_check("Sym^2 P^1: Euler characteristic".into(), "chi", 1, hh_euler_characteristic(&a)?));
    Ok(())
}

fn schur(out: &mut Vec<CheckOutcome>) -> Result<()> {
    for (w, d) in [(vec![1, 0, -1], 8u32), (vec![1, 1, -2], 10), (vec![2, 1, -3], 35), (vec![2, -1, -1], 10)] {
        let label = format!("{w:?}");
        out.push(value_check(format!("schur dim {label}"), &label, d, schur_dim(&GLWeight(w))?));
    }
    Ok(())
}

/// Runs `suite` (or every suite for `all`) over `varieties`.
pub fn run_suite(suite: &str, varieties: &[VarietyData], max_n: usize) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let selected: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    for s in selected {
        match s {
            "three-paths" => varieties.iter().try_for_each(|x| three_paths(x, max_n, &mut out))?,
            "oracle" => varieties.iter().try_for_each(|x| oracle(x, max_n, &mut out))?,
            "specializations" => varieties.iter().try_for_each(|x| specializations(x, max_n, &mut out))?,
            "deformation" => varieties.iter().try_for_each(|x| deformation(x, max_n, &mut out))?,
            "counterexample" => counterexample(&mut out)?,
            "hilb2" => hilb2(&mut out)?,
            "fock" => fock(max_n, &mut out)?,
            "quiver" => quiver(&mut out)?,
            "schur" => schur(&mut out)?,
            other => unreachable!("suite `{other}` is validated by the parser"),
        }
    }
    Ok(out)
}
