//! Acceptance suite: one line per criterion, exact integer comparisons throughout.

mod common;

use std::process::ExitCode;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symquot::bwb::{hilb2_p2_hkr, schur_dim, GLWeight};
use symquot::engine::{
    boissiere_diff, chi_y_identity, closed_hh1_hh2, corrected_conjecture_rhs, deformation_summary,
    hh_series_product, hh_with_coefficients_sym, hs_sym, inertia_hodge_sym, orbifold_hodge_age, series_slice,
    sod_fock_check, specialization_checks,
};
use symquot::geometry::{
    hs_of_variety, line_bundle_family, preset_by_name, preset_projective_space, serre_family, PRESET_NAMES,
};
use symquot::multigraded::sym_n;
use symquot::oracle::{inertia_sum_bruteforce, invariants_by_trace, sym_bruteforce, SignedBasis};
use symquot::partitions::Permutation;
use symquot::quiver::{hh_euler_characteristic, sym2_p1_cartan, sym2_p1_series};
use symquot::{AxisSystem, GradedDimension, MultiDegree, SuperAxes};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dims(g: &GradedDimension, range: std::ops::RangeInclusive<i64>) -> Vec<u64> {
    range.map(|j| g.get_u64([j])).collect()
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn criterion_1() -> Check {
    let p1 = preset_projective_space(1).map_err(e)?;
    let engine = dims(&hs_sym(&p1, 0, 2).map_err(e)?.dims, 0..=3);
    let quiver: Vec<u64> = sym2_p1_series().map_err(e)?.iter().map(|v| u64::try_from(v).unwrap()).collect();
    ensure(engine == [1, 3, 3, 0], || format!("engine {engine:?}"))?;
    ensure(quiver == [1, 3, 3], || format!("quiver {quiver:?}"))?;
    let chi = hh_euler_characteristic(&sym2_p1_cartan()).map_err(e)?;
    ensure(chi == 1, || format!("chi {chi}"))?;
    Ok(format!("engine {engine:?}, quiver {quiver:?}, chi {chi}"))
}

fn criterion_2() -> Check {
    let p2 = preset_projective_space(2).map_err(e)?;
    let engine = dims(&hs_sym(&p2, 0, 2).map_err(e)?.dims, 0..=5);
    ensure(engine == [1, 8, 48, 115, 83, 0], || format!("engine {engine:?}"))?;
    let h = hilb2_p2_hkr().map_err(e)?;
    let col = |p: usize| (0..2).map(|q| u64::try_from(&h.h(p, q)).unwrap()).collect::<Vec<_>>();
    let columns: Vec<Vec<u64>> = (0..=4).map(col).collect();
    let expected = vec![vec![1, 0], vec![8, 10], vec![38, 35], vec![80, 28], vec![55, 0]];
    ensure(columns == expected, || format!("columns {columns:?}"))?;
    let sums: Vec<u64> = h.hkr_series().iter().map(|v| u64::try_from(v).unwrap()).collect();
    ensure(sums == [1, 8, 48, 115, 83], || format!("hkr sums {sums:?}"))?;
    ensure(h.wedge3_euler == 52.into(), || format!("chi {}", h.wedge3_euler))?;
    Ok(format!("series {sums:?}, chi 52"))
}

fn criterion_3() -> Check {
    let series: [(usize, Vec<u64>); 4] = [
        (2, vec![1, 2, 3, 8, 12, 8, 3, 2, 1]),
        (3, vec![1, 2, 2, 2, 2, 2, 1, 0, 0]),
        (4, vec![1, 2, 2, 2, 1, 0, 0, 0, 0]),
        (6, vec![1, 2, 2, 2, 1, 0, 0, 0, 0]),
    ];
    let inputs: [(usize, Vec<u64>, Vec<u64>); 4] = [
        (2, vec![1, 2, 2, 2, 1], vec![0, 0, 0, 2, 4, 2, 0]),
        (3, vec![1, 2, 1, 0, 0], vec![0, 0, 0, 0, 1, 2, 1]),
        (4, vec![1, 2, 1, 0, 0], vec![0; 7]),
        (6, vec![1, 2, 1, 0, 0], vec![0; 7]),
    ];
    for ((ord, s), (_, hh, hs)) in series.iter().zip(&inputs) {
        let x = preset_by_name(&format!("bielliptic{ord}")).map_err(e)?;
        let got = dims(&hs_sym(&x, 0, 2).map_err(e)?.dims, 0..=8);
        ensure(&got == s, || format!("Hilb^2 ord {ord}: {got:?}"))?;
        let got = dims(&hs_of_variety(&x, 0).map_err(e)?.dims, 0..=4);
        ensure(&got == hh, || format!("HH ord {ord}: {got:?}"))?;
        let got = dims(&hs_of_variety(&x, -1).map_err(e)?.dims, 0..=6);
        ensure(&got == hs, || format!("HS_-1 ord {ord}: {got:?}"))?;
    }
    Ok("ord 2, 3, 4/6 series and HH, HS_-1 inputs".into())
}

fn criterion_4() -> Check {
    let p2 = preset_projective_space(2).map_err(e)?;
    let f = line_bundle_family(&p2, "O3", 2).map_err(e)?;
    let diff: Vec<(String, u64, u64)> = boissiere_diff(&f, 2)
        .map_err(e)?
        .into_iter()
        .map(|d| (d.monomial, u64::try_from(&d.corrected).unwrap(), u64::try_from(&d.original).unwrap()))
        .collect();
    let expected: Vec<(String, u64, u64)> =
        vec![("x y t^2".into(), 28, 10), ("x^2 y t^2".into(), 35, 8), ("x^3 y t^2".into(), 10, 1)];
    ensure(diff == expected, || format!("{diff:?}"))?;
    Ok(format!("{} differing monomials", diff.len()))
}

fn criterion_5() -> Check {
    let mut cases = 0;
    for name in PRESET_NAMES {
        let x = preset_by_name(name).map_err(e)?;
        for k in -1..=2 {
            let f = serre_family(&x, k, 4).map_err(e)?;
            let series = hh_series_product(&f, 4).map_err(e)?;
            for n in 0..=4 {
                let a = hs_sym(&x, k, n).map_err(e)?.dims;
                let b = hh_with_coefficients_sym(&f, n).map_err(e)?.dims;
                let c = series_slice(&series, n).map_err(e)?;
                ensure(a == b && b == c, || format!("{name} k={k} n={n}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn random_instance(rng: &mut ChaCha8Rng) -> (GradedDimension, SuperAxes, usize) {
    let mut g = GradedDimension::zero(AxisSystem::hodge());
    for _ in 0..rng.gen_range(1..=4) {
        let d = MultiDegree::new(vec![rng.gen_range(-2..=2), rng.gen_range(-2..=2)]);
        g.add_at(d, BigUint::from(rng.gen_range(1u32..=3))).unwrap();
    }
    let k = match rng.gen_range(0..4) {
        0 => SuperAxes::none(),
        1 => SuperAxes::new(["p"]),
        2 => SuperAxes::new(["q"]),
        _ => SuperAxes::new(["p", "q"]),
    };
    (g, k, rng.gen_range(0..=5))
}

fn criterion_6() -> Check {
    let mut pairs = 0;
    for name in PRESET_NAMES {
        let x = preset_by_name(name).map_err(e)?;
        let mut families = Vec::new();
        for k in -1..=2 {
            families.push((format!("k={k}"), serre_family(&x, k, 4).map_err(e)?));
        }
        for label in x.line_bundle_labels() {
            families.push((label.to_string(), line_bundle_family(&x, label, 4).map_err(e)?));
        }
        for (label, f) in &families {
            for n in 0..=4 {
                let brute = inertia_sum_bruteforce(f, n).map_err(e)?;
                let engine = inertia_hodge_sym(f, n).map_err(e)?.dims;
                ensure(brute == engine, || format!("inertia {name} {label} n={n}"))?;
            }
            pairs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut instances = 0;
    let mut traced = 0;
    while instances < 250 {
        let (g, k, n) = random_instance(&mut rng);
        let basis = SignedBasis::from_graded(&g, &k).map_err(e)?;
        if basis.generator_count() > 12 {
            continue;
        }
        let expected = sym_n(&g, n, &k).map_err(e)?;
        ensure(sym_bruteforce(&basis, n).map_err(e)? == expected, || format!("sym {g:?} n={n}"))?;
        if (1..=4).contains(&n) {
            let trace = invariants_by_trace(&vec![basis; n], &Permutation::all(n)).map_err(e)?;
            ensure(trace == expected, || format!("trace {g:?} n={n}"))?;
            traced += 1;
        }
        instances += 1;
    }
    Ok(format!("{pairs} preset x family pairs, {instances} random instances ({traced} traced)"))
}

fn criterion_7() -> Check {
    let mut pairs = 0;
    for name in PRESET_NAMES {
        let x = preset_by_name(name).map_err(e)?;
        for label in x.line_bundle_labels() {
            let f = line_bundle_family(&x, label, 4).map_err(e)?;
            let report = specialization_checks(&f, 4).map_err(e)?;
            for o in report.outcomes() {
                ensure(o.passed(), || format!("{name} {label}: {o}"))?;
            }
            let chi = chi_y_identity(&f, 4).map_err(e)?;
            ensure(chi.passed(), || format!("{name} {label}: {chi}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} preset x line bundle pairs"))
}

fn criterion_8() -> Check {
    for ord in [2usize, 3, 4, 6] {
        let x = preset_by_name(&format!("bielliptic{ord}")).map_err(e)?;
        let expected = BigUint::from(if ord == 2 { 3u8 } else { 2 });
        for n in 2..=4 {
            let s = deformation_summary(&x, n).map_err(e)?;
            ensure(s.consistent() && s.h1_tangent == expected, || format!("bielliptic{ord} n={n}: {s:?}"))?;
        }
    }
    let s = deformation_summary(&preset_projective_space(2).map_err(e)?, 2).map_err(e)?;
    ensure(s.consistent() && s.h1_tangent == BigUint::from(10u8), || format!("p2: {s:?}"))?;
    for name in PRESET_NAMES {
        let x = preset_by_name(name).map_err(e)?;
        let hh1 = hs_of_variety(&x, 0).map_err(e)?.dims.get(&MultiDegree::new(vec![1]));
        for n in 2..=4 {
            let engine = hs_sym(&x, 0, n).map_err(e)?.dims;
            let closed = closed_hh1_hh2(&x, n).map_err(e)?;
            ensure(engine.get(&MultiDegree::new(vec![1])) == hh1, || format!("{name} HH^1 n={n}"))?;
            ensure(closed.hh2 == engine.get(&MultiDegree::new(vec![2])), || format!("{name} HH^2 n={n}"))?;
        }
    }
    Ok("h^1(T) = 3 / 2 / 10, HH^1 stable on all presets".into())
}

fn criterion_9() -> Check {
    let cases: [(&[i64], u64); 4] = [(&[1, 0, -1], 8), (&[1, 1, -2], 10), (&[2, 1, -3], 35), (&[2, -1, -1], 10)];
    let mut got = Vec::new();
    for (w, expected) in cases {
        let d = u64::try_from(&schur_dim(&GLWeight(w.to_vec())).map_err(e)?).unwrap();
        ensure(d == expected, || format!("{w:?}: {d}"))?;
        got.push(d);
    }
    ensure(got[1] + got[3] + got[0] + got[3] == 38, || "38 assembly".into())?;
    Ok(format!("{got:?}"))
}

fn criterion_10() -> Check {
    let hh = |n: usize| -> Result<GradedDimension, String> {
        Ok(hs_of_variety(&preset_projective_space(n).map_err(e)?, 1).map_err(e)?.dims)
    };
    let report = sod_fock_check(&hh(1)?, &hh(2)?, 4).map_err(e)?;
    ensure(report.passed(), || format!("{} / {}", report.factorization, report.kunneth))?;
    let k3 = common::k3_type();
    let product = common::hodge_product(|_| common::K3_DIAMOND.iter().map(|r| r.to_vec()).collect(), 3);
    let f = serre_family(&k3, 1, 3).map_err(e)?;
    for n in 0..=3 {
        let engine = orbifold_hodge_age(&f, n as usize).map_err(e)?.dims;
        ensure(engine == common::slice_xy(&product, n), || format!("K3-type t^{n}"))?;
    }
    let g = line_bundle_family(&k3, "O", 3).map_err(e)?;
    let rhs = corrected_conjecture_rhs(&g, 3).map_err(e)?;
    ensure(rhs == common::to_graded(&product), || "K3-type corrected rhs".into())?;
    let h11 = orbifold_hodge_age(&f, 2).map_err(e)?.dims.get_u64([1, 1]);
    ensure(h11 == 21, || format!("h^11 = {h11}"))?;
    Ok(format!("fock through t^4, K3-type through t^3, h^11(Hilb^2) = {h11}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("Sym^2 P^1 Hochschild series and quiver", criterion_1),
        ("Hilb^2 P^2 series, HKR columns, chi = 52", criterion_2),
        ("bielliptic Hilb^2 series and HH, HS_-1 inputs", criterion_3),
        ("counterexample diff on (P^2, O(3), n=2)", criterion_4),
        ("three-path identity", criterion_5),
        ("oracle matrix", criterion_6),
        ("specializations and chi_y", criterion_7),
        ("deformation corollaries", criterion_8),
        ("Schur dimensions", criterion_9),
        ("Fock / SOD and K3-type Hodge product", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let result = check();
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("PASS {:>2} {name} [tolerance 0] ({detail}; {ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [tolerance 0] ({why}; {ms} ms)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
