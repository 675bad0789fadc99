//! Acceptance criteria, one test each. Every test prints a single
//! `criterion N: PASS|FAIL ...` line (visible with `--nocapture`) before
//! asserting.

use baskakov::coeffs::published::{verify_published, EntryStatus};
use baskakov::coeffs::{direct, inverse_identity_failure, recurrence, Family};
use baskakov::exactalg::{int, rat};
use baskakov::experiments::published::{
    norm_tolerance, ERROR_N, ERROR_R, ERROR_TABLES, NORM_N, NORM_R, NORM_TABLE,
};
use baskakov::experiments::{
    asymptotic_scaling, closed_form_worst, compare_error_table, error_table, exactness_worst,
    polynomial_voronovskaya, tau_consistency, voronovskaya_check, Parity, TauVariant, TestFunction,
    TruncationRule,
};
use baskakov::lebesgue::norm_estimate;

fn report(id: u32, ok: bool, detail: &str) {
    println!(
        "criterion {id}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id} failed: {detail}");
}

#[test]
fn criterion_1_recurrence_equals_direct() {
    let mut bad = Vec::new();
    for family in [Family::Theta, Family::Eta] {
        for n in 1..=8 {
            if recurrence(family, n, 12).unwrap().polys != direct(family, n, 12).unwrap().polys {
                bad.push(format!("{} n={n}", family.name()));
            }
        }
    }
    report(
        1,
        bad.is_empty(),
        &format!("recurrence vs direct, n = 1..8, r <= 12; mismatches {bad:?}"),
    );
}

#[test]
fn criterion_2_printed_coefficient_tables() {
    let reports = verify_published();
    let mut problems = Vec::new();
    for rep in &reports {
        let documented = matches!((rep.family, rep.r), (Family::Theta, 9) | (Family::Eta, 6));
        match (&rep.status, documented) {
            (EntryStatus::Match, false) => {}
            (EntryStatus::KnownTypo { corrected, .. }, true) => {
                if rep.family == Family::Theta
                    && corrected.get(3).map(String::as_str)
                        != Some("1260n^3 + 13216n^2 + 32112n + 20160")
                {
                    problems.push("theta_9 c_3 correction".to_string());
                }
            }
            (status, _) => problems.push(format!("{}_{}: {status:?}", rep.family.name(), rep.r)),
        }
    }
    let flagged = reports
        .iter()
        .filter(|r| matches!(r.status, EntryStatus::KnownTypo { .. }))
        .map(|r| format!("{}_{}", r.family.name(), r.r))
        .collect::<Vec<_>>();
    report(
        2,
        problems.is_empty(),
        &format!(
            "{} entries, flagged {flagged:?}; outside the documented list: {problems:?}",
            reports.len()
        ),
    );
}

#[test]
fn criterion_3_inverse_identity() {
    let failures: Vec<_> = [2, 5, 10]
        .into_iter()
        .filter_map(|n| inverse_identity_failure(n, 10).unwrap().map(|d| (n, d)))
        .collect();
    report(
        3,
        failures.is_empty(),
        &format!("degree <= 10, n in {{2, 5, 10}}; failures {failures:?}"),
    );
}

#[test]
fn criterion_4_exact_on_polynomials() {
    let worst: Vec<(u32, f64)> = [10u32, 20]
        .iter()
        .map(|&n| (n, exactness_worst(n, 10 * n as usize).unwrap()))
        .collect();
    let ok = worst.iter().all(|(_, w)| *w <= 1e-8);
    report(
        4,
        ok,
        &format!("worst |V^(r) x^s - x^s| / max(1, x^s) with N = 10n: {worst:?}"),
    );
}

#[test]
fn criterion_5_norm_table() {
    let mut misses = Vec::new();
    let mut cells = 0;
    for (i, &n) in NORM_N.iter().enumerate() {
        for (j, &r) in NORM_R.iter().enumerate() {
            let Some(printed) = NORM_TABLE[i][j] else {
                continue;
            };
            cells += 1;
            let e = norm_estimate(n, r, 10.0, 0.01, 3).unwrap();
            if (e.value - printed).abs() > norm_tolerance(printed) {
                misses.push(format!("(n={n}, r={r}) {:.4} vs {printed}", e.value));
            }
        }
    }
    report(
        5,
        misses.is_empty(),
        &format!("{}/{cells} cells; misses {misses:?}", cells - misses.len()),
    );
}

#[test]
fn criterion_6_error_tables() {
    let mut summary = Vec::new();
    let mut all_ok = true;
    let mut tables = Vec::new();
    for printed in &ERROR_TABLES {
        let t = error_table(
            &printed.function,
            &ERROR_N,
            &ERROR_R,
            (0.0, 2.0),
            0.002,
            TruncationRule::Multiple(5),
        )
        .unwrap();
        let (good, total, _) = compare_error_table(&t, &printed.cells);
        all_ok &= good == total;
        summary.push(format!("{} {good}/{total}", printed.function));
        tables.push(t);
    }
    let anchors = [
        (0usize, 10u32, 1usize, 4.0e-2),
        (2, 50, 11, 9.2e-7),
        (4, 50, 11, 2.2e-3),
    ];
    for (t, n, r, want) in anchors {
        let got = tables[t].entry(n, r).unwrap();
        let ok = (got - want).abs() <= 0.2 * want;
        all_ok &= ok;
        summary.push(format!(
            "anchor {} (n={n}, {r}) {got:.2e}",
            tables[t].function
        ));
    }
    report(6, all_ok, &summary.join("; "));
}

#[test]
fn criterion_7_asymptotic_scaling() {
    let xs = [rat(1, 2), int(1), int(2)];
    let mut worst = Vec::new();
    let mut ok = true;
    for family in [Family::Theta, Family::Eta] {
        let rows = asymptotic_scaling(family, &[3, 4, 5, 6, 7, 8], &xs, &[10_000]).unwrap();
        for r in 3..=8 {
            let dev = rows
                .iter()
                .filter(|w| w.index == r)
                .map(|w| w.deviation())
                .fold(0.0, f64::max);
            ok &= dev <= 1e-3;
            if dev > 1e-3 {
                worst.push(format!("{}_{r} {dev:.2e}", family.name()));
            }
        }
    }
    report(
        7,
        ok,
        &format!("n = 10^4, tolerance 1e-3; over tolerance {worst:?}"),
    );
}

#[test]
fn criterion_8_voronovskaya() {
    let rep = voronovskaya_check(
        &TestFunction::ExpNeg,
        1,
        Parity::Odd,
        1.0,
        &[32, 64, 128, 256],
    )
    .unwrap();
    let dev = rep.final_relative_deviation();
    let trend_ok = rep.is_monotone() && dev < 0.15;
    let poly = polynomial_voronovskaya(4, 1, Parity::Odd, &int(1), &[100, 200, 1000]).unwrap();
    let (c, fit_ok) = poly.fitted_bound_holds().unwrap();
    report(
        8,
        trend_ok && fit_ok,
        &format!(
            "scaled {:?} -> {:.6}, final deviation {:.2}%; x^4 residual C = {c}, holds {fit_ok}",
            rep.scaled_errors,
            rep.target,
            100.0 * dev
        ),
    );
}

#[test]
fn criterion_9_two_path_equivalence() {
    let mut ok = true;
    let mut parts = Vec::new();
    for f in TestFunction::REFERENCE_EXAMPLES {
        let w = closed_form_worst(&f, 20).unwrap();
        ok &= w <= 1e-12;
        parts.push(format!("{f} {w:.1e}"));
    }
    let rows = tau_consistency(
        &TestFunction::ExpNeg,
        &[5, 6, 7, 8, 9],
        10,
        50,
        &[0.0, 0.5, 1.0, 2.0],
    )
    .unwrap();
    let r5 = rows
        .iter()
        .find(|t| t.variant == TauVariant::Printed && t.r == 5 && t.x == 1.0)
        .unwrap();
    ok &= r5.relative_difference <= 1e-11;
    let mismatched: Vec<usize> = (5..=9)
        .filter(|&r| {
            rows.iter()
                .any(|t| t.variant == TauVariant::Printed && t.r == r && !t.agrees)
        })
        .collect();
    // only the τ_6 display is documented as garbled
    ok &= mismatched.iter().all(|&r| r == 6);
    parts.push(format!("printed tau mismatches at r = {mismatched:?}"));
    report(9, ok, &parts.join("; "));
}
