//! One test per acceptance criterion. Each prints a single summary line
//! followed by the individual checks, then asserts that none failed.

use nmode_squeeze::verify::{self, Check, Status, Tolerances, DEFAULT_SEED};

fn describe(c: &Check) -> String {
    let tail = c.tail_mass.map(|t| format!(" tail_mass={t:.3e}")).unwrap_or_default();
    let note = c.note.as_deref().map(|n| format!(" note={n}")).unwrap_or_default();
    format!(
        "    {:<28} {:?} actual={:.6e} expected={:.6e} tol={:.1e} [{}]{tail}{note}",
        c.name, c.status, c.actual, c.expected, c.tol, c.inputs
    )
}

fn run_criterion(k: u8, title: &str) {
    let checks = verify::criterion(k, DEFAULT_SEED, &Tolerances::default());
    assert!(!checks.is_empty());
    let ok = checks.iter().all(|c| c.status == Status::Pass);
    println!("criterion {k} {title}: {}", if ok { "PASS" } else { "FAIL" });
    for c in &checks {
        println!("{}", describe(c));
    }
    let bad: Vec<_> = checks.iter().filter(|c| !c.pass()).map(|c| c.name).collect();
    assert!(bad.is_empty(), "criterion {k} failed: {bad:?}");
}

#[test]
fn criterion_1_variance_closed_forms() {
    run_criterion(1, "variance closed forms");
}

#[test]
fn criterion_2_sum_identities() {
    run_criterion(2, "sum identities");
}

#[test]
fn criterion_3_enhanced_squeezing() {
    run_criterion(3, "enhanced squeezing");
}

#[test]
fn criterion_4_normal_ordered_form() {
    run_criterion(4, "normal-ordered form");
}

#[test]
fn criterion_5_squeezed_vacuum() {
    run_criterion(5, "squeezed vacuum");
}

#[test]
fn criterion_6_special_cases() {
    run_criterion(6, "three- and four-mode special cases");
}

#[test]
fn criterion_7_wigner_equivalences() {
    run_criterion(7, "Wigner function equivalences");
}

#[test]
fn criterion_8_large_squeezing_probe() {
    let rows = verify::large_squeezing_probe();
    println!("criterion 8 large-squeezing probe: INFO (never pass/fail)");
    for r in &rows {
        println!(
            "    lambda={:.1} kernel={:.10e} two_photon={:.10e} e^(4λ)/4={:.10e} limit_claim={:.1}",
            r.lambda, r.kernel_variance, r.two_photon_variance, r.closed_form, r.limit_claim
        );
    }
    assert_eq!(rows.len(), 3);
}

#[test]
fn full_report_lists_each_check_once() {
    let report = verify::run(DEFAULT_SEED, &Tolerances::default());
    let mut names: Vec<_> = report.checks.iter().map(|c| c.name).collect();
    let total = names.len();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), total);
    for k in 1..=7 {
        assert!(report.criterion(k).count() > 0, "criterion {k} has no checks");
    }
    assert_eq!(report.overall(), "pass");
}
