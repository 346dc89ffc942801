//! Acceptance suite: one test per verification criterion, each printing a
//! pass/fail line per named check. Criterion 10 (the CLI `verify` command's
//! exit codes) lives in the CLI crate's own acceptance test.

use casimir_plasma::verify::{criterion_checks, Check, VerifyConfig};

fn run(criterion: usize) {
    let cfg = VerifyConfig::default();
    let checks = criterion_checks(criterion, &cfg);
    assert!(!checks.is_empty(), "criterion {criterion} produced no checks");
    let mut all = true;
    for Check {
        name,
        expected,
        got,
        residual,
        tolerance,
        pass,
    } in &checks
    {
        println!(
            "{} {name}: expected {expected:.9e}, got {got:.9e}, residual {residual:.3e} (tol {tolerance:.1e})",
            if *pass { "PASS" } else { "FAIL" },
        );
        all &= pass;
    }
    assert!(all, "criterion {criterion} has failing checks");
}

#[test]
fn criterion_01_contact_kernels() {
    run(1);
}

#[test]
fn criterion_02_central_equality() {
    run(2);
}

#[test]
fn criterion_03_half_energy() {
    run(3);
}

#[test]
fn criterion_04_thermodynamic_identities() {
    run(4);
}

#[test]
fn criterion_05_entropy_signs() {
    run(5);
}

#[test]
fn criterion_06_force_asymptote() {
    run(6);
}

#[test]
fn criterion_07_bulk_energy() {
    run(7);
}

#[test]
fn criterion_08_coefficient_ground_truth() {
    run(8);
}

#[test]
fn criterion_09_cutoff_bridge() {
    run(9);
}
