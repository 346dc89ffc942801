//! Acceptance criterion 10: the `verify` command runs every check and exits 0;
//! with an unattainable tolerance override it reports failures and exits 1.

use std::process::Command;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_casimir-plasma"))
}

#[test]
fn criterion_10_verify_exit_codes() {
    let ok = binary().arg("verify").output().expect("spawn verify");
    let stdout = String::from_utf8_lossy(&ok.stdout);
    println!(
        "{} verify: exit {:?}",
        if ok.status.success() { "PASS" } else { "FAIL" },
        ok.status.code()
    );
    assert!(ok.status.success(), "verify must exit 0:\n{stdout}");
    assert!(
        stdout.contains("surface_eq_casimir"),
        "central-equality check must be labeled in the output"
    );
    assert!(stdout.contains("PASS"));
    assert!(!stdout.contains("FAIL"));

    let strict = binary()
        .args(["verify", "--rel-tol", "1e-30"])
        .output()
        .expect("spawn strict verify");
    let strict_stdout = String::from_utf8_lossy(&strict.stdout);
    println!(
        "{} verify --rel-tol 1e-30: exit {:?}",
        if strict.status.code() == Some(1) { "PASS" } else { "FAIL" },
        strict.status.code()
    );
    assert_eq!(
        strict.status.code(),
        Some(1),
        "unattainable tolerance must exit 1"
    );
    assert!(strict_stdout.contains("FAIL"));
}
