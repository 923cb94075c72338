//! One test per acceptance criterion. Each prints a `PASS`/`FAIL` line to
//! stderr (uncaptured) before asserting.

use std::io::Write;

use k3nl::verify::{criterion, Check, Context};

fn report(id: u8) {
    let checks: Vec<Check> = criterion(id, Context::shared());
    let mut err = std::io::stderr();
    for c in &checks {
        let _ = writeln!(err, "{}", c.line());
    }
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(Check::line).collect();
    assert!(failed.is_empty(), "{}", failed.join("\n"));
}

#[test]
fn criterion_01_kkv_table() {
    report(1);
}

#[test]
fn criterion_02_quartic_modular_fit() {
    report(2);
}

#[test]
fn criterion_03_quartic_mirror_fit() {
    report(3);
}

#[test]
fn criterion_04_g_series_identity() {
    report(4);
}

#[test]
fn criterion_05_classical_fits() {
    report(5);
}

#[test]
fn criterion_06_double_plane_scalar() {
    report(6);
}

#[test]
fn criterion_07_enumerative_reads() {
    report(7);
}

#[test]
fn criterion_08_closure_degrees() {
    report(8);
}

#[test]
fn criterion_09_picard_ranks() {
    report(9);
}

#[test]
fn criterion_10_properties() {
    report(10);
}
