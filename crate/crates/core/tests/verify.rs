use thermopurity::model::DecoupledParams;
use thermopurity::thermal::{self, DiagonalCoeffs};
use thermopurity::verify::{verify, verify_with, Harness, Level};

fn sign_flipped(dp: &DecoupledParams, beta: f64) -> thermopurity::Result<DiagonalCoeffs> {
    let mut d = thermal::diagonal_coeffs(dp, beta)?;
    d.c_tilde = -d.c_tilde;
    Ok(d)
}

#[test]
fn full_level_passes_with_tight_quadrature() {
    let report = verify(Level::Full);
    assert!(report.passed(), "{report}");
    let quadrature = report.checks.iter().find(|c| c.name.contains("quadrature")).unwrap();
    assert!(quadrature.observed < 1e-6);
    assert!(report.checks.len() > verify(Level::Quick).checks.len());
}

#[test]
fn full_level_catches_injected_sign_error() {
    let report = verify_with(Level::Full, &Harness { diagonal: sign_flipped });
    assert!(!report.passed());
    let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
    assert!(failed.iter().any(|n| n.starts_with("shorthand identity")), "{report}");
    let printed = report.to_string();
    assert!(printed.lines().any(|l| l.starts_with("FAIL  shorthand identity")));
}

#[test]
fn report_lists_tolerance_and_observation() {
    let report = verify(Level::Quick);
    for (check, line) in report.checks.iter().zip(report.to_string().lines()) {
        assert!(line.starts_with(if check.passed { "PASS" } else { "FAIL" }));
        assert!(line.contains(&check.name));
        assert!(line.contains("tolerance"));
    }
    assert!(report.to_string().ends_with("0 failed"));
}
