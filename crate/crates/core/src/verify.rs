//! Self-check report behind `thermopurity verify`.
//!
//! Each check reduces to one observed number compared against a tolerance,
//! usually the largest deviation seen over a parameter grid. The quick level
//! runs the closed-form identities; the full level adds the grid oracles.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::model::{derive_decoupled, from_decoupled, DecoupledParams, OscillatorParams};
use crate::oracle::{self, Grid2D};
use crate::purity::{
    purity_closed, purity_from_coeffs, purity_high_t, purity_identical, purity_low_t,
};
use crate::quadform::trace_product;
use crate::thermal::{self, DiagonalCoeffs};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub tolerance: f64,
    pub observed: f64,
    pub passed: bool,
}

impl Check {
    /// Passes when `observed ≤ tolerance`; NaN always fails.
    fn at_most(name: &str, observed: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            tolerance,
            observed,
            passed: observed <= tolerance,
        }
    }

    fn from_result(name: &str, observed: Result<f64>, tolerance: f64) -> Self {
        Self::at_most(name, observed.unwrap_or(f64::NAN), tolerance)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            writeln!(
                f,
                "{}  {:<width$}  observed {:<12.3e} tolerance {:.1e}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.observed,
                c.tolerance,
            )?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Function computing `ã, b̃, c̃` from their direct form.
pub type DiagonalFn = fn(&DecoupledParams, f64) -> Result<DiagonalCoeffs>;

/// Replaceable pieces of the checks, so the report itself can be tested
/// against injected faults.
#[derive(Debug, Clone, Copy)]
pub struct Harness {
    pub diagonal: DiagonalFn,
}

impl Default for Harness {
    fn default() -> Self {
        Self {
            diagonal: thermal::diagonal_coeffs,
        }
    }
}

pub fn verify(level: Level) -> Report {
    verify_with(level, &Harness::default())
}

pub fn verify_with(level: Level, harness: &Harness) -> Report {
    let mut checks = vec![
        shorthand_identity(harness),
        doubling_identity(harness),
        two_path_purity(),
        quadform_purity(),
        reduced_trace(),
        symmetries(),
        range(),
        monotone_in_beta(),
        low_t_limit(),
        high_t_limit(),
        limit_relation(),
        identical_particles(),
        weak_coupling(),
        high_t_couplings(),
    ];
    checks.extend(strong_coupling());
    if level == Level::Full {
        checks.push(quadrature_agreement());
        checks.push(residual());
        checks.push(ground_state_projection());
    }
    Report { checks }
}

/// `η ∈ [−2, 2]`, `θ` off the degenerate angles, log-spaced `β`.
fn eta_grid() -> impl Iterator<Item = f64> + Clone {
    (0..20).map(|i| -2.0 + 4.0 * i as f64 / 19.0)
}

fn theta_grid() -> impl Iterator<Item = f64> + Clone {
    (0..20).map(|j| 0.05 + (2.0 * PI - 0.1) * j as f64 / 19.0)
}

fn beta_grid() -> impl Iterator<Item = f64> + Clone {
    (0..10).map(|k| 0.05 * 1000f64.powf(k as f64 / 9.0))
}

fn sweep_grid() -> impl Iterator<Item = (f64, f64, f64)> {
    eta_grid().flat_map(|e| theta_grid().flat_map(move |t| beta_grid().map(move |b| (e, t, b))))
}

fn max_over(mut values: impl Iterator<Item = Result<f64>>) -> Result<f64> {
    values.try_fold(0.0f64, |acc, v| v.map(|v| if v.is_nan() { f64::NAN } else { acc.max(v) }))
}

fn shorthand_identity(h: &Harness) -> Check {
    let worst = max_over(sweep_grid().map(|(eta, theta, beta)| {
        let dp = from_decoupled(eta, theta);
        let pc = thermal::propagator_coeffs(&dp, beta)?;
        let direct = (h.diagonal)(&dp, beta)?;
        // c and g are themselves differences, so scale by the diagonal terms
        let scale = 2.0 * (pc.a.abs() + pc.b.abs() + pc.d.abs() + pc.f.abs());
        let gap = |tilde: f64, x: f64, y: f64| (tilde - 2.0 * (x - y)).abs() / scale;
        Ok(gap(direct.a_tilde, pc.a, pc.d)
            .max(gap(direct.b_tilde, pc.b, pc.f))
            .max(gap(direct.c_tilde, pc.c, pc.g)))
    }));
    Check::from_result("shorthand identity ã=2(a−d), b̃=2(b−f), c̃=2(c−g)", worst, 1e-12)
}

fn doubling_identity(h: &Harness) -> Check {
    let worst = max_over(sweep_grid().map(|(eta, theta, beta)| {
        let dp = from_decoupled(eta, theta);
        let wc = thermal::wavefunction_coeffs(&dp, beta)?;
        let dc = (h.diagonal)(&dp, 2.0 * beta)?;
        let scale = dc.a_tilde.abs() + dc.b_tilde.abs();
        Ok(((2.0 * wc.alpha_tilde - dc.a_tilde).abs()
            + (2.0 * wc.beta_tilde - dc.b_tilde).abs()
            + (2.0 * wc.gamma_tilde - dc.c_tilde).abs())
            / scale)
    }));
    Check::from_result("doubling identity 2(α̃,β̃,γ̃)(β) = (ã,b̃,c̃)(2β)", worst, 1e-12)
}

fn two_path_purity() -> Check {
    let worst = max_over(sweep_grid().map(|(eta, theta, beta)| {
        let wc = thermal::wavefunction_coeffs(&from_decoupled(eta, theta), beta)?;
        Ok((purity_from_coeffs(&wc)? - purity_closed(eta, theta, beta)?).abs())
    }));
    Check::from_result("purity from coefficients vs closed form", worst, 1e-12)
}

fn quadform_purity() -> Check {
    let worst = max_over(sweep_grid().step_by(7).map(|(eta, theta, beta)| {
        let rho = thermal::reduced_density_kernel(&from_decoupled(eta, theta), beta)?;
        Ok((trace_product(&rho, &rho)? - purity_closed(eta, theta, beta)?).abs())
    }));
    Check::from_result("Gaussian trace of ρ² vs closed form", worst, 1e-10)
}

fn reduced_trace() -> Check {
    let worst = max_over(sweep_grid().step_by(7).map(|(eta, theta, beta)| {
        let rho = thermal::reduced_density_kernel(&from_decoupled(eta, theta), beta)?;
        Ok((rho.trace()? - 1.0).abs())
    }));
    Check::from_result("reduced density has unit trace", worst, 1e-12)
}

fn symmetries() -> Check {
    let worst = max_over(sweep_grid().map(|(eta, theta, beta)| {
        let p = purity_closed(eta, theta, beta)?;
        Ok((p - purity_closed(-eta, theta, beta)?)
            .abs()
            .max((p - purity_closed(eta, 2.0 * PI - theta, beta)?).abs())
            .max((p - purity_closed(eta, PI - theta, beta)?).abs()))
    }));
    Check::from_result("symmetries η→−η, θ→2π−θ, θ→π−θ", worst, 1e-12)
}

fn range() -> Check {
    let outside = sweep_grid()
        .filter(|&(e, t, b)| !matches!(purity_closed(e, t, b), Ok(p) if p > 0.0 && p <= 1.0))
        .count();
    Check::at_most("purity within (0, 1] (points outside)", outside as f64, 0.0)
}

fn monotone_in_beta() -> Check {
    let worst = max_over(eta_grid().flat_map(|eta| {
        theta_grid().map(move |theta| {
            let values = beta_grid()
                .map(|b| purity_closed(eta, theta, b))
                .collect::<Result<Vec<_>>>()?;
            Ok(values.windows(2).map(|w| w[0] - w[1]).fold(0.0, f64::max))
        })
    }));
    Check::from_result("purity non-decreasing in β (largest drop)", worst, 1e-14)
}

fn low_t_limit() -> Check {
    let worst = max_over(eta_grid().flat_map(|eta| {
        theta_grid().map(move |theta| Ok((purity_closed(eta, theta, 50.0)? - purity_low_t(eta, theta).value).abs()))
    }));
    Check::from_result("β=50 purity vs low-temperature limit", worst, 1e-6)
}

fn high_t_limit() -> Check {
    let worst = max_over(eta_grid().flat_map(|eta| {
        theta_grid().map(move |theta| Ok((purity_closed(eta, theta, 1e-3)? - purity_high_t(eta, theta)).abs()))
    }));
    Check::from_result("β=1e-3 purity vs high-temperature limit", worst, 1e-4)
}

fn limit_relation() -> Check {
    let worst = max_over(eta_grid().flat_map(|eta| {
        theta_grid().map(move |theta| Ok((purity_high_t(eta, theta) - purity_low_t(2.0 * eta, theta).value).abs()))
    }));
    Check::from_result("high-T limit at η equals low-T limit at 2η", worst, 1e-12)
}

fn identical_particles() -> Check {
    let observed = (|| {
        let closed = purity_closed(2f64.ln(), FRAC_PI_2, 50.0)?;
        let direct = purity_identical(1.0, 30.0 / 17.0, 1.0, 1.0, 50.0)?;
        Ok((closed - 0.8).abs().max((direct - 0.8).abs()))
    })();
    Check::from_result("identical particles, η=ln 2 reaches 4/5", observed, 1e-6)
}

fn weak_coupling() -> Check {
    let masses = [0.3, 1.0, 2.5];
    let springs = [0.5, 1.0, 4.0];
    let mut params = Vec::new();
    for m1 in masses {
        for m2 in masses {
            for c1 in springs {
                for c2 in springs {
                    params.push(OscillatorParams::new(m1, m2, c1, c2, 0.0));
                }
            }
        }
    }
    let worst = max_over(params.iter().map(|p| {
        let dp = derive_decoupled(p)?;
        Ok((purity_closed(dp.eta, dp.theta, 1.0)? - 1.0).abs())
    }));
    Check::from_result("uncoupled oscillators are pure", worst, 1e-12)
}

fn strong_coupling() -> Vec<Check> {
    let values: Result<Vec<f64>> = [1e-2, 1e-3, 1e-4, 1e-5, 1e-6]
        .iter()
        .map(|&delta| {
            let (c1, c2) = (1.0, 2.0);
            let c3 = 2.0 * f64::sqrt(c1 * c2) * (1.0 - delta);
            let dp = derive_decoupled(&OscillatorParams::new(1.0, 1.0, c1, c2, c3))?;
            purity_closed(dp.eta, dp.theta, 1.0)
        })
        .collect();
    match values {
        Ok(v) => vec![
            Check::at_most("strong coupling δ=1e-6 purity", v[4], 0.05),
            Check::at_most(
                "strong coupling decreasing in δ (largest rise)",
                v.windows(2).map(|w| w[1] - w[0]).fold(f64::NEG_INFINITY, f64::max),
                0.0,
            ),
        ],
        Err(_) => vec![Check::at_most("strong coupling", f64::NAN, 0.05)],
    }
}

fn high_t_couplings() -> Check {
    let observed = derive_decoupled(&OscillatorParams::new(1.0, 1.0, 1.0, 1.0, 1.0))
        .map(|dp| (purity_high_t(dp.eta, dp.theta) - 0.75f64.sqrt()).abs());
    Check::from_result("high-T purity equals sqrt(1 − C3²/4C1C2)", observed, 1e-12)
}

fn quadrature_agreement() -> Check {
    let grid = Grid2D::new(8.0, 257).expect("valid grid");
    let mut points = Vec::new();
    for eta in [0.0, 1.0, 2f64.ln()] {
        for theta in [FRAC_PI_2, FRAC_PI_3] {
            for beta in [0.5, 1.0, 5.0] {
                points.push((eta, theta, beta));
            }
        }
    }
    let worst = max_over(points.into_iter().map(|(eta, theta, beta)| {
        let q = oracle::purity_quadrature(&from_decoupled(eta, theta), beta, &grid)?;
        Ok((q.value - purity_closed(eta, theta, beta)?).abs())
    }));
    Check::from_result("grid quadrature purity vs closed form", worst, 1e-6)
}

fn residual() -> Check {
    let grid = Grid2D::new(8.0, 257).expect("valid grid");
    let mut points = Vec::new();
    for eta in [0.0, 1.0] {
        for theta in [0.0, FRAC_PI_2] {
            for beta in [0.5, 2.0] {
                points.push((eta, theta, beta));
            }
        }
    }
    let worst = max_over(
        points
            .into_iter()
            .map(|(eta, theta, beta)| oracle::schrodinger_residual(&from_decoupled(eta, theta), beta, &grid)),
    );
    Check::from_result("imaginary-time Schrödinger residual", worst, 1e-4)
}

/// Largest relative deviation of an evolved field from `ψ₀` over nodes
/// within two ground-state widths of each normal mode.
pub fn ground_state_deviation(dp: &DecoupledParams, field: &oracle::Field2D) -> f64 {
    let field = field.normalized();
    let g = field.grid;
    let inv_len = dp.inverse_length_sq();
    let sigma = |log_ratio: f64| (1.0 / (inv_len * log_ratio.exp())).sqrt();
    let (sigma1, sigma2) = (sigma(dp.eta), sigma(-dp.eta));
    let coords = g.coords();
    let mut worst: f64 = 0.0;
    for (i, &x1) in coords.iter().enumerate() {
        for (j, &x2) in coords.iter().enumerate() {
            let (big1, big2) = dp.to_normal(x1, x2);
            if big1.abs() > 2.0 * sigma1 || big2.abs() > 2.0 * sigma2 {
                continue;
            }
            let exact = thermal::ground_state(dp, x1, x2);
            worst = worst.max(((field.at(i, j) - exact) / exact).abs());
        }
    }
    worst
}

/// Grid and step count used for ground-state projection checks.
pub const PROJECTION_GRID: (f64, usize) = (8.0, 129);
pub const PROJECTION_STEPS: usize = 20_000;

fn ground_state_projection() -> Check {
    let grid = Grid2D::new(PROJECTION_GRID.0, PROJECTION_GRID.1).expect("valid grid");
    let worst = max_over([(0.0, 0.0), (1.0, FRAC_PI_3)].into_iter().map(|(eta, theta)| {
        let dp = from_decoupled(eta, theta);
        let field = oracle::imaginary_time_evolve(&dp, &grid, oracle::DEFAULT_BETA_START, 20.0, PROJECTION_STEPS)?;
        Ok(ground_state_deviation(&dp, &field))
    }));
    Check::from_result("imaginary-time evolution to β=20 vs ground state", worst, 1e-5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_level_passes() {
        let report = verify(Level::Quick);
        assert!(report.passed(), "{report}");
        assert!(report.to_string().contains("PASS"));
    }

    #[test]
    fn injected_sign_error_is_caught() {
        fn flipped(dp: &DecoupledParams, beta: f64) -> Result<DiagonalCoeffs> {
            let mut d = thermal::diagonal_coeffs(dp, beta)?;
            d.c_tilde = -d.c_tilde;
            Ok(d)
        }
        let report = verify_with(Level::Quick, &Harness { diagonal: flipped });
        let failed: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.iter().any(|n| n.starts_with("shorthand identity")), "{report}");
    }
}
