//! Purity of the one-particle reduced state and its limiting forms.
//!
//! All inputs use the dimensionless inverse temperature `β ≡ ħωβ` unless
//! stated otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{positive_beta, Error, Result};
use crate::thermal::WavefunctionCoeffs;

/// tanh(50) == 1 in f64; larger arguments only risk inf·0.
const TANH_CLAMP: f64 = 50.0;

/// Below this `|sin(θ/2) cos(θ/2)|` the low-temperature rewrite is singular.
const DEGENERATE_ANGLE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PurityPoint {
    pub eta: f64,
    pub theta: f64,
    pub beta: f64,
    pub value: f64,
}

impl PurityPoint {
    pub fn evaluate(eta: f64, theta: f64, beta: f64) -> Result<Self> {
        Ok(Self {
            eta,
            theta,
            beta,
            value: purity_closed(eta, theta, beta)?,
        })
    }
}

fn clamped_tanh(x: f64) -> f64 {
    x.clamp(-TANH_CLAMP, TANH_CLAMP).tanh()
}

fn half_angle_sq(theta: f64) -> (f64, f64) {
    let (s, c) = (0.5 * theta).sin_cos();
    (c * c, s * s)
}

/// Closed-form purity at finite temperature:
///
/// ```text
/// P = sqrt( t₊ t₋ / [(e^η t₊ sin² + e^{−η} t₋ cos²)(e^η t₊ cos² + e^{−η} t₋ sin²)] )
/// ```
///
/// with `t± = tanh(β e^{±η})` and half-angle `θ/2`.
pub fn purity_closed(eta: f64, theta: f64, beta: f64) -> Result<f64> {
    positive_beta(beta)?;
    let (ep, em) = (eta.exp(), (-eta).exp());
    let (tp, tm) = (clamped_tanh(beta * ep), clamped_tanh(beta * em));
    let (cos2, sin2) = half_angle_sq(theta);
    let den = (ep * tp * sin2 + em * tm * cos2) * (ep * tp * cos2 + em * tm * sin2);
    Ok((tp * tm / den).sqrt().min(1.0))
}

/// `sqrt((α̃β̃ − γ̃²)/(α̃β̃))`, the purity computed from the wavefunction
/// exponents.
pub fn purity_from_coeffs(wc: &WavefunctionCoeffs) -> Result<f64> {
    let det = wc.determinant();
    if !(wc.alpha_tilde > 0.0 && wc.beta_tilde > 0.0 && det > 0.0) {
        return Err(Error::DegenerateKernel(format!(
            "need α̃ > 0, β̃ > 0, α̃β̃ − γ̃² > 0; got α̃={}, β̃={}, det={det}",
            wc.alpha_tilde, wc.beta_tilde
        )));
    }
    Ok((det / (wc.alpha_tilde * wc.beta_tilde)).sqrt())
}

/// Ground-state purity with a flag for the angles where its tan/cot form is
/// singular.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowTemperaturePurity {
    pub value: f64,
    /// `θ ∈ {0, π, 2π}`: the value is the algebraic limit 1.
    pub degenerate_angle: bool,
}

/// `β → ∞` purity:
/// `1 / (|sin(θ/2)cos(θ/2)| · sqrt(2cosh 2η + tan²(θ/2) + cot²(θ/2)))`.
pub fn purity_low_t(eta: f64, theta: f64) -> LowTemperaturePurity {
    let (s, c) = (0.5 * theta).sin_cos();
    let sc = (s * c).abs();
    if sc < DEGENERATE_ANGLE {
        return LowTemperaturePurity {
            value: 1.0,
            degenerate_angle: true,
        };
    }
    let tan = s / c;
    let value = 1.0 / (sc * (2.0 * (2.0 * eta).cosh() + tan * tan + 1.0 / (tan * tan)).sqrt());
    LowTemperaturePurity {
        value: value.min(1.0),
        degenerate_angle: false,
    }
}

/// `β → 0` purity:
/// `1 / sqrt((e^{2η} sin² + e^{−2η} cos²)(e^{2η} cos² + e^{−2η} sin²))`.
pub fn purity_high_t(eta: f64, theta: f64) -> f64 {
    let (cos2, sin2) = half_angle_sq(theta);
    let (ep, em) = ((2.0 * eta).exp(), (-2.0 * eta).exp());
    (1.0 / ((ep * sin2 + em * cos2) * (ep * cos2 + em * sin2)).sqrt()).min(1.0)
}

/// Purity for equal masses and equal springs, with physical `β`:
///
/// ```text
/// P = 2 sqrt(T₊T₋) / (r^{1/4} T₊ + r^{−1/4} T₋),  r = (C1 + C3/2)/(C1 − C3/2),
/// T± = tanh(ħ sqrt((C1 ± C3/2)/m1) β)
/// ```
pub fn purity_identical(c1: f64, c3: f64, m1: f64, hbar: f64, beta: f64) -> Result<f64> {
    crate::error::positive("C1", c1)?;
    crate::error::positive("m1", m1)?;
    crate::error::positive("hbar", hbar)?;
    positive_beta(beta)?;
    if !(c3.abs() < 2.0 * c1) {
        return Err(Error::UnstablePotential {
            discriminant: c1 * c1 - 0.25 * c3 * c3,
        });
    }
    let (plus, minus) = (c1 + 0.5 * c3, c1 - 0.5 * c3);
    let tp = clamped_tanh(hbar * (plus / m1).sqrt() * beta);
    let tm = clamped_tanh(hbar * (minus / m1).sqrt() * beta);
    let quarter = (plus / minus).powf(0.25);
    Ok((2.0 * (tp * tm).sqrt() / (quarter * tp + tm / quarter)).min(1.0))
}

/// Linear entropy `S = d/(d−1) · (1 − P)` for a `d`-level subsystem.
pub fn linear_entropy(purity: f64, d: u32) -> Result<f64> {
    if d < 2 {
        return Err(Error::OutOfRange {
            what: "dimension",
            value: d as f64,
            min: 2.0,
            max: f64::INFINITY,
        });
    }
    let d = d as f64;
    if !(purity >= 1.0 / d && purity <= 1.0) {
        return Err(Error::OutOfRange {
            what: "purity",
            value: purity,
            min: 1.0 / d,
            max: 1.0,
        });
    }
    Ok((d / (d - 1.0) * (1.0 - purity)).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, LN_2, PI};

    #[test]
    fn uncoupled_is_pure() {
        for &theta in &[0.0, 0.7, FRAC_PI_2, PI, 5.0] {
            for &beta in &[0.01, 1.0, 80.0] {
                assert_eq!(purity_closed(0.0, theta, beta).unwrap(), 1.0);
            }
        }
    }

    #[test]
    fn four_fifths_at_low_temperature() {
        assert!((purity_closed(LN_2, FRAC_PI_2, 50.0).unwrap() - 0.8).abs() < 1e-9);
        assert!((purity_low_t(LN_2, FRAC_PI_2).value - 0.8).abs() < 1e-15);
        assert!((2.0 / (2.0 * 17.0 / 8.0 + 2.0f64).sqrt() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn low_t_examples() {
        let p = purity_low_t(0.0, FRAC_PI_2);
        assert!((p.value - 1.0).abs() < 1e-15 && !p.degenerate_angle);
        for &theta in &[0.0, PI, 2.0 * PI] {
            let p = purity_low_t(1.7, theta);
            assert!(p.degenerate_angle);
            assert_eq!(p.value, 1.0);
        }
        let direct = purity_closed(1.0, PI / 3.0, 50.0).unwrap();
        assert!((purity_low_t(1.0, PI / 3.0).value - direct).abs() < 1e-6);
    }

    #[test]
    fn high_t_examples() {
        assert_eq!(purity_high_t(0.0, 1.234), 1.0);
        assert!((purity_high_t(1.0, PI / 3.0) - purity_low_t(2.0, PI / 3.0).value).abs() < 1e-12);
    }

    #[test]
    fn identical_particles() {
        for &beta in &[0.1, 1.0, 30.0] {
            assert!((purity_identical(1.0, 0.0, 1.0, 1.0, beta).unwrap() - 1.0).abs() < 1e-15);
        }
        let p = purity_identical(1.0, 30.0 / 17.0, 1.0, 1.0, 50.0).unwrap();
        assert!((p - 0.8).abs() < 1e-6);
        assert!(matches!(
            purity_identical(1.0, 2.0, 1.0, 1.0, 1.0),
            Err(Error::UnstablePotential { .. })
        ));
        assert!(purity_identical(1.0, 0.5, 1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn linear_entropy_range() {
        assert_eq!(linear_entropy(1.0, 2).unwrap(), 0.0);
        assert_eq!(linear_entropy(1.0, 7).unwrap(), 0.0);
        assert!((linear_entropy(0.25, 4).unwrap() - 1.0).abs() < 1e-15);
        assert!((linear_entropy(0.8, 2).unwrap() - 0.4).abs() < 1e-15);
        assert!(linear_entropy(0.4, 2).is_err());
        assert!(linear_entropy(1.1, 2).is_err());
        assert!(linear_entropy(0.9, 1).is_err());
    }

    #[test]
    fn degenerate_coefficients_are_rejected() {
        let wc = WavefunctionCoeffs {
            alpha_tilde: 1.0,
            beta_tilde: 1.0,
            gamma_tilde: 1.0,
            log_norm: 0.0,
        };
        assert!(matches!(purity_from_coeffs(&wc), Err(Error::DegenerateKernel(_))));
        let pure = WavefunctionCoeffs { gamma_tilde: 0.0, ..wc };
        assert_eq!(purity_from_coeffs(&pure).unwrap(), 1.0);
    }
}
