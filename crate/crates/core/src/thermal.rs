//! Closed-form thermal objects of the coupled pair.
//!
//! All Gaussian objects are also available as [`QuadKernel`]s so they can be
//! marginalized and traced exactly. Prefactors are assembled in log space:
//! `e^{+βE₀}` alone overflows once `βE₀` passes ~700.

use std::f64::consts::PI;

use crate::error::{positive_beta, Result};
use crate::hyper::{coth, csch, ln_cosh, ln_sinh};
use crate::model::{derive_decoupled, DecoupledParams, OscillatorParams};
use crate::quadform::QuadKernel;

/// Default high-temperature regularizer ε (dimensionless).
pub const DEFAULT_REGULARIZER: f64 = 1e-3;

/// Whether a probability density is returned as the formula gives it or
/// divided by its integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    #[default]
    AsPrinted,
    Unit,
}

/// Exponent coefficients of the composite density matrix `ρ(b, a; β)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatorCoeffs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub f: f64,
    pub g: f64,
    /// `ln[(mω/2πħ) e^{βE₀} / sqrt(sinh(ħωβe^η) sinh(ħωβe^{−η}))]`
    pub log_norm: f64,
}

/// Exponent coefficients of the diagonal `P_β(x1, x2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagonalCoeffs {
    pub a_tilde: f64,
    pub b_tilde: f64,
    pub c_tilde: f64,
    pub log_norm: f64,
}

impl DiagonalCoeffs {
    /// `ã = 2(a − d)`, `b̃ = 2(b − f)`, `c̃ = 2(c − g)`.
    pub fn from_propagator(pc: &PropagatorCoeffs) -> Self {
        Self {
            a_tilde: 2.0 * (pc.a - pc.d),
            b_tilde: 2.0 * (pc.b - pc.f),
            c_tilde: 2.0 * (pc.c - pc.g),
            log_norm: pc.log_norm,
        }
    }

    pub fn kernel(&self) -> QuadKernel {
        gaussian2(self.log_norm, self.a_tilde, self.b_tilde, self.c_tilde)
    }
}

/// Exponent coefficients of the temperature-dependent wavefunction
/// `ψ(x1, x2; β) ∝ exp(−α̃x1² − β̃x2² + 2γ̃x1x2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavefunctionCoeffs {
    pub alpha_tilde: f64,
    pub beta_tilde: f64,
    pub gamma_tilde: f64,
    pub log_norm: f64,
}

impl WavefunctionCoeffs {
    pub fn kernel(&self) -> QuadKernel {
        gaussian2(self.log_norm, self.alpha_tilde, self.beta_tilde, self.gamma_tilde)
    }

    /// `α̃β̃ − γ̃²`.
    pub fn determinant(&self) -> f64 {
        self.alpha_tilde * self.beta_tilde - self.gamma_tilde * self.gamma_tilde
    }
}

fn gaussian2(log_norm: f64, xx: f64, yy: f64, cross: f64) -> QuadKernel {
    QuadKernel::from_rows(log_norm, 2, &[xx, -cross, -cross, yy]).expect("2x2 symmetric by construction")
}

/// Shared pieces of every mode-resolved formula.
struct Modes {
    /// `mω/2ħ`
    half_inv_len: f64,
    mu2: f64,
    ep: f64,
    em: f64,
    cos2: f64,
    sin2: f64,
    cross: f64,
    /// `ħω`
    quantum: f64,
}

impl Modes {
    fn new(dp: &DecoupledParams) -> Self {
        let (c, s) = dp.half_angle();
        Self {
            half_inv_len: 0.5 * dp.inverse_length_sq(),
            mu2: dp.mu * dp.mu,
            ep: dp.eta.exp(),
            em: (-dp.eta).exp(),
            cos2: c * c,
            sin2: s * s,
            cross: c * s,
            quantum: dp.hbar * dp.omega,
        }
    }

    /// Mode arguments `ħωβe^{±η}`.
    fn args(&self, beta: f64) -> (f64, f64) {
        (self.quantum * beta * self.ep, self.quantum * beta * self.em)
    }

    /// Rotates the per-mode weights `(e^η w1, e^{−η} w2)` into the three
    /// coordinate coefficients, each scaled by `scale`.
    fn rotate(&self, w1: f64, w2: f64, scale: f64) -> (f64, f64, f64) {
        let (p, q) = (self.ep * w1, self.em * w2);
        (
            scale * self.mu2 * (p * self.cos2 + q * self.sin2),
            scale / self.mu2 * (p * self.sin2 + q * self.cos2),
            scale * (p - q) * self.cross,
        )
    }
}

fn composite_log_norm(dp: &DecoupledParams, beta: f64, x1: f64, x2: f64) -> f64 {
    (dp.inverse_length_sq() / (2.0 * PI)).ln() + beta * dp.e0 - 0.5 * (ln_sinh(x1) + ln_sinh(x2))
}

/// Coefficients `a … g` of the composite density matrix.
pub fn propagator_coeffs(dp: &DecoupledParams, beta: f64) -> Result<PropagatorCoeffs> {
    positive_beta(beta)?;
    let modes = Modes::new(dp);
    let (x1, x2) = modes.args(beta);
    let (a, b, c) = modes.rotate(coth(x1), coth(x2), modes.half_inv_len);
    let (d, f, g) = modes.rotate(csch(x1), csch(x2), modes.half_inv_len);
    Ok(PropagatorCoeffs {
        a,
        b,
        c,
        d,
        f,
        g,
        log_norm: composite_log_norm(dp, beta, x1, x2),
    })
}

/// `ã, b̃, c̃` evaluated directly from their `tanh(ħωβe^{±η}/2)` form.
pub fn diagonal_coeffs(dp: &DecoupledParams, beta: f64) -> Result<DiagonalCoeffs> {
    positive_beta(beta)?;
    let modes = Modes::new(dp);
    let (x1, x2) = modes.args(beta);
    let (a_tilde, b_tilde, c_tilde) =
        modes.rotate((0.5 * x1).tanh(), (0.5 * x2).tanh(), 2.0 * modes.half_inv_len);
    Ok(DiagonalCoeffs {
        a_tilde,
        b_tilde,
        c_tilde,
        log_norm: composite_log_norm(dp, beta, x1, x2),
    })
}

/// `α̃, β̃, γ̃` and the log prefactor of `ψ(·; β)`.
pub fn wavefunction_coeffs(dp: &DecoupledParams, beta: f64) -> Result<WavefunctionCoeffs> {
    positive_beta(beta)?;
    let modes = Modes::new(dp);
    let (y1, y2) = modes.args(beta);
    let (alpha_tilde, beta_tilde, gamma_tilde) = modes.rotate(y1.tanh(), y2.tanh(), modes.half_inv_len);
    let log_norm = 0.5 * (dp.inverse_length_sq() / (4.0 * PI)).ln() - 0.5 * (ln_cosh(y1) + ln_cosh(y2))
        + beta * modes.quantum * dp.eta.cosh();
    Ok(WavefunctionCoeffs {
        alpha_tilde,
        beta_tilde,
        gamma_tilde,
        log_norm,
    })
}

/// The composite density matrix as a kernel over `(x1b, x2b, x1a, x2a)`.
pub fn density_kernel(dp: &DecoupledParams, beta: f64) -> Result<QuadKernel> {
    let PropagatorCoeffs {
        a,
        b,
        c,
        d,
        f,
        g,
        log_norm,
    } = propagator_coeffs(dp, beta)?;
    #[rustfmt::skip]
    let rows = [
         a, -c, -d,  g,
        -c,  b,  g, -f,
        -d,  g,  a, -c,
         g, -f, -c,  b,
    ];
    QuadKernel::from_rows(log_norm, 4, &rows)
}

/// `ρ(x1b, x2b, x1a, x2a; β)`, including the `e^{+βE₀}` shift.
pub fn density_matrix(dp: &DecoupledParams, beta: f64, xb: (f64, f64), xa: (f64, f64)) -> Result<f64> {
    Ok(density_kernel(dp, beta)?.evaluate(&[xb.0, xb.1, xa.0, xa.1]))
}

/// `P_β(x1, x2)`, the diagonal of the density matrix.
pub fn probability_density(
    dp: &DecoupledParams,
    beta: f64,
    x1: f64,
    x2: f64,
    normalization: Normalization,
) -> Result<f64> {
    let kernel = diagonal_coeffs(dp, beta)?.kernel();
    let log_value = kernel.log_evaluate(&[x1, x2]);
    Ok(match normalization {
        Normalization::AsPrinted => log_value.exp(),
        Normalization::Unit => (log_value - kernel.log_integrate_all()?).exp(),
    })
}

/// Classical Boltzmann form `m e^{β₀E₀}/(2πħ²β₀) · exp(−β₀V)`.
pub fn classical_density(params: &OscillatorParams, beta0: f64, x1: f64, x2: f64) -> Result<f64> {
    positive_beta(beta0)?;
    let dp = derive_decoupled(params)?;
    let log_pref = (params.mean_mass() / (2.0 * PI * params.hbar * params.hbar * beta0)).ln() + beta0 * dp.e0;
    Ok((log_pref - beta0 * params.potential(x1, x2)).exp())
}

/// The normalized ground state as a kernel.
pub fn ground_state_kernel(dp: &DecoupledParams) -> QuadKernel {
    let modes = Modes::new(dp);
    let (xx, yy, cross) = modes.rotate(1.0, 1.0, modes.half_inv_len);
    gaussian2(0.5 * (dp.inverse_length_sq() / PI).ln(), xx, yy, cross)
}

/// `ψ₀(x1, x2)`.
pub fn ground_state(dp: &DecoupledParams, x1: f64, x2: f64) -> f64 {
    let (big1, big2) = dp.to_normal(x1, x2);
    let l = 0.5 * dp.inverse_length_sq();
    let exponent = -l * (dp.eta.exp() * big1 * big1 + (-dp.eta).exp() * big2 * big2);
    (dp.inverse_length_sq() / PI).sqrt() * exponent.exp()
}

/// `ψ(x1, x2; β)`; not normalized, it carries `e^{+βħω cosh η}`.
pub fn wavefunction(dp: &DecoupledParams, beta: f64, x1: f64, x2: f64) -> Result<f64> {
    Ok(wavefunction_coeffs(dp, beta)?.kernel().evaluate(&[x1, x2]))
}

/// The non-normalized starting wavefunction at `β = ε/2`:
/// `ψ(ε/2) = sqrt(mω/4πħ) / sqrt(cosh(ħωe^η ε/2) cosh(ħωe^{−η} ε/2)) · exp(−ã(ε)x1²/2 − b̃(ε)x2²/2 + c̃(ε)x1x2)`.
pub fn initial_wavefunction_kernel(dp: &DecoupledParams, epsilon: f64) -> Result<QuadKernel> {
    let diag = diagonal_coeffs(dp, epsilon)?;
    let (y1, y2) = Modes::new(dp).args(0.5 * epsilon);
    let log_norm = 0.5 * (dp.inverse_length_sq() / (4.0 * PI)).ln() - 0.5 * (ln_cosh(y1) + ln_cosh(y2));
    Ok(gaussian2(log_norm, 0.5 * diag.a_tilde, 0.5 * diag.b_tilde, 0.5 * diag.c_tilde))
}

/// One-particle reduced density matrix as a kernel over `(x1, x1′)`.
pub fn reduced_density_kernel(dp: &DecoupledParams, beta: f64) -> Result<QuadKernel> {
    let wc = wavefunction_coeffs(dp, beta)?;
    let (alpha, beta_t, gamma) = (wc.alpha_tilde, wc.beta_tilde, wc.gamma_tilde);
    let det = wc.determinant();
    let log_a = 0.5 * (2.0 * det / (PI * beta_t)).ln();
    let diag = (2.0 * alpha * beta_t - gamma * gamma) / (2.0 * beta_t);
    let off = gamma * gamma / beta_t;
    QuadKernel::from_rows(log_a, 2, &[diag, -0.5 * off, -0.5 * off, diag])
}

/// `ρ_red(x1, x1′; β)`.
pub fn reduced_density(dp: &DecoupledParams, beta: f64, x1: f64, x1p: f64) -> Result<f64> {
    Ok(reduced_density_kernel(dp, beta)?.evaluate(&[x1, x1p]))
}
