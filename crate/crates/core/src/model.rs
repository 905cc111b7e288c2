//! Physical inputs and the normal-mode (decoupled) description.
//!
//! The rotation-plus-scaling
//!
//! ```text
//! x1 = ( cos(θ/2) X1 + sin(θ/2) X2) / μ
//! x2 = (-sin(θ/2) X1 + cos(θ/2) X2) · μ
//! ```
//!
//! has unit Jacobian and maps the coupled Hamiltonian onto two independent
//! oscillators of mass `m = sqrt(m1 m2)` and spring constants `k e^{±2η}`,
//! i.e. frequencies `ω e^{±η}` with `ω = sqrt(k/m)`.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{positive, Error, Result};

/// Masses, spring constants, coupling and ħ of the coupled pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorParams {
    pub m1: f64,
    pub m2: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub hbar: f64,
}

impl OscillatorParams {
    /// Parameters with ħ = 1.
    pub fn new(m1: f64, m2: f64, c1: f64, c2: f64, c3: f64) -> Self {
        Self {
            m1,
            m2,
            c1,
            c2,
            c3,
            hbar: 1.0,
        }
    }

    pub fn with_hbar(mut self, hbar: f64) -> Self {
        self.hbar = hbar;
        self
    }

    /// Checks positivity of masses, springs and ħ, then stability of the
    /// quadratic potential.
    pub fn validate(&self) -> Result<()> {
        positive("m1", self.m1)?;
        positive("m2", self.m2)?;
        positive("C1", self.c1)?;
        positive("C2", self.c2)?;
        positive("hbar", self.hbar)?;
        let discriminant = self.stability_discriminant();
        if !(discriminant > 0.0) || !self.c3.is_finite() {
            return Err(Error::UnstablePotential { discriminant });
        }
        Ok(())
    }

    /// `C1·C2 − C3²/4`, i.e. `k²`.
    pub fn stability_discriminant(&self) -> f64 {
        self.c1 * self.c2 - 0.25 * self.c3 * self.c3
    }

    /// `V(x1, x2) = (C1 x1² + C2 x2² + C3 x1 x2) / 2`.
    pub fn potential(&self, x1: f64, x2: f64) -> f64 {
        0.5 * (self.c1 * x1 * x1 + self.c2 * x2 * x2 + self.c3 * x1 * x2)
    }

    /// Geometric-mean mass `sqrt(m1 m2)`.
    pub fn mean_mass(&self) -> f64 {
        (self.m1 * self.m2).sqrt()
    }

    /// Both branches `e^{±2η}` as returned by the square-root formula, the
    /// stiff branch first. Their product is one up to rounding.
    pub fn mode_stiffness_ratios(&self) -> Result<(f64, f64)> {
        self.validate()?;
        let mu2 = (self.m1 / self.m2).sqrt();
        let a = self.c1 / mu2;
        let b = mu2 * self.c2;
        let sum = a + b;
        let root = ((a - b) * (a - b) + self.c3 * self.c3).sqrt();
        let k = self.stability_discriminant().sqrt();
        Ok(((sum + root) / (2.0 * k), (sum - root) / (2.0 * k)))
    }
}

/// Parameters of the decoupled picture.
///
/// `eta ≥ 0` and `theta ∈ [0, 2π)` when produced by [`derive_decoupled`];
/// [`from_decoupled`] accepts any real `eta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecoupledParams {
    pub mu: f64,
    pub theta: f64,
    pub eta: f64,
    pub k: f64,
    pub m: f64,
    pub omega: f64,
    pub e0: f64,
    pub hbar: f64,
}

impl DecoupledParams {
    /// `(cos(θ/2), sin(θ/2))`.
    pub fn half_angle(&self) -> (f64, f64) {
        let (s, c) = (0.5 * self.theta).sin_cos();
        (c, s)
    }

    /// Normal-mode frequencies `(ω e^η, ω e^{−η})`.
    pub fn mode_frequencies(&self) -> (f64, f64) {
        (self.omega * self.eta.exp(), self.omega * (-self.eta).exp())
    }

    /// Original masses `(m μ², m / μ²)`.
    pub fn masses(&self) -> (f64, f64) {
        let mu2 = self.mu * self.mu;
        (self.m * mu2, self.m / mu2)
    }

    /// Normal coordinates `(X1, X2)` of a configuration `(x1, x2)`.
    pub fn to_normal(&self, x1: f64, x2: f64) -> (f64, f64) {
        let (c, s) = self.half_angle();
        (
            self.mu * c * x1 - s * x2 / self.mu,
            self.mu * s * x1 + c * x2 / self.mu,
        )
    }

    /// Inverse of [`Self::to_normal`].
    pub fn from_normal(&self, big1: f64, big2: f64) -> (f64, f64) {
        let (c, s) = self.half_angle();
        ((c * big1 + s * big2) / self.mu, self.mu * (-s * big1 + c * big2))
    }

    /// Spring and coupling constants that reproduce this decoupled system.
    pub fn couplings(&self) -> OscillatorParams {
        let (c, s) = self.half_angle();
        let stiff = self.k * (2.0 * self.eta).exp();
        let soft = self.k * (-2.0 * self.eta).exp();
        let mu2 = self.mu * self.mu;
        let (m1, m2) = self.masses();
        OscillatorParams {
            m1,
            m2,
            c1: mu2 * (c * c * stiff + s * s * soft),
            c2: (s * s * stiff + c * c * soft) / mu2,
            c3: 2.0 * c * s * (soft - stiff),
            hbar: self.hbar,
        }
    }

    /// Potential energy evaluated through the normal modes.
    pub fn potential(&self, x1: f64, x2: f64) -> f64 {
        let (big1, big2) = self.to_normal(x1, x2);
        0.5 * self.k * ((2.0 * self.eta).exp() * big1 * big1 + (-2.0 * self.eta).exp() * big2 * big2)
    }

    /// `mω/ħ`, the inverse squared oscillator length.
    pub fn inverse_length_sq(&self) -> f64 {
        self.m * self.omega / self.hbar
    }
}

/// Validates `params` (see [`OscillatorParams::validate`]).
pub fn validate(params: &OscillatorParams) -> Result<()> {
    params.validate()
}

/// Normal-mode parameters of a coupled pair.
///
/// The stiff mode `k e^{2η}` (η ≥ 0) is carried by `X1`; θ is chosen on the
/// branch of `tan θ = C3 / (μ²C2 − C1/μ²)` that makes that assignment hold,
/// so [`DecoupledParams::couplings`] reproduces the input.
pub fn derive_decoupled(params: &OscillatorParams) -> Result<DecoupledParams> {
    let (stiff, soft) = params.mode_stiffness_ratios()?;
    debug_assert!((stiff * soft - 1.0).abs() < 1e-8 || soft < 1e-6);

    let mu = (params.m1 / params.m2).powf(0.25);
    let mu2 = mu * mu;
    let theta = normalize_angle((-params.c3).atan2(params.c1 / mu2 - mu2 * params.c2));
    let eta = 0.5 * stiff.ln();
    let k = params.stability_discriminant().sqrt();
    let m = params.mean_mass();
    let omega = (k / m).sqrt();
    Ok(DecoupledParams {
        mu,
        theta,
        eta,
        k,
        m,
        omega,
        e0: params.hbar * omega * eta.cosh(),
        hbar: params.hbar,
    })
}

/// Decoupled parameters in the dimensionless units ħ = m = ω = k = μ = 1,
/// where β stands for ħωβ.
pub fn from_decoupled(eta: f64, theta: f64) -> DecoupledParams {
    DecoupledParams {
        mu: 1.0,
        theta,
        eta,
        k: 1.0,
        m: 1.0,
        omega: 1.0,
        e0: eta.cosh(),
        hbar: 1.0,
    }
}

fn normalize_angle(theta: f64) -> f64 {
    // `+ 0.0` folds -0.0 into 0.0
    let t = theta.rem_euclid(TAU) + 0.0;
    if t >= TAU || (TAU - t) < 4.0 * f64::EPSILON * PI {
        0.0
    } else {
        t
    }
}
