//! Grid-based numerical checks of the closed forms.
//!
//! Nothing here reuses the closed-form coefficient algebra: the purity is
//! obtained by trapezoid quadrature of a sampled wavefunction, the
//! Schrödinger residual by finite differences against a Hamiltonian rebuilt
//! from the spring constants, and the imaginary-time evolution by a
//! split-operator scheme with a spectral kinetic step.

mod propagate;
mod quadrature;
mod residual;

pub use propagate::{imaginary_time_evolve, ImaginaryTimePropagator, DEFAULT_BETA_START, MIN_STEPS};
pub use quadrature::{purity_quadrature, QuadraturePurity};
pub use residual::{schrodinger_residual, schrodinger_residual_with, SpatialStep};

use crate::error::{positive_beta, Error, Result};
use crate::model::DecoupledParams;

/// Smallest legal number of nodes per axis.
pub const MIN_NODES: usize = 65;

/// Smallest half-extent, in widths of the widest mode.
pub const MIN_HALF_EXTENT: f64 = 6.0;

/// Square grid centred on the origin.
///
/// `half_extent` is measured in thermal widths of the widest mode at the
/// evaluation β (see [`thermal_width`]), so the same `Grid2D` adapts to
/// every parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D {
    half_extent: f64,
    n: usize,
}

impl Grid2D {
    pub fn new(half_extent: f64, n: usize) -> Result<Self> {
        if n < MIN_NODES || n % 2 == 0 {
            return Err(Error::InvalidGrid(format!(
                "need an odd node count >= {MIN_NODES}, got {n}"
            )));
        }
        if !(half_extent >= MIN_HALF_EXTENT) || !half_extent.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "half extent must be at least {MIN_HALF_EXTENT} widths, got {half_extent}"
            )));
        }
        Ok(Self { half_extent, n })
    }

    pub fn half_extent(&self) -> f64 {
        self.half_extent
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Spacing in width units.
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_extent / (self.n - 1) as f64
    }

    /// Physical grid for `dp` at inverse temperature `beta`.
    pub fn resolve(&self, dp: &DecoupledParams, beta: f64) -> Result<ResolvedGrid> {
        positive_beta(beta)?;
        let widest = thermal_width(dp, beta);
        let narrowest = narrowest_width(dp, beta);
        let half_extent = self.half_extent * widest;
        Ok(ResolvedGrid {
            n: self.n,
            half_extent,
            spacing: 2.0 * half_extent / (self.n - 1) as f64,
            widest,
            narrowest,
        })
    }
}

/// A [`Grid2D`] in physical units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolvedGrid {
    pub n: usize,
    pub half_extent: f64,
    pub spacing: f64,
    pub widest: f64,
    pub narrowest: f64,
}

impl ResolvedGrid {
    pub fn coord(&self, i: usize) -> f64 {
        -self.half_extent + i as f64 * self.spacing
    }

    pub fn coords(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.coord(i)).collect()
    }

    /// Index of the origin.
    pub fn center(&self) -> usize {
        self.n / 2
    }

    /// Trapezoid weights along one axis.
    pub(crate) fn weights(&self) -> Vec<f64> {
        let mut w = vec![self.spacing; self.n];
        w[0] *= 0.5;
        w[self.n - 1] *= 0.5;
        w
    }

    /// Requires at least 8 nodes across the ±2σ window of the narrowest
    /// Gaussian, i.e. `spacing ≤ 4σ/7`.
    pub fn check_resolution(&self) -> Result<()> {
        let limit = 4.0 * self.narrowest / 7.0;
        if self.spacing > limit * (1.0 + 1e-12) {
            return Err(Error::UnderResolvedGrid {
                spacing: self.spacing,
                limit,
                width: self.narrowest,
            });
        }
        Ok(())
    }
}

/// Samples of a real function on a [`ResolvedGrid`], row-major with the
/// first index along `x1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Field2D {
    pub grid: ResolvedGrid,
    pub values: Vec<f64>,
}

impl Field2D {
    pub fn sample(grid: ResolvedGrid, f: impl Fn(f64, f64) -> f64) -> Self {
        let coords = grid.coords();
        let values = coords
            .iter()
            .flat_map(|&x1| coords.iter().map(move |&x2| (x1, x2)))
            .map(|(x1, x2)| f(x1, x2))
            .collect();
        Self { grid, values }
    }

    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.grid.n + j]
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// `∫∫ f² dx1 dx2` by the trapezoid rule.
    pub fn norm_sq(&self) -> f64 {
        let w = self.grid.weights();
        let n = self.grid.n;
        (0..n)
            .map(|i| (0..n).map(|j| w[i] * w[j] * self.at(i, j).powi(2)).sum::<f64>())
            .sum()
    }

    /// Rescaled to unit [`Self::norm_sq`] with a non-negative value at the
    /// origin.
    pub fn normalized(&self) -> Self {
        let c = self.grid.center();
        let sign = if self.at(c, c) < 0.0 { -1.0 } else { 1.0 };
        let scale = sign / self.norm_sq().sqrt();
        Self {
            grid: self.grid,
            values: self.values.iter().map(|v| v * scale).collect(),
        }
    }
}

fn mode_width(dp: &DecoupledParams, beta: f64, log_ratio: f64) -> f64 {
    let freq = dp.hbar * dp.omega * log_ratio.exp();
    (dp.hbar / (dp.m * dp.omega * log_ratio.exp() * (freq * beta).tanh())).sqrt()
}

/// Width `sqrt(ħ / (mω e^{−|η|} tanh(ħωβ e^{−|η|})))` of the softest mode of
/// `ψ(·; β)`, stretched by the larger of `μ`, `1/μ`.
pub fn thermal_width(dp: &DecoupledParams, beta: f64) -> f64 {
    mode_width(dp, beta, -dp.eta.abs()) * dp.mu.max(1.0 / dp.mu)
}

/// Width of the stiffest mode, shrunk by the smaller of `μ`, `1/μ`.
pub fn narrowest_width(dp: &DecoupledParams, beta: f64) -> f64 {
    mode_width(dp, beta, dp.eta.abs()) * dp.mu.min(1.0 / dp.mu)
}

/// Per-mode widths `(σ₁, σ₂)` of `ψ(·; β)` in normal coordinates.
pub(crate) fn mode_widths(dp: &DecoupledParams, beta: f64) -> (f64, f64) {
    (mode_width(dp, beta, dp.eta), mode_width(dp, beta, -dp.eta))
}
