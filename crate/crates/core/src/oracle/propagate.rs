use std::f64::consts::TAU;
use std::sync::Arc;

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use super::{Field2D, Grid2D, ResolvedGrid};
use crate::error::{Error, Result};
use crate::model::DecoupledParams;
use crate::thermal;

/// `ε/2` for the default regularizer.
pub const DEFAULT_BETA_START: f64 = 0.5 * thermal::DEFAULT_REGULARIZER;

pub const MIN_STEPS: usize = 100;

/// Strang-split propagator for `∂ψ/∂β = −(Ĥ − E₀)ψ` on a periodic grid.
///
/// Each step applies `e^{−Δβ(V−E₀)/2} · e^{−ΔβT} · e^{−Δβ(V−E₀)/2}` with the
/// kinetic factor applied in Fourier space.
pub struct ImaginaryTimePropagator {
    grid: ResolvedGrid,
    psi: Vec<Complex64>,
    half_potential: Vec<f64>,
    /// Kinetic factor, stored in transposed (k2-major) layout.
    kinetic: Vec<f64>,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
    scratch: Vec<Complex64>,
    beta: f64,
    dbeta: f64,
    steps_left: usize,
}

impl ImaginaryTimePropagator {
    /// Samples the regularized starting wavefunction at `beta_start = ε/2`
    /// on `grid` (resolved at `beta_end`) and prepares `steps` equal steps.
    pub fn new(
        dp: &DecoupledParams,
        grid: &Grid2D,
        beta_start: f64,
        beta_end: f64,
        steps: usize,
    ) -> Result<Self> {
        if !(beta_start > 0.0 && beta_end > beta_start && beta_end.is_finite()) {
            return Err(Error::NonMonotoneBeta {
                start: beta_start,
                end: beta_end,
            });
        }
        if steps < MIN_STEPS {
            return Err(Error::TooFewSteps { steps, min: MIN_STEPS });
        }
        let resolved = grid.resolve(dp, beta_end)?;
        resolved.check_resolution()?;
        let n = resolved.n;
        let dbeta = (beta_end - beta_start) / steps as f64;

        let initial = thermal::initial_wavefunction_kernel(dp, 2.0 * beta_start)?;
        let psi = Field2D::sample(resolved, |x1, x2| initial.evaluate(&[x1, x2]))
            .values
            .into_iter()
            .map(|v| Complex64::new(v, 0.0))
            .collect();

        let physical = dp.couplings();
        let half_potential = Field2D::sample(resolved, |x1, x2| {
            (-0.5 * dbeta * (physical.potential(x1, x2) - dp.e0)).exp()
        })
        .values;

        let wave_numbers: Vec<f64> = (0..n)
            .map(|i| {
                let shifted = if i <= n / 2 { i as f64 } else { i as f64 - n as f64 };
                TAU * shifted / (n as f64 * resolved.spacing)
            })
            .collect();
        let hbar2 = dp.hbar * dp.hbar;
        let mut kinetic = Vec::with_capacity(n * n);
        for &k2 in &wave_numbers {
            for &k1 in &wave_numbers {
                let energy = 0.5 * hbar2 * (k1 * k1 / physical.m1 + k2 * k2 / physical.m2);
                kinetic.push((-dbeta * energy).exp() / (n * n) as f64);
            }
        }

        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(n);
        let inverse = planner.plan_fft_inverse(n);
        let scratch_len = forward
            .get_inplace_scratch_len()
            .max(inverse.get_inplace_scratch_len());
        Ok(Self {
            grid: resolved,
            psi,
            half_potential,
            kinetic,
            forward,
            inverse,
            scratch: vec![Complex64::default(); scratch_len],
            beta: beta_start,
            dbeta,
            steps_left: steps,
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn steps_left(&self) -> usize {
        self.steps_left
    }

    pub fn grid(&self) -> &ResolvedGrid {
        &self.grid
    }

    /// Advances one step; returns `false` once the end is reached.
    pub fn step(&mut self) -> bool {
        if self.steps_left == 0 {
            return false;
        }
        let n = self.grid.n;
        for (v, f) in self.psi.iter_mut().zip(&self.half_potential) {
            *v *= f;
        }
        self.forward.process_with_scratch(&mut self.psi, &mut self.scratch);
        transpose(&mut self.psi, n);
        self.forward.process_with_scratch(&mut self.psi, &mut self.scratch);
        for (v, f) in self.psi.iter_mut().zip(&self.kinetic) {
            *v *= f;
        }
        self.inverse.process_with_scratch(&mut self.psi, &mut self.scratch);
        transpose(&mut self.psi, n);
        self.inverse.process_with_scratch(&mut self.psi, &mut self.scratch);
        for (v, f) in self.psi.iter_mut().zip(&self.half_potential) {
            *v *= f;
        }
        self.steps_left -= 1;
        self.beta += self.dbeta;
        true
    }

    pub fn run(&mut self) {
        while self.step() {}
    }

    pub fn field(&self) -> Field2D {
        Field2D {
            grid: self.grid,
            values: self.psi.iter().map(|c| c.re).collect(),
        }
    }
}

fn transpose(data: &mut [Complex64], n: usize) {
    for i in 0..n {
        for j in (i + 1)..n {
            data.swap(i * n + j, j * n + i);
        }
    }
}

/// Evolves the regularized starting wavefunction from `beta_start` to
/// `beta_end` in `steps` split-operator steps.
pub fn imaginary_time_evolve(
    dp: &DecoupledParams,
    grid: &Grid2D,
    beta_start: f64,
    beta_end: f64,
    steps: usize,
) -> Result<Field2D> {
    let mut propagator = ImaginaryTimePropagator::new(dp, grid, beta_start, beta_end, steps)?;
    propagator.run();
    let field = propagator.field();
    debug_assert!(field.is_finite());
    Ok(field)
}
