use super::{mode_widths, Grid2D};
use crate::error::{Error, Result};
use crate::model::DecoupledParams;
use crate::thermal;

/// Step of the spatial second-difference stencil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpatialStep {
    /// A fixed fraction of the narrowest thermal width.
    WidthFraction(f64),
    /// The grid spacing itself; used to measure the convergence order.
    GridSpacing,
}

const BETA_STEP: f64 = 1e-4;
const MIN_BETA: f64 = 0.1;

/// `max |(Ĥ − E₀)ψ + ∂ψ/∂β| / |ψ|` with a step of `10⁻³` narrowest widths.
pub fn schrodinger_residual(dp: &DecoupledParams, beta: f64, grid: &Grid2D) -> Result<f64> {
    schrodinger_residual_with(dp, beta, grid, SpatialStep::WidthFraction(1e-3))
}

/// Residual of the imaginary-time Schrödinger equation for the closed-form
/// `ψ(·; β)`.
///
/// The Hamiltonian is rebuilt from the spring constants of `dp`; second
/// derivatives in `x1`, `x2` use a three-point stencil and `∂/∂β` a
/// five-point stencil with `Δβ = 10⁻⁴`. The maximum is taken over grid nodes
/// lying within two widths of each normal mode.
pub fn schrodinger_residual_with(
    dp: &DecoupledParams,
    beta: f64,
    grid: &Grid2D,
    step: SpatialStep,
) -> Result<f64> {
    if !(beta > MIN_BETA) {
        return Err(Error::OutOfRange {
            what: "beta",
            value: beta,
            min: MIN_BETA,
            max: f64::INFINITY,
        });
    }
    let resolved = grid.resolve(dp, beta)?;
    resolved.check_resolution()?;
    let h = match step {
        SpatialStep::WidthFraction(fraction) => fraction * resolved.narrowest,
        SpatialStep::GridSpacing => resolved.spacing,
    };

    let physical = dp.couplings();
    let (m1, m2) = (physical.m1, physical.m2);
    let hbar2 = dp.hbar * dp.hbar;
    let (sigma1, sigma2) = mode_widths(dp, beta);

    let kernels = [-2.0, -1.0, 0.0, 1.0, 2.0]
        .iter()
        .map(|k| thermal::wavefunction_coeffs(dp, beta + k * BETA_STEP).map(|wc| wc.kernel()))
        .collect::<Result<Vec<_>>>()?;
    let at = |x1: f64, x2: f64| kernels[2].evaluate(&[x1, x2]);

    let coords = resolved.coords();
    let mut worst: f64 = 0.0;
    for &x1 in &coords {
        for &x2 in &coords {
            let (big1, big2) = dp.to_normal(x1, x2);
            if big1.abs() > 2.0 * sigma1 || big2.abs() > 2.0 * sigma2 {
                continue;
            }
            let psi = at(x1, x2);
            let d11 = (at(x1 + h, x2) - 2.0 * psi + at(x1 - h, x2)) / (h * h);
            let d22 = (at(x1, x2 + h) - 2.0 * psi + at(x1, x2 - h)) / (h * h);
            let kinetic = -0.5 * hbar2 * (d11 / m1 + d22 / m2);
            let p = |k: usize| kernels[k].evaluate(&[x1, x2]);
            let d_beta = (-p(4) + 8.0 * p(3) - 8.0 * p(1) + p(0)) / (12.0 * BETA_STEP);
            let residual = kinetic + (physical.potential(x1, x2) - dp.e0) * psi + d_beta;
            worst = worst.max((residual / psi).abs());
        }
    }
    Ok(worst)
}
