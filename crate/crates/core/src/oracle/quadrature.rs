use rayon::prelude::*;

use super::{Field2D, Grid2D};
use crate::error::Result;
use crate::model::DecoupledParams;
use crate::thermal;

/// Quadrature purity together with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraturePurity {
    pub value: f64,
    /// `∫ ρ_red(x, x) dx` after normalization.
    pub trace: f64,
    /// Heuristic truncation plus aliasing bound for the trapezoid sums.
    pub estimated_error: f64,
    pub spacing: f64,
}

/// Purity of the reduced state of `ψ(·; β)` by trapezoid quadrature.
///
/// `ψ` is sampled on the grid, `ρ_red(x1, x1′) = ∫ψ(x1, x2)ψ(x1′, x2)dx2`
/// is divided by `∫∫|ψ|²`, and `∫∫ρ_red(x, x′)ρ_red(x′, x)` is summed.
pub fn purity_quadrature(dp: &DecoupledParams, beta: f64, grid: &Grid2D) -> Result<QuadraturePurity> {
    let resolved = grid.resolve(dp, beta)?;
    resolved.check_resolution()?;
    let kernel = thermal::wavefunction_coeffs(dp, beta)?.kernel();
    let psi = Field2D::sample(resolved, |x1, x2| kernel.evaluate(&[x1, x2]));

    let n = resolved.n;
    let w = resolved.weights();
    let rows: Vec<&[f64]> = psi.values.chunks(n).collect();

    // unnormalized ρ_red, row by row
    let rho: Vec<Vec<f64>> = rows
        .par_iter()
        .map(|ri| {
            rows.iter()
                .map(|rk| ri.iter().zip(rk.iter()).zip(&w).map(|((a, b), wj)| wj * a * b).sum())
                .collect()
        })
        .collect();

    let norm: f64 = (0..n).map(|i| w[i] * rho[i][i]).sum();
    let trace: f64 = (0..n).map(|i| w[i] * rho[i][i] / norm).sum();
    let value: f64 = (0..n)
        .into_par_iter()
        .map(|i| (0..n).map(|k| w[i] * w[k] * rho[i][k] * rho[k][i]).sum::<f64>())
        .sum::<f64>()
        / (norm * norm);

    let ratio = resolved.narrowest / resolved.spacing;
    let aliasing = (-std::f64::consts::PI.powi(2) * ratio * ratio).exp();
    let truncation = (-grid.half_extent().powi(2)).exp();
    Ok(QuadraturePurity {
        value,
        trace,
        estimated_error: 4.0 * (aliasing + truncation) + 1e-14,
        spacing: resolved.spacing,
    })
}
