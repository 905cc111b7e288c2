//! Exact algebra of real Gaussian kernels `K(x) = e^{log_prefactor} · exp(−xᵀ Q x)`.
//!
//! Marginals are Schur complements, full integrals are `π^{n/2}/sqrt(det Q)`.
//! These give a route to normalizations, reduced densities and traces that
//! does not pass through any printed closed form.

use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-14;
const PIVOT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct QuadKernel {
    log_prefactor: f64,
    quad: DMatrix<f64>,
}

impl QuadKernel {
    /// Builds a kernel, checking that `quad` is square and symmetric.
    ///
    /// Positive definiteness is not required here; it is checked by the
    /// operations that integrate.
    pub fn new(log_prefactor: f64, quad: DMatrix<f64>) -> Result<Self> {
        if !quad.is_square() || quad.nrows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "quadratic form must be square and non-empty, got {}x{}",
                quad.nrows(),
                quad.ncols()
            )));
        }
        let scale = quad.amax().max(1.0);
        let n = quad.nrows();
        for i in 0..n {
            for j in (i + 1)..n {
                let gap = (quad[(i, j)] - quad[(j, i)]).abs();
                if gap > SYMMETRY_TOL * scale {
                    return Err(Error::NotSymmetric { row: i, col: j, gap });
                }
            }
        }
        Ok(Self { log_prefactor, quad })
    }

    /// Builds a kernel from row-major entries.
    pub fn from_rows(log_prefactor: f64, dim: usize, entries: &[f64]) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {dim}x{dim} form",
                entries.len()
            )));
        }
        Self::new(log_prefactor, DMatrix::from_row_slice(dim, dim, entries))
    }

    pub fn dim(&self) -> usize {
        self.quad.nrows()
    }

    pub fn log_prefactor(&self) -> f64 {
        self.log_prefactor
    }

    pub fn prefactor(&self) -> f64 {
        self.log_prefactor.exp()
    }

    pub fn quad(&self) -> &DMatrix<f64> {
        &self.quad
    }

    /// Same exponent, prefactor multiplied by `e^{delta}`.
    pub fn scaled(&self, log_delta: f64) -> Self {
        Self {
            log_prefactor: self.log_prefactor + log_delta,
            quad: self.quad.clone(),
        }
    }

    /// Pointwise product `K(x) · L(x[placement[0]], x[placement[1]], ...)`.
    pub fn multiply(&self, other: &QuadKernel, placement: &[usize]) -> Result<QuadKernel> {
        if placement.len() != other.dim() || placement.iter().any(|&p| p >= self.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "placement {placement:?} does not embed a {}-variable kernel into {} variables",
                other.dim(),
                self.dim()
            )));
        }
        let mut quad = self.quad.clone();
        for (i, &pi) in placement.iter().enumerate() {
            for (j, &pj) in placement.iter().enumerate() {
                quad[(pi, pj)] += other.quad[(i, j)];
            }
        }
        Ok(QuadKernel {
            log_prefactor: self.log_prefactor + other.log_prefactor,
            quad,
        })
    }

    /// `K(x)`.
    pub fn evaluate(&self, x: &[f64]) -> f64 {
        self.log_evaluate(x).exp()
    }

    /// `ln K(x)`.
    pub fn log_evaluate(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.dim(), "point dimension");
        let n = self.dim();
        let mut form = 0.0;
        for i in 0..n {
            let mut row = 0.0;
            for j in 0..n {
                row += self.quad[(i, j)] * x[j];
            }
            form += x[i] * row;
        }
        self.log_prefactor - form
    }

    /// Log-determinant of `Q` via Cholesky; fails unless every pivot exceeds
    /// `1e-12` relative to the largest diagonal entry.
    pub fn log_det(&self) -> Result<f64> {
        let n = self.dim();
        let scale = (0..n).map(|i| self.quad[(i, i)].abs()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
        let mut l = DMatrix::<f64>::zeros(n, n);
        let mut log_det = 0.0;
        for j in 0..n {
            let mut pivot = self.quad[(j, j)];
            for k in 0..j {
                pivot -= l[(j, k)] * l[(j, k)];
            }
            if !(pivot > PIVOT_TOL * scale) {
                return Err(Error::NotPositiveDefinite { row: j, pivot });
            }
            let ljj = pivot.sqrt();
            l[(j, j)] = ljj;
            log_det += 2.0 * ljj.ln();
            for i in (j + 1)..n {
                let mut v = self.quad[(i, j)];
                for k in 0..j {
                    v -= l[(i, k)] * l[(j, k)];
                }
                l[(i, j)] = v / ljj;
            }
        }
        Ok(log_det)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.log_det().is_ok()
    }

    /// `ln ∫ K(x) dⁿx`.
    pub fn log_integrate_all(&self) -> Result<f64> {
        let log_det = self.log_det()?;
        Ok(self.log_prefactor + 0.5 * self.dim() as f64 * PI.ln() - 0.5 * log_det)
    }

    /// `∫ K(x) dⁿx = prefactor · π^{n/2} / sqrt(det Q)`.
    pub fn integrate_all(&self) -> Result<f64> {
        self.log_integrate_all().map(f64::exp)
    }

    /// Integrates out variable `index` exactly.
    ///
    /// The remaining form is the Schur complement of `Q[index][index]`, and
    /// the prefactor gains `sqrt(π / Q[index][index])`. The result may be
    /// indefinite.
    pub fn marginalize(&self, index: usize) -> Result<QuadKernel> {
        let n = self.dim();
        if index >= n {
            return Err(Error::DimensionMismatch(format!("index {index} out of range for dim {n}")));
        }
        if n == 1 {
            return Err(Error::DimensionMismatch("cannot marginalize a 1-dimensional kernel".into()));
        }
        let pivot = self.quad[(index, index)];
        if !(pivot > 0.0) {
            return Err(Error::NonIntegrableDirection {
                index,
                coefficient: pivot,
            });
        }
        let keep: Vec<usize> = (0..n).filter(|&i| i != index).collect();
        let quad = DMatrix::from_fn(n - 1, n - 1, |r, c| {
            let (i, j) = (keep[r], keep[c]);
            self.quad[(i, j)] - self.quad[(i, index)] * self.quad[(index, j)] / pivot
        });
        // symmetrize away rounding in the rank-one update
        let quad = (&quad + quad.transpose()) * 0.5;
        Ok(QuadKernel {
            log_prefactor: self.log_prefactor + 0.5 * (PI / pivot).ln(),
            quad,
        })
    }

    /// For a two-point kernel `K(x, x′)`, the kernel `(x, x′) ↦ K(x′, x)`.
    pub fn transposed_arguments(&self) -> Result<QuadKernel> {
        if self.dim() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "argument swap needs a 2-variable kernel, got {}",
                self.dim()
            )));
        }
        let q = &self.quad;
        Ok(QuadKernel {
            log_prefactor: self.log_prefactor,
            quad: DMatrix::from_row_slice(2, 2, &[q[(1, 1)], q[(1, 0)], q[(0, 1)], q[(0, 0)]]),
        })
    }

    /// For a two-point kernel, the one-variable kernel `x ↦ K(x, x)`.
    pub fn diagonal(&self) -> Result<QuadKernel> {
        if self.dim() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "diagonal needs a 2-variable kernel, got {}",
                self.dim()
            )));
        }
        let q = &self.quad;
        let coefficient = q[(0, 0)] + q[(1, 1)] + q[(0, 1)] + q[(1, 0)];
        QuadKernel::from_rows(self.log_prefactor, 1, &[coefficient])
    }

    /// `∫ K(x, x) dx` for a two-point kernel.
    pub fn trace(&self) -> Result<f64> {
        self.diagonal()?.integrate_all()
    }
}

/// `∫∫ A(x, x′) B(x′, x) dx dx′` for two-point kernels.
pub fn trace_product(a: &QuadKernel, b: &QuadKernel) -> Result<f64> {
    if a.dim() != 2 || b.dim() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "trace_product needs 2-variable kernels, got {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    let b_swapped = b.transposed_arguments()?;
    let combined = QuadKernel {
        log_prefactor: a.log_prefactor + b.log_prefactor,
        quad: &a.quad + &b_swapped.quad,
    };
    combined.integrate_all()
}
