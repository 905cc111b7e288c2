use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{name} must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },

    #[error("unstable potential: C1*C2 - C3^2/4 = {discriminant} must be positive")]
    UnstablePotential { discriminant: f64 },

    #[error("inverse temperature must be positive, got {0}")]
    NonPositiveBeta(f64),

    #[error("quadratic form is not positive definite (pivot {pivot} at row {row})")]
    NotPositiveDefinite { row: usize, pivot: f64 },

    #[error("cannot integrate over variable {index}: diagonal coefficient {coefficient} is not positive")]
    NonIntegrableDirection { index: usize, coefficient: f64 },

    #[error("kernel dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("quadratic form is not symmetric: |q[{row}][{col}] - q[{col}][{row}]| = {gap}")]
    NotSymmetric { row: usize, col: usize, gap: f64 },

    #[error("degenerate Gaussian kernel: {0}")]
    DegenerateKernel(String),

    #[error("{what} = {value} is outside [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid under-resolved: spacing {spacing} exceeds {limit} (narrowest width {width})")]
    UnderResolvedGrid { spacing: f64, limit: f64, width: f64 },

    #[error("imaginary-time range must satisfy 0 < start < end, got start={start}, end={end}")]
    NonMonotoneBeta { start: f64, end: f64 },

    #[error("invalid step count {steps}: need at least {min}")]
    TooFewSteps { steps: usize, min: usize },

    #[error("invalid sweep spec: {0}")]
    InvalidSpec(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub(crate) fn positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveParameter { name, value })
    }
}

pub(crate) fn positive_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveBeta(beta))
    }
}
