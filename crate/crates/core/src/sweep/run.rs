use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::spec::{Param, SweepMode, SweepSpec};
use crate::error::{Error, Result};
use crate::purity::{purity_closed, purity_high_t, purity_identical};

/// Environment variable capping the worker count (`0` or unset = automatic).
pub const THREADS_ENV: &str = "THERMOPURITY_THREADS";

/// One evaluated point. `beta` is `0` in `high_t` rows, standing for the
/// `β → 0` limit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub eta: f64,
    pub theta: f64,
    pub beta: f64,
    pub purity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepMetadata {
    pub spec: SweepSpec,
    pub code_version: String,
    /// Taken from `SOURCE_DATE_EPOCH` when set so that output stays
    /// reproducible; `None` otherwise.
    pub timestamp: Option<String>,
    pub units: String,
    pub row_count: usize,
    /// Indices of rows whose purity fell outside `(0, 1]` or failed to
    /// evaluate.
    pub out_of_range: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub metadata: SweepMetadata,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// True when every purity lies in `(0, 1]`.
    pub fn all_in_range(&self) -> bool {
        self.metadata.out_of_range.is_empty()
    }
}

fn thread_count() -> Result<usize> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(0),
        Ok(v) if v.trim().is_empty() => Ok(0),
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::InvalidSpec(format!("{THREADS_ENV} must be a non-negative integer, got '{v}'"))
        }),
    }
}

/// Evaluates the purity over the spec's grid, axis1 outer and axis2 inner.
///
/// Points are evaluated in parallel; row order does not depend on the
/// thread count. A point that fails to evaluate becomes a NaN row listed in
/// [`SweepMetadata::out_of_range`] instead of aborting the sweep.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count()?)
        .build()
        .map_err(|e| Error::InvalidSpec(format!("cannot start worker pool: {e}")))?;

    let values1 = spec.axis1.values();
    let values2 = spec.axis2.as_ref().map(|a| a.values());
    let points: Vec<[f64; 3]> = values1
        .iter()
        .flat_map(|&v1| {
            let inner: Vec<Option<f64>> = match &values2 {
                Some(v) => v.iter().copied().map(Some).collect(),
                None => vec![None],
            };
            inner.into_iter().map(move |v2| point(spec, v1, v2))
        })
        .collect();

    let rows: Vec<SweepRow> = pool.install(|| {
        points
            .par_iter()
            .map(|&[eta, theta, beta]| evaluate(spec, eta, theta, beta))
            .collect()
    });
    let out_of_range = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| !(r.purity > 0.0 && r.purity <= 1.0))
        .map(|(i, _)| i)
        .collect();

    Ok(SweepResult {
        metadata: SweepMetadata {
            spec: spec.clone(),
            code_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: std::env::var("SOURCE_DATE_EPOCH").ok(),
            units: "dimensionless: hbar = m = omega = 1, beta stands for hbar*omega*beta".into(),
            row_count: rows.len(),
            out_of_range,
        },
        rows,
    })
}

/// `[eta, theta, beta]` for one grid point.
fn point(spec: &SweepSpec, v1: f64, v2: Option<f64>) -> [f64; 3] {
    let lookup = |param: Param| -> f64 {
        if spec.axis1.param == param {
            return v1;
        }
        if let (Some(axis2), Some(v2)) = (&spec.axis2, v2) {
            if axis2.param == param {
                return v2;
            }
        }
        spec.fixed.get(param.name()).copied().unwrap_or(0.0)
    };
    if spec.is_identical_curve() {
        let (c1, c3) = (spec.fixed["c1"], spec.fixed["c3"]);
        let eta = 0.25 * ((c1 + 0.5 * c3) / (c1 - 0.5 * c3)).ln();
        return [eta, FRAC_PI_2, v1];
    }
    [lookup(Param::Eta), lookup(Param::Theta), lookup(Param::Beta)]
}

fn evaluate(spec: &SweepSpec, eta: f64, theta: f64, beta: f64) -> SweepRow {
    let purity = match spec.mode {
        SweepMode::HighT => Ok(purity_high_t(eta, theta)),
        SweepMode::CurveBeta if spec.is_identical_curve() => {
            let get = |k: &str| spec.fixed.get(k).copied().unwrap_or(1.0);
            purity_identical(get("c1"), get("c3"), get("m1"), get("hbar"), beta)
        }
        _ => purity_closed(eta, theta, beta),
    };
    SweepRow {
        eta,
        theta,
        beta,
        purity: purity.unwrap_or(f64::NAN),
    }
}
