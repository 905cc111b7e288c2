use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use super::run::{SweepMetadata, SweepResult};
use super::spec::{OutputFormat, SweepSpec};
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "eta,theta,beta,purity";

/// Fixed-point decimal with 12 significant digits.
pub fn format_significant(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return format!("{:.11}", 0.0);
    }
    // the exponent of the rounded value, so 9.9999999999996 counts as 1e1
    let sci = format!("{x:.11e}");
    let exponent: i32 = sci.rsplit('e').next().and_then(|e| e.parse().ok()).unwrap_or(0);
    let decimals = (11 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn write_csv<W: Write>(result: &SweepResult, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in &result.rows {
        writeln!(
            out,
            "{},{},{},{}",
            format_significant(r.eta),
            format_significant(r.theta),
            format_significant(r.beta),
            format_significant(r.purity)
        )?;
    }
    out.flush()
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    metadata: &'a SweepMetadata,
    rows: Vec<[f64; 4]>,
}

/// `{"metadata": …, "rows": [[eta, theta, beta, purity], …]}`; floats are
/// written in shortest round-trip form.
pub fn write_json<W: Write>(result: &SweepResult, mut out: W) -> std::io::Result<()> {
    let doc = JsonDocument {
        metadata: &result.metadata,
        rows: result.rows.iter().map(|r| [r.eta, r.theta, r.beta, r.purity]).collect(),
    };
    serde_json::to_writer(&mut out, &doc)?;
    writeln!(out)?;
    out.flush()
}

/// Writes `result` to `spec.output_path` in `spec.output_format`.
pub fn emit(result: &SweepResult, spec: &SweepSpec) -> Result<()> {
    emit_to(result, spec.output_format, &spec.output_path)
}

pub fn emit_to(result: &SweepResult, format: OutputFormat, path: &Path) -> Result<()> {
    let io_error = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let out = BufWriter::new(File::create(path).map_err(io_error)?);
    match format {
        OutputFormat::Csv => write_csv(result, out),
        OutputFormat::Json => write_json(result, out),
    }
    .map_err(io_error)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_significant(1.0), "1.00000000000");
        assert_eq!(format_significant(0.0), "0.00000000000");
        assert_eq!(format_significant(-3.0), "-3.00000000000");
        assert_eq!(format_significant(std::f64::consts::PI), "3.14159265359");
        assert_eq!(format_significant(0.8), "0.800000000000");
        assert_eq!(format_significant(0.00867), "0.00867000000000");
        assert_eq!(format_significant(50.0), "50.0000000000");
        assert_eq!(format_significant(9.99999999999996), "10.0000000000");
        assert_eq!(format_significant(f64::NAN), "NaN");
    }
}
