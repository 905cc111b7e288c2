//! Parameter sweeps in the dimensionless units `ħ = m = ω = 1`, where `β`
//! stands for `ħωβ`.
//!
//! A [`SweepSpec`] names a purity surface, the fixed parameters and one or
//! two sampled axes. [`run_sweep`] evaluates it in parallel with a
//! deterministic row order and [`emit`] writes CSV or JSON. The figure
//! presets `fig1`…`fig5` are bundled [`Preset`] files.

mod emit;
mod preset;
mod run;
mod spec;

pub use emit::{emit, emit_to, format_significant, write_csv, write_json, CSV_HEADER};
pub use preset::{builtin_names, Preset};
pub use run::{run_sweep, SweepMetadata, SweepResult, SweepRow, THREADS_ENV};
pub use spec::{parse_value, Axis, OutputFormat, Param, SweepMode, SweepSpec, IDENTICAL_KEYS};
