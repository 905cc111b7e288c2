//! Regenerate the bundled figure datasets into a directory.
//!
//! `cargo run --example figure_sweeps -- out/` writes one CSV per preset panel.

use std::path::PathBuf;

use thermopurity::sweep::{self, Preset};

fn main() -> thermopurity::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir).map_err(|source| thermopurity::Error::Io { path: dir.clone(), source })?;
    for name in sweep::builtin_names() {
        let preset = Preset::builtin(name)?;
        for panel in 1..=preset.panel_count() {
            let path = dir.join(format!("{name}_{panel}.csv"));
            let spec = preset.to_spec(Some(panel), path.clone())?;
            let result = sweep::run_sweep(&spec)?;
            sweep::emit(&result, &spec)?;
            let (lo, hi) = result
                .rows
                .iter()
                .fold((f64::INFINITY, 0.0f64), |(lo, hi), r| (lo.min(r.purity), hi.max(r.purity)));
            println!("{} rows → {}  purity ∈ [{lo:.4}, {hi:.4}]", result.rows.len(), path.display());
        }
    }
    Ok(())
}
