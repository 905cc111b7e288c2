use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thermopurity::sweep::{self, OutputFormat, Preset, SweepMode, SweepSpec};
use thermopurity::verify::{self, Level};
use thermopurity::Error;

/// Purity sweeps and self-checks for two coupled oscillators, in units
/// where ħ = m = ω = 1 (β stands for ħωβ).
#[derive(Parser)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the purity over a parameter grid.
    Sweep {
        #[arg(long)]
        mode: String,
        /// Fixed parameter, e.g. `beta=1` or `theta=pi/2`; repeatable.
        #[arg(long = "fix", value_name = "K=V")]
        fixed: Vec<String>,
        /// `name:min:max:count`
        #[arg(long)]
        axis1: String,
        #[arg(long)]
        axis2: Option<String>,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the self-check suite.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        level: LevelArg,
    },
    Fig1(FigureArgs),
    Fig2(FigureArgs),
    Fig3(FigureArgs),
    Fig4(FigureArgs),
    Fig5(FigureArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

/// Regenerate a figure dataset from its bundled preset.
#[derive(clap::Args)]
struct FigureArgs {
    #[arg(long)]
    out: PathBuf,
    /// 1-based panel of the figure; defaults to the first.
    #[arg(long)]
    panel: Option<usize>,
}

/// Failure modes mapped onto process exit codes.
enum Failure {
    Error(Error),
    Check,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Self::Error(err)
    }
}

fn sweep_spec(
    mode: &str,
    fixed: &[String],
    axis1: &str,
    axis2: Option<&str>,
    format: &str,
    out: PathBuf,
) -> thermopurity::Result<SweepSpec> {
    let fixed = fixed
        .iter()
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::InvalidSpec(format!("--fix expects K=V, got '{kv}'")))?;
            Ok((k.trim().to_string(), sweep::parse_value(v)?))
        })
        .collect::<thermopurity::Result<_>>()?;
    Ok(SweepSpec {
        mode: mode.parse::<SweepMode>()?,
        fixed,
        axis1: axis1.parse()?,
        axis2: axis2.map(str::parse).transpose()?,
        output_format: format.parse::<OutputFormat>()?,
        output_path: out,
    })
}

/// Runs and writes the sweep; rows outside (0, 1] are kept but fail the run.
fn run_spec(spec: &SweepSpec) -> Result<(), Failure> {
    let result = sweep::run_sweep(spec)?;
    sweep::emit(&result, spec)?;
    if !result.all_in_range() {
        eprintln!(
            "error: {} rows outside (0, 1], listed in metadata",
            result.metadata.out_of_range.len()
        );
        return Err(Failure::Check);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Sweep {
            mode,
            fixed,
            axis1,
            axis2,
            format,
            out,
        } => sweep_spec(&mode, &fixed, &axis1, axis2.as_deref(), &format, out)
            .map_err(Failure::from)
            .and_then(|s| run_spec(&s)),
        Command::Verify { level } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let report = verify::verify(level);
            println!("{report}");
            return if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(3) };
        }
        Command::Fig1(args) => figure("fig1", args),
        Command::Fig2(args) => figure("fig2", args),
        Command::Fig3(args) => figure("fig3", args),
        Command::Fig4(args) => figure("fig4", args),
        Command::Fig5(args) => figure("fig5", args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(3),
        Err(Failure::Error(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(if matches!(err, Error::Io { .. }) { 4 } else { 2 })
        }
    }
}

fn figure(name: &str, args: FigureArgs) -> Result<(), Failure> {
    let preset = Preset::builtin(name)?;
    let panel = args.panel.or(preset.panels.as_ref().map(|_| 1));
    run_spec(&preset.to_spec(panel, args.out)?)
}
