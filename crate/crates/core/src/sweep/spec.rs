use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which purity surface a sweep evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    EtaTheta,
    BetaTheta,
    EtaBeta,
    /// One-dimensional sweep over β, either at fixed (η, θ) or for identical
    /// particles given `c1`, `c3` (and optionally `m1`, `hbar`).
    CurveBeta,
    /// The β → 0 limit over (η, θ).
    HighT,
}

impl SweepMode {
    pub fn name(&self) -> &'static str {
        match self {
            Self::EtaTheta => "eta_theta",
            Self::BetaTheta => "beta_theta",
            Self::EtaBeta => "eta_beta",
            Self::CurveBeta => "curve_beta",
            Self::HighT => "high_t",
        }
    }
}

impl FromStr for SweepMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "eta_theta" => Self::EtaTheta,
            "beta_theta" => Self::BetaTheta,
            "eta_beta" => Self::EtaBeta,
            "curve_beta" => Self::CurveBeta,
            "high_t" => Self::HighT,
            other => return Err(Error::InvalidSpec(format!("unknown mode '{other}'"))),
        })
    }
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Param {
    Eta,
    Theta,
    Beta,
}

impl Param {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Eta => "eta",
            Self::Theta => "theta",
            Self::Beta => "beta",
        }
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "eta" => Ok(Self::Eta),
            "theta" => Ok(Self::Theta),
            "beta" => Ok(Self::Beta),
            other => Err(Error::InvalidSpec(format!(
                "axis name '{other}' is not one of eta, theta, beta"
            ))),
        }
    }
}

/// Evenly spaced samples `min, …, max` of one parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub param: Param,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Axis {
    pub fn values(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.max
                } else {
                    self.min + (self.max - self.min) * i as f64 / last
                }
            })
            .collect()
    }
}

impl FromStr for Axis {
    type Err = Error;

    /// `name:min:max:count`, e.g. `theta:0:2*pi:121`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(Error::InvalidSpec(format!(
                "axis '{s}' must look like name:min:max:count"
            )));
        }
        let count = parts[3]
            .trim()
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("axis count '{}' is not an integer", parts[3])))?;
        Ok(Self {
            param: parts[0].parse()?,
            min: parse_value(parts[1])?,
            max: parse_value(parts[2])?,
            count,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::InvalidSpec(format!("unknown format '{other}'"))),
        }
    }
}

/// Fixed-parameter keys accepted in identical-particle curves.
pub const IDENTICAL_KEYS: [&str; 4] = ["c1", "c3", "m1", "hbar"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub mode: SweepMode,
    pub fixed: BTreeMap<String, f64>,
    pub axis1: Axis,
    pub axis2: Option<Axis>,
    pub output_format: OutputFormat,
    pub output_path: PathBuf,
}

impl SweepSpec {
    pub fn axes(&self) -> impl Iterator<Item = &Axis> {
        std::iter::once(&self.axis1).chain(self.axis2.as_ref())
    }

    pub fn row_count(&self) -> usize {
        self.axes().map(|a| a.count).product()
    }

    /// Identical-particle curve (`curve_beta` with `c1`, `c3` fixed).
    pub fn is_identical_curve(&self) -> bool {
        self.mode == SweepMode::CurveBeta && self.fixed.contains_key("c1")
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidSpec(msg));

        for axis in self.axes() {
            if axis.count < 2 {
                return invalid(format!("axis {} needs count >= 2, got {}", axis.param.name(), axis.count));
            }
            if !(axis.min < axis.max) || !axis.min.is_finite() || !axis.max.is_finite() {
                return invalid(format!(
                    "axis {} needs finite min < max, got {}..{}",
                    axis.param.name(),
                    axis.min,
                    axis.max
                ));
            }
        }
        if let Some(axis2) = &self.axis2 {
            if axis2.param == self.axis1.param {
                return invalid(format!("both axes sweep {}", axis2.param.name()));
            }
        }
        for (key, value) in &self.fixed {
            if !value.is_finite() {
                return invalid(format!("fixed {key} = {value} is not finite"));
            }
            if self.axes().any(|a| a.param.name() == key) {
                return invalid(format!("{key} is both fixed and swept"));
            }
        }

        let mut swept: Vec<Param> = self.axes().map(|a| a.param).collect();
        swept.sort();
        let required_axes: &[Param] = match self.mode {
            SweepMode::EtaTheta | SweepMode::HighT => &[Param::Eta, Param::Theta],
            SweepMode::BetaTheta => &[Param::Theta, Param::Beta],
            SweepMode::EtaBeta => &[Param::Eta, Param::Beta],
            SweepMode::CurveBeta => &[Param::Beta],
        };
        if swept != required_axes {
            let names: Vec<_> = required_axes.iter().map(Param::name).collect();
            return invalid(format!("mode {} sweeps exactly {{{}}}", self.mode, names.join(", ")));
        }

        let keys: Vec<&str> = self.fixed.keys().map(String::as_str).collect();
        let expect = |wanted: &[&str]| -> Result<()> {
            if keys == wanted {
                Ok(())
            } else {
                Err(Error::InvalidSpec(format!(
                    "mode {} needs fixed {{{}}}, got {{{}}}",
                    self.mode,
                    wanted.join(", "),
                    keys.join(", ")
                )))
            }
        };
        match self.mode {
            SweepMode::EtaTheta => expect(&["beta"])?,
            SweepMode::BetaTheta => expect(&["eta"])?,
            SweepMode::EtaBeta => expect(&["theta"])?,
            SweepMode::HighT => expect(&[])?,
            SweepMode::CurveBeta if self.is_identical_curve() => {
                if let Some(k) = keys.iter().find(|k| !IDENTICAL_KEYS.contains(k)) {
                    return invalid(format!("identical-particle curve does not take fixed {k}"));
                }
                if !self.fixed.contains_key("c3") {
                    return invalid("identical-particle curve needs c3".into());
                }
                let c1 = self.fixed["c1"];
                let c3 = self.fixed["c3"];
                for key in ["c1", "m1", "hbar"] {
                    if let Some(&v) = self.fixed.get(key) {
                        if !(v > 0.0) {
                            return invalid(format!("{key} must be positive, got {v}"));
                        }
                    }
                }
                if !(c3.abs() < 2.0 * c1) {
                    return invalid(format!("|c3| = {} must be below 2*c1 = {}", c3.abs(), 2.0 * c1));
                }
            }
            SweepMode::CurveBeta => expect(&["eta", "theta"])?,
        }

        let beta_min = self
            .axes()
            .find(|a| a.param == Param::Beta)
            .map(|a| a.min)
            .or_else(|| self.fixed.get("beta").copied());
        if let Some(b) = beta_min {
            if !(b > 0.0) {
                return invalid(format!("beta must be positive, got {b}"));
            }
        }
        Ok(())
    }
}

/// Parses a number, optionally written with `pi` products/quotients or
/// `ln(...)`: `1.5`, `-pi`, `2*pi`, `pi/8`, `3*pi/4`, `ln(2)`.
pub fn parse_value(s: &str) -> Result<f64> {
    let s = s.trim();
    if let Ok(v) = s.parse::<f64>() {
        return Ok(v);
    }
    let bad = || Error::InvalidSpec(format!("cannot parse value '{s}'"));
    if let Some(rest) = s.strip_prefix('-') {
        return parse_value(rest).map(|v| -v);
    }
    if let Some(arg) = s.strip_prefix("ln(").and_then(|r| r.strip_suffix(')')) {
        let v = parse_value(arg)?;
        return if v > 0.0 { Ok(v.ln()) } else { Err(bad()) };
    }
    let product = |part: &str| -> Result<f64> {
        part.split('*')
            .map(|factor| match factor.trim() {
                "pi" => Ok(std::f64::consts::PI),
                other => other.parse::<f64>().map_err(|_| bad()),
            })
            .product()
    };
    match s.split_once('/') {
        Some((num, den)) => Ok(product(num)? / product(den)?),
        None => product(s),
    }
}

/// Parses `key = value` lines; `#` starts a comment.
pub(crate) fn parse_key_values(text: &str) -> Result<Vec<(String, String)>> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty())
        .map(|(i, line)| {
            line.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Error::InvalidSpec(format!("line {}: expected key = value", i + 1)))
        })
        .collect()
}
