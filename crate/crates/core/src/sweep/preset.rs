use std::collections::BTreeMap;
use std::path::PathBuf;

use super::spec::{parse_key_values, parse_value, Axis, OutputFormat, Param, SweepMode, SweepSpec};
use crate::error::{Error, Result};

const BUILTIN: [(&str, &str); 5] = [
    ("fig1", include_str!("../../presets/fig1.conf")),
    ("fig2", include_str!("../../presets/fig2.conf")),
    ("fig3", include_str!("../../presets/fig3.conf")),
    ("fig4", include_str!("../../presets/fig4.conf")),
    ("fig5", include_str!("../../presets/fig5.conf")),
];

/// Names of the bundled figure presets.
pub fn builtin_names() -> impl Iterator<Item = &'static str> {
    BUILTIN.iter().map(|(name, _)| *name)
}

/// A named sweep template read from a flat `key = value` file.
///
/// Recognised keys: `name`, `mode`, `axis1`, `axis2`, `format`,
/// `fix.<param>` and `panels = <param>:v1,v2,...`. Panels list alternative
/// values of one fixed parameter; the preset's own `fix.` value is used
/// unless a panel is selected.
#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub name: String,
    pub mode: SweepMode,
    pub fixed: BTreeMap<String, f64>,
    pub axis1: Axis,
    pub axis2: Option<Axis>,
    pub format: OutputFormat,
    pub panels: Option<(Param, Vec<f64>)>,
}

impl Preset {
    pub fn builtin(name: &str) -> Result<Self> {
        let (_, text) = BUILTIN
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::InvalidSpec(format!("no preset named '{name}'")))?;
        Self::parse(text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut mode = None;
        let mut fixed = BTreeMap::new();
        let mut axis1 = None;
        let mut axis2 = None;
        let mut format = OutputFormat::default();
        let mut panels = None;
        for (key, value) in parse_key_values(text)? {
            match key.as_str() {
                "name" => name = Some(value),
                "mode" => mode = Some(value.parse()?),
                "axis1" => axis1 = Some(value.parse()?),
                "axis2" => axis2 = Some(value.parse()?),
                "format" => format = value.parse()?,
                "panels" => panels = Some(parse_panels(&value)?),
                _ => match key.strip_prefix("fix.") {
                    Some(param) => {
                        fixed.insert(param.to_string(), parse_value(&value)?);
                    }
                    None => return Err(Error::InvalidSpec(format!("unknown preset key '{key}'"))),
                },
            }
        }
        let missing = |what: &str| Error::InvalidSpec(format!("preset is missing '{what}'"));
        Ok(Self {
            name: name.ok_or_else(|| missing("name"))?,
            mode: mode.ok_or_else(|| missing("mode"))?,
            fixed,
            axis1: axis1.ok_or_else(|| missing("axis1"))?,
            axis2,
            format,
            panels,
        })
    }

    pub fn panel_count(&self) -> usize {
        self.panels.as_ref().map_or(1, |(_, values)| values.len())
    }

    /// Expands to a spec; `panel` is 1-based. A preset without panels
    /// counts as a single panel.
    pub fn to_spec(&self, panel: Option<usize>, output_path: PathBuf) -> Result<SweepSpec> {
        let mut fixed = self.fixed.clone();
        if let Some(index) = panel.filter(|&i| self.panels.is_some() || i != 1) {
            let (param, values) = self
                .panels
                .as_ref()
                .ok_or_else(|| Error::InvalidSpec(format!("preset {} has no panels", self.name)))?;
            let value = index
                .checked_sub(1)
                .and_then(|i| values.get(i))
                .ok_or_else(|| {
                    Error::InvalidSpec(format!(
                        "panel {index} out of range 1..={} for preset {}",
                        values.len(),
                        self.name
                    ))
                })?;
            fixed.insert(param.name().to_string(), *value);
        }
        let spec = SweepSpec {
            mode: self.mode,
            fixed,
            axis1: self.axis1,
            axis2: self.axis2,
            output_format: self.format,
            output_path,
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_panels(value: &str) -> Result<(Param, Vec<f64>)> {
    let (param, list) = value
        .split_once(':')
        .ok_or_else(|| Error::InvalidSpec(format!("panels '{value}' must look like param:v1,v2")))?;
    let values = list.split(',').map(parse_value).collect::<Result<Vec<_>>>()?;
    Ok((param.parse()?, values))
}
