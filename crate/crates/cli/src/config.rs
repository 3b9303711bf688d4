//! Run configuration: a TOML file with `[material]`, `[load]` and one section
//! per command, plus `section.key=value` overrides from the command line.
//!
//! ```toml
//! [material]
//! kind = "mooney-rivlin"
//! c1 = 1.0
//! c2 = 1.0
//!
//! [load]
//! k_v = [0.0, 0.5, 1.0]
//! ```

use std::path::Path;

use tensile_domain::{activation_parameter, ElectricLoad, MaterialModel};
use toml::{Table, Value};

use crate::error::CliError;

#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    table: Table,
}

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

impl RunConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, CliError> {
        let table = text
            .parse::<Table>()
            .map_err(|e| config_err(format!("invalid config: {e}")))?;
        Ok(Self { table })
    }

    pub fn load(path: Option<&Path>, overrides: &[String]) -> Result<Self, CliError> {
        let mut cfg = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| config_err(format!("cannot read {}: {e}", p.display())))?;
                Self::from_toml_str(&text)?
            }
            None => Self::default(),
        };
        for o in overrides {
            cfg.apply_override(o)?;
        }
        Ok(cfg)
    }

    /// Applies `section.key=value`; the value is parsed as a TOML value and
    /// falls back to a bare string.
    pub fn apply_override(&mut self, spec: &str) -> Result<(), CliError> {
        let (path, raw) = spec
            .split_once('=')
            .ok_or_else(|| config_err(format!("override {spec:?} is not section.key=value")))?;
        let (section, key) = path
            .trim()
            .split_once('.')
            .ok_or_else(|| config_err(format!("override key {path:?} is not section.key")))?;
        let value = format!("v = {}", raw.trim())
            .parse::<Table>()
            .ok()
            .and_then(|mut t| t.remove("v"))
            .unwrap_or_else(|| Value::String(raw.trim().to_string()));
        let entry = self
            .table
            .entry(section.to_string())
            .or_insert_with(|| Value::Table(Table::new()));
        match entry {
            Value::Table(t) => {
                t.insert(key.to_string(), value);
                Ok(())
            }
            _ => Err(config_err(format!("[{section}] is not a section"))),
        }
    }

    pub fn section(&self, name: &str) -> Option<&Table> {
        self.table.get(name).and_then(Value::as_table)
    }

    fn require_section(&self, name: &str) -> Result<&Table, CliError> {
        self.section(name)
            .ok_or_else(|| config_err(format!("missing [{name}] section")))
    }

    pub fn material(&self) -> Result<MaterialModel, CliError> {
        let sec = self.require_section("material")?;
        let kind = get_str(sec, "material", "kind")?
            .ok_or_else(|| config_err("[material] needs a kind"))?;
        let model = match kind {
            "mooney-rivlin" => {
                let c1 = require_number(sec, "material", "c1")?;
                let c2 = require_number(sec, "material", "c2")?;
                MaterialModel::mooney_rivlin(c1, c2)
            }
            "neo-hookean" => {
                let mu = match get_number(sec, "material", "mu")? {
                    Some(mu) => mu,
                    None => 2.0 * require_number(sec, "material", "c1")?,
                };
                MaterialModel::neo_hookean(mu)
            }
            other => {
                return Err(config_err(format!(
                    "unknown material kind {other:?}; expected \"mooney-rivlin\" or \"neo-hookean\""
                )))
            }
        };
        model.map_err(CliError::from)
    }

    /// Activation values from `[<command>] k_v`, else from `[load]`, given
    /// either as `k_v` or as `permittivity`, `thickness` and `voltage` (each
    /// activation list may be a scalar or an array).
    pub fn activations(&self, command: &str) -> Result<Vec<f64>, CliError> {
        if let Some(list) = self
            .section(command)
            .map(|s| get_numbers(s, command, "k_v"))
            .transpose()?
            .flatten()
        {
            return validate_activations(list, command);
        }
        let sec = self.require_section("load")?;
        let direct = get_numbers(sec, "load", "k_v")?;
        let field_keys = ["permittivity", "voltage", "thickness"];
        let any_field = field_keys.iter().any(|k| sec.contains_key(*k));
        match (direct, any_field) {
            (Some(_), true) => Err(config_err(
                "[load] must give either k_v or permittivity/voltage/thickness, not both",
            )),
            (None, false) => Err(config_err(
                "[load] must give k_v or permittivity/voltage/thickness",
            )),
            (Some(list), false) => validate_activations(list, "load"),
            (None, true) => {
                let permittivity = require_number(sec, "load", "permittivity")?;
                let thickness = require_number(sec, "load", "thickness")?;
                let voltages = get_numbers(sec, "load", "voltage")?
                    .ok_or_else(|| config_err("[load] needs voltage"))?;
                voltages
                    .into_iter()
                    .map(|voltage| {
                        activation_parameter(&ElectricLoad::Field {
                            permittivity,
                            voltage,
                            thickness,
                        })
                        .map_err(CliError::from)
                    })
                    .collect()
            }
        }
    }

    /// Exactly one activation value.
    pub fn single_activation(&self, command: &str) -> Result<f64, CliError> {
        match self.activations(command)?.as_slice() {
            [k] => Ok(*k),
            list => Err(config_err(format!(
                "{command} needs a single activation, got {}",
                list.len()
            ))),
        }
    }
}

fn validate_activations(list: Vec<f64>, section: &str) -> Result<Vec<f64>, CliError> {
    if list.is_empty() {
        return Err(config_err(format!("[{section}] k_v list is empty")));
    }
    for &k in &list {
        activation_parameter(&ElectricLoad::Activation { k_v: k })?;
    }
    Ok(list)
}

fn as_number(v: &Value) -> Option<f64> {
    match v {
        Value::Float(x) => Some(*x),
        Value::Integer(i) => Some(*i as f64),
        _ => None,
    }
}

pub(crate) fn get_number(sec: &Table, section: &str, key: &str) -> Result<Option<f64>, CliError> {
    sec.get(key)
        .map(|v| {
            as_number(v).ok_or_else(|| config_err(format!("[{section}] {key} must be a number")))
        })
        .transpose()
}

pub(crate) fn require_number(sec: &Table, section: &str, key: &str) -> Result<f64, CliError> {
    get_number(sec, section, key)?.ok_or_else(|| config_err(format!("[{section}] needs {key}")))
}

/// A number or an array of numbers.
pub(crate) fn get_numbers(
    sec: &Table,
    section: &str,
    key: &str,
) -> Result<Option<Vec<f64>>, CliError> {
    let bad = || {
        config_err(format!(
            "[{section}] {key} must be a number or a list of numbers"
        ))
    };
    match sec.get(key) {
        None => Ok(None),
        Some(Value::Array(items)) => items
            .iter()
            .map(|v| as_number(v).ok_or_else(bad))
            .collect::<Result<Vec<_>, _>>()
            .map(Some),
        Some(v) => as_number(v).map(|x| Some(vec![x])).ok_or_else(bad),
    }
}

pub(crate) fn get_str<'a>(
    sec: &'a Table,
    section: &str,
    key: &str,
) -> Result<Option<&'a str>, CliError> {
    sec.get(key)
        .map(|v| {
            v.as_str()
                .ok_or_else(|| config_err(format!("[{section}] {key} must be a string")))
        })
        .transpose()
}

pub(crate) fn get_count(sec: &Table, section: &str, key: &str) -> Result<Option<usize>, CliError> {
    match sec.get(key) {
        None => Ok(None),
        Some(Value::Integer(i)) if *i >= 0 => Ok(Some(*i as usize)),
        Some(_) => Err(config_err(format!(
            "[{section}] {key} must be a non-negative integer"
        ))),
    }
}
