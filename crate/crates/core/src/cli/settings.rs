//! Run settings: defaults, overridden by a flat `key=value` file, then
//! by command-line flags.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::literal::parse_lambda;
use crate::regions::ExternalTarget;

use super::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precision {
    ExactPreferred,
    FloatOnly,
}

impl FromStr for Precision {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" | "exact-preferred" => Ok(Precision::ExactPreferred),
            "float" | "float-only" => Ok(Precision::FloatOnly),
            _ => Err(format!("unknown precision {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
    Text,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <Format as clap::ValueEnum>::from_str(s, true)
    }
}

#[derive(Clone, Debug)]
pub struct CliConfig {
    pub precision: Precision,
    /// Match and trace tolerance for floating inputs.
    pub tolerance: f64,
    /// Residual bound for generated curves.
    pub curve_tol: f64,
    pub samples: usize,
    pub max_depth: u32,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub targets: Vec<ExternalTarget>,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            precision: Precision::ExactPreferred,
            tolerance: 1e-12,
            curve_tol: 1e-9,
            samples: crate::curves::DEFAULT_SAMPLES,
            max_depth: crate::regions::certify::DEFAULT_MAX_DEPTH,
            format: None,
            out: None,
            targets: Vec::new(),
        }
    }
}

fn usage(msg: String) -> CliError {
    CliError::usage(msg)
}

fn num<T: FromStr>(key: &str, v: &str) -> Result<T, CliError> {
    v.parse().map_err(|_| usage(format!("bad value for {key}: {v:?}")))
}

impl CliConfig {
    /// Apply one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "precision" => self.precision = value.parse().map_err(usage)?,
            "tolerance" => self.tolerance = num(key, value)?,
            "curve_tol" => self.curve_tol = num(key, value)?,
            "samples" => self.samples = num(key, value)?,
            "max_depth" => self.max_depth = num(key, value)?,
            "format" => self.format = Some(value.parse().map_err(usage)?),
            "out" => self.out = Some(PathBuf::from(value)),
            _ => match key.strip_prefix("target.") {
                Some(name) if !name.is_empty() => self.add_target(name, value)?,
                _ => return Err(usage(format!("unknown setting {key:?}"))),
            },
        }
        Ok(())
    }

    pub fn add_target(&mut self, name: &str, literal: &str) -> Result<(), CliError> {
        let v = parse_lambda(literal).map_err(CliError::from)?;
        self.targets.retain(|t| t.name != name);
        self.targets.push(ExternalTarget { name: name.to_string(), value: v.value });
        Ok(())
    }

    /// Read a flat `key=value` file; `#` starts a comment line.
    pub fn load_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("{}:{}: expected key=value", path.display(), k + 1)))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.tolerance > 0.0) || !(self.curve_tol > 0.0) {
            return Err(usage("tolerances must be positive".into()));
        }
        if self.samples < 2 {
            return Err(usage(format!("samples must be at least 2, got {}", self.samples)));
        }
        Ok(())
    }
}
