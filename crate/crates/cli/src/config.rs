use std::fs;
use std::path::Path;

use clap::ValueEnum;
use dualkripke_core::duality::{Caps, MAX_GENERATION_WORLDS};
use serde::Deserialize;

use crate::CliError;

/// Environment variable naming the default config file.
pub const CONFIG_ENV: &str = "DUALKRIPKE_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CapsConfig {
    pub generation_worlds: usize,
    pub ultrafilter_arguments: usize,
    pub oracle_arguments: usize,
    pub formulas: usize,
}

impl Default for CapsConfig {
    fn default() -> Self {
        let c = Caps::default();
        CapsConfig {
            generation_worlds: c.generation_worlds,
            ultrafilter_arguments: c.ultrafilter_arguments,
            oracle_arguments: c.oracle_arguments,
            formulas: c.formulas,
        }
    }
}

impl From<&CapsConfig> for Caps {
    fn from(c: &CapsConfig) -> Self {
        Caps {
            generation_worlds: c.generation_worlds,
            ultrafilter_arguments: c.ultrafilter_arguments,
            oracle_arguments: c.oracle_arguments,
            formulas: c.formulas,
        }
    }
}

/// Settings shared by every command: a TOML file, overridden by flags.
///
/// ```toml
/// format = "json"
/// color = false
/// seed = 7
///
/// [caps]
/// generation_worlds = 12
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CliConfig {
    pub caps: CapsConfig,
    pub format: Format,
    pub color: bool,
    pub seed: u64,
}

impl CliConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.into(),
            source,
        })?;
        Self::parse(&text).map_err(|e| match e {
            ParseConfigError::Toml(source) => CliError::Toml {
                path: path.into(),
                source: Box::new(source),
            },
            ParseConfigError::Invalid(msg) => CliError::Usage(format!("{}: {msg}", path.display())),
        })
    }

    pub fn parse(text: &str) -> Result<Self, ParseConfigError> {
        let config: CliConfig = toml::from_str(text).map_err(ParseConfigError::Toml)?;
        config.check().map_err(ParseConfigError::Invalid)?;
        Ok(config)
    }

    pub fn check(&self) -> Result<(), String> {
        let c = &self.caps;
        for (name, value) in [
            ("generation_worlds", c.generation_worlds),
            ("ultrafilter_arguments", c.ultrafilter_arguments),
            ("oracle_arguments", c.oracle_arguments),
            ("formulas", c.formulas),
        ] {
            if value == 0 {
                return Err(format!("caps.{name} must be positive"));
            }
        }
        if c.generation_worlds > MAX_GENERATION_WORLDS {
            return Err(format!(
                "caps.generation_worlds must be at most {MAX_GENERATION_WORLDS}"
            ));
        }
        if c.oracle_arguments > 63 {
            return Err("caps.oracle_arguments must be at most 63".into());
        }
        Ok(())
    }

    pub fn caps(&self) -> Caps {
        (&self.caps).into()
    }
}

#[derive(Debug)]
pub enum ParseConfigError {
    Toml(toml::de::Error),
    Invalid(String),
}
