//! Flat key=value config files.
//!
//! A config file supplies defaults for command-line flags: keys are the
//! long flag names (`p`, `k`, `n`, `mode`, `samples`, `seed`, `out`,
//! `cube-size`, `trials`, `n-max`, `guarantee`), one `key = value` pair
//! per line. Blank lines and lines starting with `#` are skipped. A flag
//! given on the command line always wins over the file.

use std::collections::BTreeMap;

use crate::CliError;

/// Parsed config file: a flat map from key to raw string value.
#[derive(Debug, Clone, Default)]
pub struct Config {
    entries: BTreeMap<String, String>,
}

impl Config {
    /// Parses `key = value` lines; rejects anything else that is not
    /// blank or a `#` comment.
    pub fn parse(text: &str) -> Result<Config, CliError> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Usage(format!(
                    "config line {}: expected `key = value`, got `{}`",
                    idx + 1,
                    line
                )));
            };
            let key = key.trim().to_string();
            let value = value.trim().to_string();
            if key.is_empty() {
                return Err(CliError::Usage(format!(
                    "config line {}: empty key",
                    idx + 1
                )));
            }
            entries.insert(key, value);
        }
        Ok(Config { entries })
    }

    /// Reads and parses a config file from disk.
    pub fn load(path: &std::path::Path) -> Result<Config, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Usage(format!("cannot read config file {}: {}", path.display(), e))
        })?;
        Config::parse(&text)
    }

    /// Raw string value for `key`, if the file had one.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|s| s.as_str())
    }

    /// Merges a flag value with the config: the flag wins when present,
    /// otherwise the config value is parsed into the flag's type.
    pub fn resolve<T>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError>
    where
        T: std::str::FromStr,
        T::Err: std::fmt::Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|e| {
                CliError::Usage(format!("config key `{}`: invalid value `{}`: {}", key, raw, e))
            }),
        }
    }
}

/// Unwraps a merged option, turning absence into a usage error naming the
/// flag the user must supply.
pub fn require<T>(merged: Option<T>, key: &str) -> Result<T, CliError> {
    merged.ok_or_else(|| CliError::Usage(format!("missing required option --{}", key)))
}
