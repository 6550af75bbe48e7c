use std::path::Path;

use serde_json::{Map, Value};

use super::{HarnessError, Result};

/// A flat JSON object of experiment parameters. Values are numbers,
/// booleans, or arrays of numbers.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    values: Map<String, Value>,
}

fn bad(msg: impl Into<String>) -> HarnessError {
    HarnessError::Config(msg.into())
}

impl Config {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| bad(format!("not valid JSON: {e}")))?;
        let Value::Object(values) = value else {
            return Err(bad("top level must be a JSON object"));
        };
        for (key, v) in &values {
            let flat = match v {
                Value::Array(items) => items.iter().all(Value::is_number),
                Value::Object(_) => false,
                _ => true,
            };
            if !flat {
                return Err(bad(format!(
                    "key `{key}` must be a number, boolean, string or array of numbers"
                )));
            }
        }
        Ok(Config { values })
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| bad(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    /// Sets `key`, replacing any value from the file.
    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.values.insert(key.to_string(), value.into());
    }

    pub fn contains(&self, key: &str) -> bool {
        self.values.contains_key(key)
    }

    pub(crate) fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        match self.values.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(bad(format!(
                "unknown key `{k}` (expected one of: {})",
                allowed.join(", ")
            ))),
            None => Ok(()),
        }
    }

    pub(crate) fn f64_or(&self, key: &str, default: f64) -> Result<f64> {
        match self.values.get(key) {
            None => Ok(default),
            Some(v) => v
                .as_f64()
                .filter(|x| x.is_finite())
                .ok_or_else(|| bad(format!("`{key}` must be a finite number"))),
        }
    }

    pub(crate) fn u64_or(&self, key: &str, default: u64) -> Result<u64> {
        match self.values.get(key) {
            None => Ok(default),
            Some(v) => v
                .as_u64()
                .ok_or_else(|| bad(format!("`{key}` must be a non-negative integer"))),
        }
    }

    pub(crate) fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        let v = self.u64_or(key, default as u64)?;
        usize::try_from(v).map_err(|_| bad(format!("`{key}` is too large")))
    }

    pub(crate) fn bool_or(&self, key: &str, default: bool) -> Result<bool> {
        match self.values.get(key) {
            None => Ok(default),
            Some(v) => v
                .as_bool()
                .ok_or_else(|| bad(format!("`{key}` must be a boolean"))),
        }
    }

    /// A number or an array of numbers.
    pub(crate) fn f64_list_or(&self, key: &str, default: &[f64]) -> Result<Vec<f64>> {
        let list = match self.values.get(key) {
            None => return Ok(default.to_vec()),
            Some(Value::Array(items)) => {
                items.iter().map(Value::as_f64).collect::<Option<Vec<_>>>()
            }
            Some(v) => v.as_f64().map(|x| vec![x]),
        };
        match list {
            Some(l) if !l.is_empty() && l.iter().all(|x| x.is_finite()) => Ok(l),
            _ => Err(bad(format!(
                "`{key}` must be a non-empty list of finite numbers"
            ))),
        }
    }

    /// A non-negative integer or an array of them.
    pub(crate) fn usize_list_or(&self, key: &str, default: &[usize]) -> Result<Vec<usize>> {
        let list = match self.values.get(key) {
            None => return Ok(default.to_vec()),
            Some(Value::Array(items)) => {
                items.iter().map(Value::as_u64).collect::<Option<Vec<_>>>()
            }
            Some(v) => v.as_u64().map(|x| vec![x]),
        };
        match list {
            Some(l) if !l.is_empty() => Ok(l.into_iter().map(|v| v as usize).collect()),
            _ => Err(bad(format!(
                "`{key}` must be a non-empty list of non-negative integers"
            ))),
        }
    }
}
