use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::{Format, RunConfig};

/// Degrees as JSON numbers when they fit, strings otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Degree {
    Small(u64),
    Big(String),
}

impl From<&BigUint> for Degree {
    fn from(d: &BigUint) -> Self {
        d.to_u64().map_or_else(|| Degree::Big(d.to_string()), Degree::Small)
    }
}

impl std::fmt::Display for Degree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Degree::Small(d) => write!(f, "{d}"),
            Degree::Big(s) => f.write_str(s),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub command: String,
}

impl Provenance {
    pub fn new(command: &str) -> Self {
        Provenance {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct Report<R, S> {
    pub provenance: Provenance,
    pub config: RunConfig,
    pub summary: S,
    pub rows: Vec<R>,
}

/// One CSV line per row.
pub trait FlatRow {
    const HEADER: &'static [&'static str];
    fn fields(&self) -> Vec<String>;
}

impl<R: Serialize + FlatRow, S: Serialize> Report<R, S> {
    pub fn render(&self, format: Format) -> Result<Vec<u8>> {
        match format {
            Format::Json => {
                let mut buf = serde_json::to_vec_pretty(self)?;
                buf.push(b'\n');
                Ok(buf)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(R::HEADER)?;
                for r in &self.rows {
                    w.write_record(r.fields())?;
                }
                Ok(w.into_inner().map_err(|e| e.into_error())?)
            }
        }
    }

    pub fn emit(&self, format: Format, out: Option<&Path>) -> Result<()> {
        let bytes = self.render(format)?;
        match out {
            Some(path) => write_atomic(path, &bytes),
            None => Ok(std::io::stdout().lock().write_all(&bytes)?),
        }
    }
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = sibling(path, ".tmp");
    fs::write(&tmp, bytes).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Rows finished so far by a long sweep.
#[derive(Serialize, Deserialize)]
pub struct Checkpoint<R> {
    pub command: String,
    pub config: RunConfig,
    pub rows: Vec<R>,
}

impl<R: Serialize + DeserializeOwned> Checkpoint<R> {
    pub fn path(out: &Path) -> PathBuf {
        sibling(out, ".checkpoint")
    }

    pub fn load(out: &Path) -> Result<Option<Self>> {
        let path = Self::path(out);
        if !path.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&path)?;
        Ok(Some(serde_json::from_str(&text).with_context(|| format!("reading {}", path.display()))?))
    }

    pub fn save(&self, out: &Path) -> Result<()> {
        write_atomic(&Self::path(out), &serde_json::to_vec(self)?)
    }
}

/// Line-per-difference comparison of two JSON documents. Empty when equal.
pub fn diff(a: &Value, b: &Value) -> Vec<String> {
    let mut out = Vec::new();
    diff_at("$", a, b, &mut out);
    out
}

fn diff_at(path: &str, a: &Value, b: &Value, out: &mut Vec<String>) {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            for (k, va) in x {
                match y.get(k) {
                    Some(vb) => diff_at(&format!("{path}.{k}"), va, vb, out),
                    None => out.push(format!("- {path}.{k}: {va}")),
                }
            }
            for (k, vb) in y {
                if !x.contains_key(k) {
                    out.push(format!("+ {path}.{k}: {vb}"));
                }
            }
        }
        (Value::Array(x), Value::Array(y)) => {
            for i in 0..x.len().max(y.len()) {
                let p = format!("{path}[{i}]");
                match (x.get(i), y.get(i)) {
                    (Some(va), Some(vb)) => diff_at(&p, va, vb, out),
                    (Some(va), None) => out.push(format!("- {p}: {va}")),
                    (None, Some(vb)) => out.push(format!("+ {p}: {vb}")),
                    (None, None) => unreachable!(),
                }
            }
        }
        _ if a != b => out.push(format!("~ {path}: {a} -> {b}")),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn diff_reports_paths() {
        let a = json!({"rows": [1, 2, 3], "summary": {"x": 1, "gone": true}});
        let b = json!({"rows": [1, 5], "summary": {"x": 1, "new": null}});
        assert_eq!(
            diff(&a, &b),
            vec![
                "~ $.rows[1]: 2 -> 5",
                "- $.rows[2]: 3",
                "- $.summary.gone: true",
                "+ $.summary.new: null",
            ]
        );
        assert!(diff(&a, &a).is_empty());
    }

    #[test]
    fn big_degrees_become_strings() {
        let big = BigUint::from(u64::MAX) * 3u32;
        assert_eq!(serde_json::to_string(&Degree::from(&BigUint::from(7u32))).unwrap(), "7");
        assert_eq!(serde_json::to_string(&Degree::from(&big)).unwrap(), format!("\"{big}\""));
    }
}
