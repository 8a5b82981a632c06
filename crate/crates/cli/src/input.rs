//! Reading numeric series from CSV or JSONL files.
//!
//! CSV: one or more comma-separated values per line. JSONL: one object per
//! line with a numeric `"value"` field; chosen by a `.jsonl` or `.ndjson`
//! extension. Blank lines and lines starting with `#` are skipped in both.

use std::fs;
use std::path::{Path, PathBuf};

use ctswap::Sequence;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse { path: PathBuf, line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
}

impl Format {
    pub fn detect(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("jsonl" | "ndjson") => Format::Jsonl,
            _ => Format::Csv,
        }
    }
}

pub fn read_series(path: &Path) -> Result<Sequence, InputError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io { path: path.to_owned(), source })?;
    parse_series(&text, Format::detect(path), path)
}

pub fn parse_series(text: &str, format: Format, path: &Path) -> Result<Sequence, InputError> {
    let mut values = Vec::new();
    // line number of every value, for error reporting after parsing
    let mut origin = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| InputError::Parse { path: path.to_owned(), line: idx + 1, message };
        match format {
            Format::Csv => {
                for field in line.split(',').map(str::trim) {
                    if field.is_empty() {
                        continue;
                    }
                    let v: f64 = field.parse().map_err(|_| err(format!("not a number: {field:?}")))?;
                    values.push(v);
                    origin.push(idx + 1);
                }
            }
            Format::Jsonl => {
                let record: serde_json::Value =
                    serde_json::from_str(line).map_err(|e| err(format!("invalid JSON: {e}")))?;
                let v = record
                    .get("value")
                    .and_then(serde_json::Value::as_f64)
                    .ok_or_else(|| err("missing numeric \"value\" field".into()))?;
                values.push(v);
                origin.push(idx + 1);
            }
        }
    }
    Sequence::new(values).map_err(|e| match e {
        ctswap::Error::NonFinite { position } => InputError::Parse {
            path: path.to_owned(),
            line: origin[position - 1],
            message: format!("value {position} is not finite"),
        },
        other => InputError::Parse { path: path.to_owned(), line: 0, message: other.to_string() },
    })
}
