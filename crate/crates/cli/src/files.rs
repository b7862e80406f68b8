//! Reading inputs and writing outputs atomically.

use std::fs;
use std::io::Write;
use std::path::Path;

use seedwave::SeedSequence;
use serde::Serialize;
use tempfile::NamedTempFile;

use crate::error::{CliError, Result};

/// Writes `bytes` to `dir/name` via a temporary file in `dir` and a rename,
/// so readers never see a partial file.
pub fn write_atomic(dir: &Path, name: &str, bytes: &[u8]) -> Result<()> {
    let path = dir.join(name);
    let mut tmp = NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(bytes).map_err(|e| CliError::io(&path, e))?;
    tmp.as_file()
        .sync_all()
        .map_err(|e| CliError::io(&path, e))?;
    tmp.persist(&path)
        .map_err(|e| CliError::io(&path, e.error))?;
    Ok(())
}

pub fn to_json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s.into_bytes()
}

pub fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))
}

pub fn read_seed(path: &Path) -> Result<SeedSequence> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let record: seedwave::SeedRecord =
        serde_json::from_str(&text).map_err(|e| CliError::parse(path, e))?;
    Ok(SeedSequence::try_from(record)?)
}

/// A uniformly sampled signal read from CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    pub values: Vec<f64>,
    /// Time of the first sample.
    pub start: f64,
    pub delta: f64,
}

/// Reads a one-column (`x`) or two-column (`t,x`) CSV. A first row that
/// does not parse as numbers is taken as the header. One-column files need
/// `delta` and start at t = 0; two-column files must be uniformly sampled.
pub fn read_signal(path: &Path, delta: Option<f64>) -> Result<Signal> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::parse(path, e))?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::parse(path, e))?;
        let parsed: std::result::Result<Vec<f64>, _> =
            record.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(row) => rows.push(row),
            Err(_) if i == 0 => continue,
            Err(e) => return Err(CliError::parse(path, format!("row {}: {e}", i + 1))),
        }
    }
    if rows.is_empty() {
        return Err(CliError::parse(path, "no samples"));
    }
    let width = rows[0].len();
    if let Some(i) = rows.iter().position(|r| r.len() != width) {
        return Err(CliError::parse(
            path,
            format!(
                "row {} has {} columns, expected {width}",
                i + 1,
                rows[i].len()
            ),
        ));
    }
    match width {
        1 => {
            let delta =
                delta.ok_or_else(|| CliError::Invalid("one-column signal needs --dt".into()))?;
            Ok(Signal {
                values: rows.into_iter().map(|r| r[0]).collect(),
                start: 0.0,
                delta,
            })
        }
        2 => {
            let times: Vec<f64> = rows.iter().map(|r| r[0]).collect();
            let inferred = if times.len() > 1 {
                (times[times.len() - 1] - times[0]) / (times.len() - 1) as f64
            } else {
                delta.ok_or_else(|| CliError::Invalid("single-sample signal needs --dt".into()))?
            };
            let step = delta.unwrap_or(inferred);
            let uniform = times.iter().enumerate().all(|(i, &t)| {
                (t - (times[0] + i as f64 * step)).abs() <= 1e-9 * step.abs().max(t.abs())
            });
            if !uniform {
                return Err(CliError::parse(
                    path,
                    "sample times are not uniformly spaced",
                ));
            }
            Ok(Signal {
                values: rows.into_iter().map(|r| r[1]).collect(),
                start: times[0],
                delta: step,
            })
        }
        w => Err(CliError::parse(
            path,
            format!("expected 1 or 2 columns, got {w}"),
        )),
    }
}
