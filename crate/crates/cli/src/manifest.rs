//! The run manifest written next to every command's outputs.
//!
//! ```json
//! {
//!   "tool": "seedwave",
//!   "version": "0.1.0",
//!   "command": "construct",
//!   "parameters": { "n": 15, "p": 3, "variance": 1.0, "rng_seed": 7, "delta": null, "grid": null },
//!   "outputs": ["seed.json", "system.json", "wavelet.csv"]
//! }
//! ```
//!
//! `outputs` are file names relative to the manifest's directory. The
//! output directory itself is not recorded, so the same run sent to two
//! places produces two identical manifests.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::args::Job;
use crate::error::{CliError, Result};

pub const MANIFEST_NAME: &str = "manifest.json";
pub const TOOL: &str = "seedwave";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    #[serde(flatten)]
    pub job: Job,
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(job: Job, outputs: Vec<String>) -> Self {
        Self {
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            job,
            outputs,
        }
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let manifest: Self = serde_json::from_str(&text).map_err(|e| CliError::parse(path, e))?;
        if manifest.tool != TOOL {
            return Err(CliError::parse(
                path,
                format!("not a {TOOL} manifest (tool = {:?})", manifest.tool),
            ));
        }
        Ok(manifest)
    }
}
