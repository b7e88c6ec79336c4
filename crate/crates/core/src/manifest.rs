//! Run manifests written next to every CSV output.
//!
//! A manifest pins everything that determines the output bytes, so a rerun
//! with the same manifest must reproduce the CSV exactly.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunManifest {
    pub tool_version: String,
    pub scenario_sha256: String,
    pub args: Vec<String>,
    pub seed: u64,
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(scenario_text: &str, args: Vec<String>, seed: u64, outputs: Vec<String>) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            scenario_sha256: sha256_hex(scenario_text.as_bytes()),
            args,
            seed,
            outputs,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "tool_version = {}", self.tool_version);
        let _ = writeln!(out, "scenario_sha256 = {}", self.scenario_sha256);
        let _ = writeln!(out, "args = {}", self.args.join(" "));
        let _ = writeln!(out, "seed = {}", self.seed);
        let _ = writeln!(out, "outputs = {}", self.outputs.join(","));
        out
    }

    /// `out.csv` -> `out.csv.manifest`
    pub fn path_for(output: &Path) -> PathBuf {
        let mut name = output.as_os_str().to_owned();
        name.push(".manifest");
        PathBuf::from(name)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
