use std::path::Path;

use serde::Deserialize;

use crate::Format;

/// Defaults read from a TOML file. Every field is optional and command-line
/// flags win.
///
/// ```toml
/// format = "json"
/// jobs = 4
/// rank = 3
/// len = 6
/// maxcells = 8
/// ```
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub format: Option<Format>,
    pub jobs: Option<usize>,
    pub rank: Option<usize>,
    pub len: Option<usize>,
    pub maxcells: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| anyhow::anyhow!("reading {}: {e}", path.display()))?;
        Ok(toml::from_str(&text)?)
    }
}
