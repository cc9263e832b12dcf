//! Run configuration. A TOML file may set any of the keys below; flags on
//! the command line win over the file, and the file wins over defaults.
//!
//! ```toml
//! m = 4
//! kind = "hermitian"
//! format = "json"
//! suite = "all"
//! sample = 500
//! seed = 7
//! size_cap = 20000
//! threads = 4
//! ```

use std::path::{Path, PathBuf};

use serde::Deserialize;

/// Environment variable giving the number of worker threads.
pub const THREADS_ENV: &str = "YBASIS_THREADS";

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub m: Option<usize>,
    pub kind: Option<String>,
    pub transitions: Option<String>,
    pub format: Option<String>,
    pub suite: Option<String>,
    pub verify: Option<String>,
    pub out: Option<PathBuf>,
    pub sample: Option<usize>,
    pub seed: Option<u64>,
    pub size_cap: Option<usize>,
    pub threads: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid config {path}: {source}")]
    Parse { path: String, source: toml::de::Error },
    #[error("{0}")]
    Invalid(String),
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text).map_err(|source| ConfigError::Parse {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn parse(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }
}

/// Thread count from the flag, then the config file, then the environment.
/// `None` leaves rayon's default of one thread per core.
pub fn thread_count(flag: Option<usize>, file: &FileConfig) -> Result<Option<usize>, ConfigError> {
    let from_env = match std::env::var(THREADS_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .map_err(|_| ConfigError::Invalid(format!("{THREADS_ENV}={v} is not a thread count")))?,
        ),
        Err(_) => None,
    };
    match flag.or(file.threads).or(from_env) {
        Some(0) => Err(ConfigError::Invalid("thread count must be positive".into())),
        n => Ok(n),
    }
}
