use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::geometry::FinderOptions;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid config: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("{0} must be positive")]
    NotPositive(&'static str),
}

/// Run parameters. Every field has a default, so a config file may set any
/// subset of them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub seed: u64,
    pub newton_starts: usize,
    pub newton_max_iter: usize,
    pub tol_residual: f64,
    pub tol_dedupe: f64,
    pub tol_match: f64,
    pub tol_real: f64,
    pub retry_budget: usize,
    pub threads: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let f = FinderOptions::default();
        RunConfig {
            seed: 0,
            newton_starts: f.starts_per_chart,
            newton_max_iter: f.max_iter,
            tol_residual: f.accept_tol,
            tol_dedupe: f.dedupe_tol,
            tol_match: 1e-6,
            tol_real: 1e-8,
            retry_budget: 20,
            threads: None,
        }
    }
}

impl RunConfig {
    pub fn from_json_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let cfg: RunConfig = serde_json::from_str(&text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let tolerances = [
            ("tol_residual", self.tol_residual),
            ("tol_dedupe", self.tol_dedupe),
            ("tol_match", self.tol_match),
            ("tol_real", self.tol_real),
        ];
        for (name, v) in tolerances {
            if !(v > 0.0) {
                return Err(ConfigError::NotPositive(name));
            }
        }
        if self.threads == Some(0) {
            return Err(ConfigError::NotPositive("threads"));
        }
        Ok(())
    }

    pub fn finder_options(&self) -> FinderOptions {
        FinderOptions {
            starts_per_chart: self.newton_starts,
            max_iter: self.newton_max_iter,
            accept_tol: self.tol_residual,
            dedupe_tol: self.tol_dedupe,
            threads: self.threads,
            ..FinderOptions::default()
        }
    }
}
