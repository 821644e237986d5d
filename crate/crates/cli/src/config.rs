//! Job configuration: JSON file supplying defaults for the command-line
//! flags. The path comes from --config or the PKL_CONFIG environment variable.

use crate::emit::Format;
use serde::Deserialize;

#[derive(Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub rank: Option<usize>,
    pub e: Option<i64>,
    #[serde(default)]
    pub primes: Vec<String>,
    pub charges: Option<String>,
    pub m_vector: Option<String>,
    pub max_length: Option<usize>,
    pub format: Option<Format>,
    pub cache_dir: Option<String>,
}

impl JobConfig {
    pub fn load(flag_path: Option<&str>) -> Result<JobConfig, String> {
        let path = std::env::var("PKL_CONFIG")
            .ok()
            .or_else(|| flag_path.map(str::to_string));
        match path {
            None => Ok(JobConfig::default()),
            Some(p) => {
                let text = std::fs::read_to_string(&p)
                    .map_err(|e| format!("cannot read {}: {}", p, e))?;
                serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {}", p, e))
            }
        }
    }
}
