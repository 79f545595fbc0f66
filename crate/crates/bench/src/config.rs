use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rveaca_core::ProblemKind;
use serde::{Deserialize, Serialize};

use crate::error::ConfigError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "rvea-ca")]
    RveaCa,
    #[serde(rename = "rvea")]
    Rvea,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::RveaCa => "rvea-ca",
            Algorithm::Rvea => "rvea",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "rvea-ca" | "rveaca" => Ok(Algorithm::RveaCa),
            "rvea" => Ok(Algorithm::Rvea),
            other => Err(ConfigError::UnknownAlgorithm(other.to_string())),
        }
    }
}

/// A problem name plus objective count, e.g. `MaF1:5`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ProblemEntry {
    pub name: String,
    pub m: usize,
}

impl ProblemEntry {
    pub fn kind(&self) -> Result<ProblemKind, ConfigError> {
        self.name.parse().map_err(|_| ConfigError::UnknownProblem(self.name.clone()))
    }
}

/// Population size and evaluation budget for one objective count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scale {
    pub population_size: usize,
    pub evaluations: usize,
}

impl Scale {
    /// Generations of offspring after the initial population:
    /// `⌊budget / N⌋ − 1`.
    pub fn generations(&self) -> usize {
        (self.evaluations / self.population_size).saturating_sub(1)
    }
}

/// Population sizes and budgets used for 5 to 20 objectives.
pub fn default_scales() -> BTreeMap<usize, Scale> {
    [(5, 210, 50_190), (8, 240, 80_160), (10, 230, 100_050), (13, 182, 130_130), (15, 240, 150_000), (20, 230, 200_100)]
        .into_iter()
        .map(|(m, population_size, evaluations)| (m, Scale { population_size, evaluations }))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct IndicatorSettings {
    /// Hypervolume reference point coordinate, applied to every objective.
    pub reference_point: f64,
    pub mc_samples: u64,
    pub mc_seed: u64,
    /// Monte Carlo samples for the per-generation trace (M > 3).
    pub trace_mc_samples: u64,
    /// Target size of the sampled true front used by IGD⁺.
    pub front_points: usize,
}

impl Default for IndicatorSettings {
    fn default() -> Self {
        Self { reference_point: 1.5, mc_samples: 1_000_000, mc_seed: 0x5eed, trace_mc_samples: 10_000, front_points: 10_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub algorithms: Vec<Algorithm>,
    pub problems: Vec<ProblemEntry>,
    /// Keyed by objective count; entries here override the defaults.
    pub scales: BTreeMap<usize, Scale>,
    pub runs: usize,
    pub seed: u64,
    pub lambda: usize,
    pub indicators: IndicatorSettings,
    /// Trace every k-th generation (the last generation is always traced).
    pub trace_every: usize,
    /// Also write the final network of each RVEA-CA run.
    pub dump_networks: bool,
    pub workers: usize,
    pub out: PathBuf,
    /// Algorithm the significance marks are computed against.
    pub reference_algorithm: Algorithm,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            algorithms: vec![Algorithm::RveaCa, Algorithm::Rvea],
            problems: Vec::new(),
            scales: BTreeMap::new(),
            runs: 31,
            seed: 1,
            lambda: 100,
            indicators: IndicatorSettings::default(),
            trace_every: 10,
            dump_networks: false,
            workers: 1,
            out: PathBuf::from("results"),
            reference_algorithm: Algorithm::RveaCa,
        }
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Read(path.to_path_buf(), e))?;
        Self::from_json(&text)
    }

    /// Scale for `m` objectives: an explicit entry, else the default table.
    pub fn scale(&self, m: usize) -> Option<Scale> {
        self.scales.get(&m).copied().or_else(|| default_scales().get(&m).copied())
    }

    /// Checks names and sizes so that no run starts on a bad config.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.algorithms.is_empty() {
            return Err(ConfigError::Invalid("no algorithms selected".into()));
        }
        if self.problems.is_empty() {
            return Err(ConfigError::Invalid("no problems selected".into()));
        }
        if self.runs == 0 {
            return Err(ConfigError::Invalid("runs must be positive".into()));
        }
        if self.lambda < 2 {
            return Err(ConfigError::Invalid("lambda must be at least 2".into()));
        }
        if self.trace_every == 0 {
            return Err(ConfigError::Invalid("trace_every must be positive".into()));
        }
        for p in &self.problems {
            p.kind()?;
            if p.m < 2 {
                return Err(ConfigError::Invalid(format!("{}: at least 2 objectives required", p.name)));
            }
            let scale = self.scale(p.m).ok_or(ConfigError::MissingScale(p.m))?;
            if scale.population_size < 2 || scale.generations() == 0 {
                return Err(ConfigError::Invalid(format!(
                    "M={}: budget {} leaves no generation for N={}",
                    p.m, scale.evaluations, scale.population_size
                )));
            }
        }
        if self.indicators.front_points < self.problems.iter().map(|p| p.m).max().unwrap_or(0) {
            return Err(ConfigError::Invalid("front_points must be at least M".into()));
        }
        Ok(())
    }
}

/// Parses `NAME:M` entries separated by commas. A bare `NAME` expands to
/// every objective count of the default table.
pub fn parse_problem_list(list: &str) -> Result<Vec<ProblemEntry>, ConfigError> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.split_once(':') {
            Some((name, m)) => {
                let m = m.trim().parse().map_err(|_| ConfigError::Invalid(format!("bad objective count in {item:?}")))?;
                out.push(ProblemEntry { name: name.trim().to_string(), m });
            }
            None => out.extend(default_scales().keys().map(|&m| ProblemEntry { name: item.to_string(), m })),
        }
    }
    for p in &out {
        p.kind()?;
    }
    Ok(out)
}

pub fn parse_algorithm_list(list: &str) -> Result<Vec<Algorithm>, ConfigError> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect()
}
