use serde::{Deserialize, Serialize};

use crate::config::Algorithm;

/// Indicator values and network state at one generation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub t: usize,
    pub hv: f64,
    pub igdp: f64,
    pub nodes: usize,
    pub components: usize,
    /// Similarity threshold; absent for the baseline.
    pub threshold: Option<f64>,
}

/// Everything persisted about one seeded run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub algorithm: Algorithm,
    pub problem: String,
    pub m: usize,
    pub seed: u64,
    pub population_size: usize,
    pub generations: usize,
    pub evaluations: usize,
    /// Hypervolume of the normalized final population.
    pub hv: f64,
    /// `"exact"` or `"monte-carlo"`.
    pub hv_method: String,
    pub igd_plus: f64,
    pub trace: Vec<TracePoint>,
    pub final_objectives: Vec<Vec<f64>>,
    pub wall_clock_secs: f64,
}

impl RunRecord {
    /// File stem shared by the record, trace and network outputs.
    pub fn stem(&self) -> String {
        run_stem(self.algorithm, &self.problem, self.m, self.seed)
    }
}

pub fn run_stem(algorithm: Algorithm, problem: &str, m: usize, seed: u64) -> String {
    format!("{}_{}_M{}_s{}", algorithm.name(), problem, m, seed)
}
