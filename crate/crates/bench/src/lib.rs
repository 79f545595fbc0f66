//! Benchmark harness around `rveaca-core`: JSON experiment configs, seeded
//! parallel batch runs, persisted run records, rank-sum statistics and
//! summary tables.

pub mod config;
pub mod error;
pub mod export;
pub mod record;
pub mod runner;
pub mod stats;
pub mod summary;

pub use config::{Algorithm, ExperimentConfig, ProblemEntry, Scale};
pub use error::{BenchError, ConfigError};
pub use record::{RunRecord, TracePoint};
pub use runner::{run_experiment, run_jobs};
