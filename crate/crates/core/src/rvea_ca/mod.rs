//! The clustering-driven variant: an ε-indicator archive, simplex mapping of
//! objective vectors, per-generation CA training whose node positions become
//! the reference vectors, and cluster-aware mating.

mod archive;
mod reproduction;
mod run;

pub use archive::{additive_epsilon_contributions, update_archive, Archive};
pub use reproduction::{cluster_based_reproduction, map_to_hyperplane, predict_labels};
pub use run::{run_rvea_ca, RveaCaConfig, RveaCaOutcome, ARCHIVE_FACTOR, INITIAL_THRESHOLD};
