//! Reference-vector-guided selection: simplex-lattice reference vectors,
//! angle-penalized distance (APD), association, environmental selection, and
//! the baseline RVEA loop.

mod baseline;
mod reference;
mod report;
mod selection;

pub use baseline::{run_rvea_baseline, RveaConfig, RveaOutcome};
pub(crate) use baseline::random_mating;
pub use reference::{angle, das_dennis, lattice_divisions_for, simplex_lattice, ReferenceVectorSet, GAMMA_FLOOR};
pub use report::{GenerationReport, Observer};
pub use selection::{apd, apd_select, associate, direction, environmental_selection, ApdContext, Association};
