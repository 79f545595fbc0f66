//! Many-objective evolutionary optimization guided by a correntropy-based
//! adaptive resonance clustering network.
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! * [`moo`]: individuals, populations, Pareto dominance, ideal-point tracking.
//! * [`variation`]: SBX crossover, polynomial mutation, random initialization.
//! * [`cim`]: the CIM-based ART clustering network and its vigilance tuner.
//! * [`rvea`]: reference vectors, APD selection, and the baseline RVEA loop.
//! * [`rvea_ca`]: the clustering-driven algorithm (archive, cluster mating, main loop).
//! * [`problems`]: DTLZ2, DTLZ7 and MaF1–MaF7 with reference-front samplers.
//! * [`indicators`]: hypervolume (exact and Monte Carlo) and IGD⁺.
//!
//! All randomness is drawn from a caller-supplied [`rand::Rng`], so a seeded
//! generator replays a run bit for bit.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cim;
pub mod error;
pub mod indicators;
pub mod moo;
pub mod problems;
pub mod rvea;
pub mod rvea_ca;
pub mod variation;

pub(crate) mod math;

pub use error::{Error, Result};
pub use moo::{Bounds, IdealPoint, Individual, Population};
pub use problems::{Problem, ProblemKind, ProblemSpec};
