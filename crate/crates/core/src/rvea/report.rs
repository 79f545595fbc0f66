use crate::cim::TopoNetwork;
use crate::moo::Population;

/// Snapshot handed to an observer after every generation's selection step.
#[derive(Debug, Clone, Copy)]
pub struct GenerationReport<'a> {
    pub t: usize,
    pub max_generations: usize,
    pub population: &'a Population,
    pub archive_len: usize,
    /// Network nodes (RVEA-CA) or reference vectors (baseline).
    pub nodes: usize,
    pub components: usize,
    /// Similarity threshold in effect; `None` for algorithms without one.
    pub threshold: Option<f64>,
    /// The current clustering network, if the algorithm keeps one.
    pub network: Option<&'a TopoNetwork>,
}

/// Callback receiving a [`GenerationReport`] per generation.
pub type Observer<'o> = &'o mut dyn FnMut(&GenerationReport<'_>);
