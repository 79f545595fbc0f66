use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use super::archive::{update_archive, Archive};
use super::reproduction::{cluster_based_reproduction, map_to_hyperplane};
use crate::cim::{adaptive_train_ca, connected_components, TopoNetwork};
use crate::error::{Error, Result};
use crate::moo::{IdealPoint, Population};
use crate::problems::Problem;
use crate::rvea::{
    das_dennis, environmental_selection, lattice_divisions_for, ApdContext, GenerationReport, Observer,
    ReferenceVectorSet,
};
use crate::variation::{random_init, VariationParams};

/// Similarity threshold before the first training pass.
pub const INITIAL_THRESHOLD: f64 = 0.1;
/// Archive capacity as a multiple of the population size.
pub const ARCHIVE_FACTOR: usize = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct RveaCaConfig {
    pub population_size: usize,
    pub max_generations: usize,
    /// Bandwidth estimation window.
    pub lambda: usize,
    /// APD penalty growth exponent.
    pub alpha: f64,
    /// `None` selects the defaults for the problem's dimension.
    pub variation: Option<VariationParams>,
}

impl RveaCaConfig {
    pub fn new(population_size: usize, max_generations: usize) -> Self {
        Self { population_size, max_generations, lambda: 100, alpha: 2.0, variation: None }
    }

    /// Last generation that trains the network; the reference vectors are
    /// frozen after it.
    pub fn freeze_generation(&self) -> usize {
        9 * self.max_generations / 10
    }
}

#[derive(Debug, Clone)]
pub struct RveaCaOutcome {
    pub population: Population,
    pub archive: Archive,
    pub network: TopoNetwork,
    pub reference: ReferenceVectorSet,
    pub threshold: f64,
    pub evaluations: usize,
}

/// Runs the clustering-driven algorithm for `max_generations` generations of
/// `N` offspring each.
///
/// Per generation: cluster-based offspring, ideal-point update, `P ∪ O`,
/// archive update, union with the archive, then (while `t ≤ 0.9·t_max`)
/// training on the simplex-mapped, shuffled objectives with the node
/// positions becoming the reference vectors. At `t = ⌊0.9·t_max⌋` the mapped
/// archive joins the reference set, which stays fixed afterwards. APD
/// selection brings the population back to `N`.
pub fn run_rvea_ca<P, R>(
    problem: &P,
    config: &RveaCaConfig,
    rng: &mut R,
    mut observer: Option<Observer<'_>>,
) -> Result<RveaCaOutcome>
where
    P: Problem + ?Sized,
    R: Rng + ?Sized,
{
    let n = config.population_size;
    if n < 2 {
        return Err(Error::InvalidArgument("population size must be at least 2"));
    }
    if config.lambda < 2 {
        return Err(Error::InvalidArgument("bandwidth window must be at least 2"));
    }
    let m = problem.num_objectives();
    let t_max = config.max_generations;
    let bounds = problem.bounds().clone();
    let params = config.variation.unwrap_or_else(|| VariationParams::for_dimension(bounds.dim()));

    let mut threshold = INITIAL_THRESHOLD;
    let mut network = TopoNetwork::new(config.lambda, threshold);
    let mut reference = das_dennis(m, lattice_divisions_for(m, n))?;
    let mut population = random_init(n, &bounds, rng);
    problem.evaluate_population(&mut population, 0)?;
    let mut evaluations = n;
    let mut z_min = IdealPoint::from_objectives(population.objectives())?;
    let mut archive = update_archive(&Archive::new(ARCHIVE_FACTOR * n), &population, &z_min)?;
    let freeze_at = config.freeze_generation();

    for t in 1..=t_max {
        let mut offspring = cluster_based_reproduction(&population, &network, &z_min, n, &bounds, &params, rng);
        problem.evaluate_population(&mut offspring, t)?;
        evaluations += offspring.len();
        z_min = z_min.updated(offspring.objectives())?;

        let mut combined = population;
        combined.extend(offspring.into_members());
        archive = update_archive(&archive, &combined, &z_min)?;
        let combined = combined.union_distinct(archive.members());

        if 10 * t <= 9 * t_max {
            let mut instances = map_to_hyperplane(&combined.objectives(), &z_min);
            instances.shuffle(rng);
            let outcome = adaptive_train_ca(&instances, config.lambda, threshold, n);
            threshold = outcome.threshold;
            network = outcome.network;
            if !network.is_empty() {
                let mut directions: Vec<Vec<f64>> = network.positions().map(<[f64]>::to_vec).collect();
                if t == freeze_at {
                    directions.extend(map_to_hyperplane(&archive.members().objectives(), &z_min));
                }
                reference = ReferenceVectorSet::from_directions(directions)?;
            }
        }

        let ctx = ApdContext { t, t_max, alpha: config.alpha, m };
        population = environmental_selection(&combined, &reference, &ctx, &z_min, n)?;

        if let Some(obs) = observer.as_mut() {
            obs(&GenerationReport {
                t,
                max_generations: t_max,
                population: &population,
                archive_len: archive.len(),
                nodes: network.len(),
                components: connected_components(&network).count,
                threshold: Some(threshold),
                network: Some(&network),
            });
        }
    }
    Ok(RveaCaOutcome { population, archive, network, reference, threshold, evaluations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moo::dominates_unchecked;
    use crate::problems::{ProblemKind, ProblemSpec};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn freeze_boundary() {
        assert_eq!(RveaCaConfig::new(10, 10).freeze_generation(), 9);
        assert_eq!(RveaCaConfig::new(10, 218).freeze_generation(), 196);
    }

    #[test]
    fn run_is_deterministic_and_keeps_invariants() {
        let p = ProblemSpec::new(ProblemKind::Dtlz2, 3).unwrap();
        let cfg = RveaCaConfig { lambda: 20, ..RveaCaConfig::new(20, 10) };
        let mut archive_ok = true;
        let mut sizes = Vec::new();
        let mut obs = |r: &GenerationReport<'_>| {
            sizes.push(r.population.len());
            archive_ok &= r.archive_len <= 40;
        };
        let a = run_rvea_ca(&p, &cfg, &mut ChaCha8Rng::seed_from_u64(9), Some(&mut obs)).unwrap();
        let b = run_rvea_ca(&p, &cfg, &mut ChaCha8Rng::seed_from_u64(9), None).unwrap();
        assert_eq!(a.population, b.population);
        assert!(archive_ok);
        assert_eq!(sizes, alloc::vec![20; 10]);
        assert_eq!(a.evaluations, 20 * 11);
        let f = a.archive.members().objectives();
        assert!(f.iter().all(|x| !f.iter().any(|y| dominates_unchecked(y, x))));
    }

    #[test]
    fn rejects_tiny_population() {
        let p = ProblemSpec::new(ProblemKind::Dtlz2, 3).unwrap();
        assert!(run_rvea_ca(&p, &RveaCaConfig::new(1, 5), &mut ChaCha8Rng::seed_from_u64(0), None).is_err());
    }
}
