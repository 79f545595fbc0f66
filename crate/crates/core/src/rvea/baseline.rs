//! The canonical reference-vector-guided EA with periodic reference vector
//! adaptation, used as the comparison baseline.

use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;

use rand::Rng;

use super::reference::{das_dennis, lattice_divisions_for, ReferenceVectorSet};
use super::report::{GenerationReport, Observer};
use super::selection::{apd_select, ApdContext};
use crate::error::{Error, Result};
use crate::moo::{IdealPoint, Individual, Population};
use crate::problems::Problem;
use crate::variation::{polynomial_mutation, random_init, sbx_crossover, VariationParams};

#[derive(Debug, Clone, PartialEq)]
pub struct RveaConfig {
    pub population_size: usize,
    pub max_generations: usize,
    /// APD penalty growth exponent.
    pub alpha: f64,
    /// Reference vectors are rescaled every `ceil(fr·t_max)` generations.
    pub adaptation_frequency: f64,
    /// `None` selects the defaults for the problem's dimension.
    pub variation: Option<VariationParams>,
}

impl RveaConfig {
    pub fn new(population_size: usize, max_generations: usize) -> Self {
        Self { population_size, max_generations, alpha: 2.0, adaptation_frequency: 0.1, variation: None }
    }
}

#[derive(Debug, Clone)]
pub struct RveaOutcome {
    pub population: Population,
    pub reference: ReferenceVectorSet,
    pub evaluations: usize,
}

/// `n` offspring, each from two uniformly drawn parents.
pub(crate) fn random_mating<R: Rng + ?Sized>(
    parents: &Population,
    n: usize,
    bounds: &crate::Bounds,
    params: &VariationParams,
    rng: &mut R,
) -> Population {
    let len = parents.len();
    (0..n)
        .map(|_| {
            let a = rng.gen_range(0..len);
            let b = if len > 1 { (a + rng.gen_range(1..len)) % len } else { a };
            let child = sbx_crossover(&parents[a].x, &parents[b].x, bounds, params, rng);
            Individual::new(polynomial_mutation(&child, bounds, params, rng))
        })
        .collect()
}

/// `V0 ∘ (z_max − z_min)`, normalized. Zero spans are floored so that no
/// vector degenerates.
fn adapt_vectors(initial: &ReferenceVectorSet, population: &Population) -> Result<ReferenceVectorSet> {
    let objectives = population.objectives();
    let m = initial.dim();
    let mut lo = alloc::vec![f64::INFINITY; m];
    let mut hi = alloc::vec![f64::NEG_INFINITY; m];
    for f in &objectives {
        for j in 0..m {
            lo[j] = lo[j].min(f[j]);
            hi[j] = hi[j].max(f[j]);
        }
    }
    let span: Vec<f64> = lo.iter().zip(&hi).map(|(a, b)| (b - a).max(1e-12)).collect();
    ReferenceVectorSet::from_directions(
        initial.vectors().iter().map(|v| v.iter().zip(&span).map(|(a, b)| a * b).collect::<Vec<f64>>()),
    )
}

/// Runs the baseline for `max_generations` generations of `N` offspring each.
///
/// Selection keeps one APD winner per nonempty reference vector, so the
/// population may shrink below `N`.
pub fn run_rvea_baseline<P, R>(
    problem: &P,
    config: &RveaConfig,
    rng: &mut R,
    mut observer: Option<Observer<'_>>,
) -> Result<RveaOutcome>
where
    P: Problem + ?Sized,
    R: Rng + ?Sized,
{
    let n = config.population_size;
    if n < 2 {
        return Err(Error::InvalidArgument("population size must be at least 2"));
    }
    let m = problem.num_objectives();
    let bounds = problem.bounds().clone();
    let params = config.variation.unwrap_or_else(|| VariationParams::for_dimension(bounds.dim()));
    let initial = das_dennis(m, lattice_divisions_for(m, n))?;
    let mut reference = initial.clone();
    let period = ((config.adaptation_frequency * config.max_generations as f64).ceil() as usize).max(1);

    let mut population = random_init(n, &bounds, rng);
    problem.evaluate_population(&mut population, 0)?;
    let mut evaluations = n;

    for t in 1..=config.max_generations {
        let mut offspring = random_mating(&population, n, &bounds, &params, rng);
        problem.evaluate_population(&mut offspring, t)?;
        evaluations += offspring.len();

        let mut combined = population;
        combined.extend(offspring.into_members());
        let z_min = IdealPoint::from_objectives(combined.objectives())?;
        let translated: Vec<Vec<f64>> = combined.iter().map(|s| z_min.translate(s.objectives())).collect();
        let ctx = ApdContext { t, t_max: config.max_generations, alpha: config.alpha, m };
        let mut kept = apd_select(&translated, &reference, &ctx);
        kept.sort_unstable();
        population = combined.select(&kept);

        if t % period == 0 {
            reference = adapt_vectors(&initial, &population)?;
        }
        if let Some(obs) = observer.as_mut() {
            obs(&GenerationReport {
                t,
                max_generations: config.max_generations,
                population: &population,
                archive_len: 0,
                nodes: reference.len(),
                components: 0,
                threshold: None,
                network: None,
            });
        }
    }
    Ok(RveaOutcome { population, reference, evaluations })
}
