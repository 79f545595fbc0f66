//! Offspring generation: simulated binary crossover (SBX), polynomial
//! mutation (PM) and uniform random initialization.
//!
//! Both operators follow the formulation used by PlatEMO's `OperatorGA`:
//! SBX draws a spread factor per variable and keeps the first child, PM uses
//! the boundary-aware polynomial perturbation.

use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;

use rand::Rng;

use crate::moo::{Bounds, Individual, Population};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationParams {
    /// SBX distribution index.
    pub eta_c: f64,
    /// Probability that a mating event applies crossover at all.
    pub p_c: f64,
    /// PM distribution index.
    pub eta_m: f64,
    /// Per-variable mutation probability.
    pub p_m: f64,
}

impl VariationParams {
    /// `eta_c = 20`, `p_c = 1`, `eta_m = 20`, `p_m = 1/D`.
    pub fn for_dimension(d: usize) -> Self {
        Self { eta_c: 20.0, p_c: 1.0, eta_m: 20.0, p_m: 1.0 / d.max(1) as f64 }
    }
}

/// One SBX child of `p1` and `p2`.
///
/// Each variable exchanges with probability 0.5; a variable that does not
/// exchange (or the whole child, with probability `1 − p_c`) copies `p1`.
pub fn sbx_crossover<R: Rng + ?Sized>(
    p1: &[f64],
    p2: &[f64],
    bounds: &Bounds,
    params: &VariationParams,
    rng: &mut R,
) -> Vec<f64> {
    debug_assert_eq!(p1.len(), p2.len());
    let skip_all = rng.gen::<f64>() > params.p_c;
    let exponent = 1.0 / (params.eta_c + 1.0);
    let mut child = Vec::with_capacity(p1.len());
    for (a, b) in p1.iter().zip(p2) {
        let mu: f64 = rng.gen();
        let flip: bool = rng.gen();
        let keep: bool = rng.gen::<f64>() < 0.5;
        let mut beta = if mu <= 0.5 { (2.0 * mu).powf(exponent) } else { (2.0 - 2.0 * mu).powf(-exponent) };
        if flip {
            beta = -beta;
        }
        if keep || skip_all {
            child.push(*a);
        } else {
            child.push(0.5 * (a + b) + beta * 0.5 * (a - b));
        }
    }
    bounds.clamp(&mut child);
    child
}

/// Polynomial mutation. Each variable is perturbed with probability `p_m`.
pub fn polynomial_mutation<R: Rng + ?Sized>(
    p: &[f64],
    bounds: &Bounds,
    params: &VariationParams,
    rng: &mut R,
) -> Vec<f64> {
    let mut out = p.to_vec();
    bounds.clamp(&mut out);
    let exponent = 1.0 / (params.eta_m + 1.0);
    for (i, v) in out.iter_mut().enumerate() {
        let site = rng.gen::<f64>() < params.p_m;
        let mu: f64 = rng.gen();
        if !site {
            continue;
        }
        let (lo, hi) = (bounds.lower()[i], bounds.upper()[i]);
        let span = hi - lo;
        if span <= 0.0 {
            continue;
        }
        let delta = if mu <= 0.5 {
            let t = 1.0 - (*v - lo) / span;
            (2.0 * mu + (1.0 - 2.0 * mu) * t.powf(params.eta_m + 1.0)).powf(exponent) - 1.0
        } else {
            let t = 1.0 - (hi - *v) / span;
            1.0 - (2.0 * (1.0 - mu) + 2.0 * (mu - 0.5) * t.powf(params.eta_m + 1.0)).powf(exponent)
        };
        *v = (*v + span * delta).clamp(lo, hi);
    }
    out
}

/// `n` unevaluated individuals drawn uniformly from the box.
pub fn random_init<R: Rng + ?Sized>(n: usize, bounds: &Bounds, rng: &mut R) -> Population {
    (0..n)
        .map(|_| {
            let x = bounds
                .lower()
                .iter()
                .zip(bounds.upper())
                .map(|(&lo, &hi)| lo + (hi - lo) * rng.gen::<f64>())
                .collect();
            Individual::new(x)
        })
        .collect()
}
