use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;


use super::reference::ReferenceVectorSet;
use crate::error::{Error, Result};
use crate::math::{clamped_acos, dot, norm};
use crate::moo::{IdealPoint, Population};

/// Generation-dependent parameters of the APD penalty.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApdContext {
    pub t: usize,
    pub t_max: usize,
    /// Rate exponent of the penalty growth.
    pub alpha: f64,
    /// Number of objectives.
    pub m: usize,
}

impl ApdContext {
    /// `M · (t / t_max)^α`.
    fn penalty_scale(&self) -> f64 {
        let progress = if self.t_max == 0 { 1.0 } else { (self.t as f64 / self.t_max as f64).min(1.0) };
        self.m as f64 * progress.powf(self.alpha)
    }
}

/// Angle-penalized distance `(1 + M·(t/t_max)^α·θ/γ)·‖f′‖`.
pub fn apd(f_prime: &[f64], theta: f64, ctx: &ApdContext, gamma: f64) -> f64 {
    (1.0 + ctx.penalty_scale() * theta / gamma) * norm(f_prime)
}

/// The reference vector a solution belongs to and its angle to it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Association {
    pub vector: usize,
    pub theta: f64,
}

/// Assigns each translated objective vector to the reference vector with the
/// smallest angle (lowest index on ties). A zero vector goes to vector 0 with
/// angle 0.
pub fn associate<T: AsRef<[f64]>>(translated: &[T], reference: &ReferenceVectorSet) -> Vec<Association> {
    translated
        .iter()
        .map(|f| {
            let f = f.as_ref();
            let n = norm(f);
            if n == 0.0 {
                return Association { vector: 0, theta: 0.0 };
            }
            let mut best = (0, f64::NEG_INFINITY);
            for (j, w) in reference.vectors().iter().enumerate() {
                let c = dot(f, w) / n;
                if c > best.1 {
                    best = (j, c);
                }
            }
            Association { vector: best.0, theta: clamped_acos(best.1) }
        })
        .collect()
}

/// For every reference vector with at least one associated solution, the
/// index of the solution with the smallest APD. Result is ordered by vector.
pub fn apd_select<T: AsRef<[f64]>>(translated: &[T], reference: &ReferenceVectorSet, ctx: &ApdContext) -> Vec<usize> {
    let assoc = associate(translated, reference);
    let mut best: Vec<Option<(usize, f64)>> = alloc::vec![None; reference.len()];
    for (i, a) in assoc.iter().enumerate() {
        let d = apd(translated[i].as_ref(), a.theta, ctx, reference.gamma()[a.vector]);
        let slot = &mut best[a.vector];
        if slot.is_none_or(|(_, b)| d < b) {
            *slot = Some((i, d));
        }
    }
    best.into_iter().flatten().map(|(i, _)| i).collect()
}

/// Unit direction of a translated objective vector. The zero vector (a
/// solution sitting on the ideal point) is given the central direction
/// `(1, …, 1)/√M`.
pub fn direction(f_prime: &[f64]) -> Vec<f64> {
    let n = norm(f_prime);
    if n > 0.0 {
        f_prime.iter().map(|v| v / n).collect()
    } else {
        let c = 1.0 / (f_prime.len() as f64).sqrt();
        alloc::vec![c; f_prime.len()]
    }
}

fn angle_between_units(a: &[f64], b: &[f64]) -> f64 {
    clamped_acos(dot(a, b))
}

/// APD-based environmental selection to exactly `min(n, |P|)` members.
///
/// Objectives are translated by `z_min` and every nonempty sub-population
/// keeps its APD winner. If more than `n` winners remain, the member with the
/// smallest angle to its nearest kept neighbor is dropped repeatedly. If
/// fewer remain, the unselected solution whose smallest angle to the kept set
/// is largest is added repeatedly. The returned members keep population order.
pub fn environmental_selection(
    population: &Population,
    reference: &ReferenceVectorSet,
    ctx: &ApdContext,
    z_min: &IdealPoint,
    n: usize,
) -> Result<Population> {
    if population.is_empty() {
        return Ok(Population::new());
    }
    let translated = population
        .iter()
        .map(|m| m.try_objectives().map(|f| z_min.translate(f)))
        .collect::<Result<Vec<_>>>()?;
    Error::check_len(reference.dim(), translated[0].len())?;

    let mut kept = apd_select(&translated, reference, ctx);
    let target = n.min(population.len());
    let norms: Vec<f64> = translated.iter().map(|f| norm(f)).collect();
    let dirs: Vec<Vec<f64>> = translated.iter().map(|f| direction(f)).collect();

    if kept.len() > target {
        kept = truncate_by_angle(kept, target, &dirs, &norms);
    } else if kept.len() < target {
        kept = fill_by_novelty(kept, target, &dirs, &norms);
    }
    kept.sort_unstable();
    Ok(population.select(&kept))
}

// Repeatedly removes the kept member whose nearest kept neighbor is closest
// in angle; ties remove the member farther from the ideal point, then the
// later one.
fn truncate_by_angle(kept: Vec<usize>, target: usize, dirs: &[Vec<f64>], norms: &[f64]) -> Vec<usize> {
    let k = kept.len();
    let mut angles = alloc::vec![0.0; k * k];
    for a in 0..k {
        for b in a + 1..k {
            let v = angle_between_units(&dirs[kept[a]], &dirs[kept[b]]);
            angles[a * k + b] = v;
            angles[b * k + a] = v;
        }
    }
    let mut alive = alloc::vec![true; k];
    let nearest_of = |a: usize, alive: &[bool]| {
        (0..k).filter(|&b| b != a && alive[b]).map(|b| angles[a * k + b]).fold(f64::INFINITY, f64::min)
    };
    let mut nearest: Vec<f64> = (0..k).map(|a| nearest_of(a, &alive)).collect();
    let mut remaining = k;
    while remaining > target {
        let mut victim = usize::MAX;
        for a in (0..k).filter(|&a| alive[a]) {
            if victim == usize::MAX {
                victim = a;
                continue;
            }
            let (na, nv) = (nearest[a], nearest[victim]);
            let worse = na < nv || (na == nv && norms[kept[a]] >= norms[kept[victim]]);
            if worse {
                victim = a;
            }
        }
        alive[victim] = false;
        remaining -= 1;
        for a in 0..k {
            if alive[a] && angles[a * k + victim] <= nearest[a] {
                nearest[a] = nearest_of(a, &alive);
            }
        }
    }
    (0..k).filter(|&a| alive[a]).map(|a| kept[a]).collect()
}

// Repeatedly adds the unselected solution with the largest minimum angle to
// the kept set; ties prefer the solution closer to the ideal point, then the
// earlier one.
fn fill_by_novelty(mut kept: Vec<usize>, target: usize, dirs: &[Vec<f64>], norms: &[f64]) -> Vec<usize> {
    let mut selected = alloc::vec![false; dirs.len()];
    kept.iter().for_each(|&i| selected[i] = true);
    let mut candidates: Vec<usize> = (0..dirs.len()).filter(|&i| !selected[i]).collect();
    let mut min_angle: Vec<f64> = candidates
        .iter()
        .map(|&c| kept.iter().map(|&s| angle_between_units(&dirs[c], &dirs[s])).fold(f64::INFINITY, f64::min))
        .collect();
    while kept.len() < target && !candidates.is_empty() {
        let mut pick = 0;
        for j in 1..candidates.len() {
            let (a, b) = (min_angle[j], min_angle[pick]);
            if a > b || (a == b && norms[candidates[j]] < norms[candidates[pick]]) {
                pick = j;
            }
        }
        let chosen = candidates.remove(pick);
        min_angle.remove(pick);
        kept.push(chosen);
        for (j, &c) in candidates.iter().enumerate() {
            min_angle[j] = min_angle[j].min(angle_between_units(&dirs[c], &dirs[chosen]));
        }
    }
    kept
}
