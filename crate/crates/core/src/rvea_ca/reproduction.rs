use alloc::vec::Vec;

use rand::Rng;

use crate::cim::{connected_components, TopoNetwork};
use crate::math::{dot, norm, squared_distance};
use crate::moo::{Bounds, IdealPoint, Individual, Population};
use crate::rvea::random_mating;
use crate::variation::{polynomial_mutation, sbx_crossover, VariationParams};

/// Projects `f − z_min` onto the unit simplex. Vectors whose translated sum
/// is at most 1e-12 map to the simplex center.
pub fn map_to_hyperplane<T: AsRef<[f64]>>(objectives: &[T], z_min: &IdealPoint) -> Vec<Vec<f64>> {
    objectives
        .iter()
        .map(|f| {
            let g = z_min.translate(f.as_ref());
            let s: f64 = g.iter().sum();
            if s <= 1e-12 {
                alloc::vec![1.0 / g.len() as f64; g.len()]
            } else {
                g.into_iter().map(|v| v / s).collect()
            }
        })
        .collect()
}

/// Cluster label of every solution: the component id of the node with the
/// smallest angle to `f − z_min` (lowest node id on ties; node 0 for a
/// solution on the ideal point). `None` for an empty network.
pub fn predict_labels(population: &Population, net: &TopoNetwork, z_min: &IdealPoint) -> Option<Vec<usize>> {
    if net.is_empty() {
        return None;
    }
    let components = connected_components(net);
    let nodes: Vec<(&[f64], f64)> = net.positions().map(|y| (y, norm(y))).collect();
    let labels = population
        .iter()
        .map(|s| {
            let g = z_min.translate(s.objectives());
            let gn = norm(&g);
            let mut best = (0, f64::NEG_INFINITY);
            if gn > 0.0 {
                for (k, (y, yn)) in nodes.iter().enumerate() {
                    let c = if *yn > 0.0 { dot(&g, y) / (gn * yn) } else { f64::NEG_INFINITY };
                    if c > best.1 {
                        best = (k, c);
                    }
                }
            }
            components.label(best.0)
        })
        .collect();
    Some(labels)
}

/// The solution outside `r`'s cluster closest to it in objective space
/// (lowest index on ties).
fn nearest_in_other_clusters(population: &Population, labels: &[usize], r: usize) -> usize {
    let fr = population[r].objectives();
    let mut best = (usize::MAX, f64::INFINITY);
    for (q, other) in population.iter().enumerate() {
        if labels[q] != labels[r] {
            let d = squared_distance(fr, other.objectives());
            if d < best.1 {
                best = (q, d);
            }
        }
    }
    best.0
}

/// `n` offspring mated within or across the clusters of `net`.
///
/// Each draw picks a random solution `r`. If its cluster has other members,
/// a fair coin chooses between the nearest solution (objective-space
/// Euclidean distance) from any other cluster — possible only when more than
/// one cluster is present — and a random member of its own cluster; the child
/// is `PM(SBX(p_r, mate))`. A solution alone in its cluster is only mutated.
/// An empty network falls back to random mating.
pub fn cluster_based_reproduction<R: Rng + ?Sized>(
    population: &Population,
    net: &TopoNetwork,
    z_min: &IdealPoint,
    n: usize,
    bounds: &Bounds,
    params: &VariationParams,
    rng: &mut R,
) -> Population {
    let Some(labels) = predict_labels(population, net, z_min) else {
        return random_mating(population, n, bounds, params, rng);
    };
    let len = population.len();
    let cluster_count = net.len().max(1);
    let mut clusters: Vec<Vec<usize>> = alloc::vec![Vec::new(); cluster_count];
    for (i, &l) in labels.iter().enumerate() {
        clusters[l].push(i);
    }
    let distinct = clusters.iter().filter(|c| !c.is_empty()).count();

    (0..n)
        .map(|_| {
            let r = rng.gen_range(0..len);
            let own = &clusters[labels[r]];
            let p_r = &population[r];
            if own.len() <= 1 {
                return Individual::new(polynomial_mutation(&p_r.x, bounds, params, rng));
            }
            let s: f64 = rng.gen();
            let mate = if s < 0.5 && distinct > 1 {
                nearest_in_other_clusters(population, &labels, r)
            } else {
                let pick = rng.gen_range(0..own.len() - 1);
                let pos = own.iter().position(|&i| i == r).expect("member of own cluster");
                own[if pick >= pos { pick + 1 } else { pick }]
            };
            let child = sbx_crossover(&p_r.x, &population[mate].x, bounds, params, rng);
            Individual::new(polynomial_mutation(&child, bounds, params, rng))
        })
        .collect()
}
