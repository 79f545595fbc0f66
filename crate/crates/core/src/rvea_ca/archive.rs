use alloc::vec::Vec;

use crate::error::Result;
use crate::moo::{nondominated_filter, IdealPoint, Population};

/// A bounded set of mutually non-dominated solutions.
#[derive(Debug, Clone, PartialEq)]
pub struct Archive {
    members: Population,
    capacity: usize,
}

impl Archive {
    pub fn new(capacity: usize) -> Self {
        Self { members: Population::new(), capacity }
    }

    pub fn members(&self) -> &Population {
        &self.members
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `ε(a) = min_{a′ ≠ a} max_m (a′_m − a_m)`: how far the rest of the set is
/// from covering `a`. Duplicates score 0.
pub fn additive_epsilon_contributions<T: AsRef<[f64]>>(points: &[T]) -> Vec<f64> {
    (0..points.len()).map(|i| nearest_cover(points, i, |_| true).0).collect()
}

fn eps(a: &[f64], b: &[f64]) -> f64 {
    // smallest shift such that `b − shift` weakly dominates `a`
    b.iter().zip(a).map(|(x, y)| x - y).fold(f64::NEG_INFINITY, f64::max)
}

/// Smallest `eps(points[i], points[j])` over live `j ≠ i`, and the first `j` attaining it.
fn nearest_cover<T: AsRef<[f64]>>(points: &[T], i: usize, alive: impl Fn(usize) -> bool) -> (f64, usize) {
    let mut best = (f64::INFINITY, usize::MAX);
    for j in 0..points.len() {
        if j != i && alive(j) {
            let e = eps(points[i].as_ref(), points[j].as_ref());
            if e < best.0 {
                best = (e, j);
            }
        }
    }
    best
}

/// Merges `population` into the archive.
///
/// Candidates are the non-dominated members of `population ∪ archive`
/// (repeated decision vectors counted once). While over capacity, the member
/// with the smallest ε contribution is removed, on objectives translated by
/// `z_min` and divided by the candidates' range. Ties remove the later member.
pub fn update_archive(archive: &Archive, population: &Population, z_min: &IdealPoint) -> Result<Archive> {
    let candidates = nondominated_filter(&population.union_distinct(&archive.members))?;
    let capacity = archive.capacity;
    if candidates.len() <= capacity {
        return Ok(Archive { members: candidates, capacity });
    }

    let translated: Vec<Vec<f64>> = candidates.iter().map(|s| z_min.translate(s.objectives())).collect();
    let m = z_min.dim();
    let span: Vec<f64> = (0..m)
        .map(|j| {
            let hi = translated.iter().map(|f| f[j]).fold(f64::NEG_INFINITY, f64::max);
            let lo = translated.iter().map(|f| f[j]).fold(f64::INFINITY, f64::min);
            if hi - lo > 0.0 {
                hi - lo
            } else {
                1.0
            }
        })
        .collect();
    let points: Vec<Vec<f64>> =
        translated.into_iter().map(|f| f.iter().zip(&span).map(|(v, s)| v / s).collect()).collect();

    let n = points.len();
    let mut alive = alloc::vec![true; n];
    let mut nearest: Vec<(f64, usize)> = (0..n).map(|i| nearest_cover(&points, i, |_| true)).collect();
    for _ in capacity..n {
        let mut victim = usize::MAX;
        for i in 0..n {
            if alive[i] && (victim == usize::MAX || nearest[i].0 <= nearest[victim].0) {
                victim = i;
            }
        }
        alive[victim] = false;
        for i in 0..n {
            if alive[i] && nearest[i].1 == victim {
                nearest[i] = nearest_cover(&points, i, |j| alive[j]);
            }
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
    Ok(Archive { members: candidates.select(&kept), capacity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moo::{dominates_unchecked, Individual};
    use alloc::vec;

    fn pop(points: &[(f64, [f64; 2])]) -> Population {
        points.iter().map(|(x, f)| Individual::evaluated(vec![*x], f.to_vec())).collect()
    }

    #[test]
    fn under_capacity_keeps_all_nondominated() {
        let p = pop(&[(0.0, [0.0, 1.0]), (1.0, [1.0, 0.0]), (2.0, [1.0, 1.0])]);
        let a = update_archive(&Archive::new(4), &p, &IdealPoint::new(vec![0.0, 0.0])).unwrap();
        assert_eq!(a.members(), &pop(&[(0.0, [0.0, 1.0]), (1.0, [1.0, 0.0])]));
    }

    #[test]
    fn duplicates_go_before_distinct_points() {
        // 2N = 4 copies of one objective vector plus one distinct point
        let mut pts: Vec<(f64, [f64; 2])> = (0..4).map(|i| (i as f64, [0.2, 0.8])).collect();
        pts.push((9.0, [0.8, 0.2]));
        let a = update_archive(&Archive::new(4), &pop(&pts), &IdealPoint::new(vec![0.0, 0.0])).unwrap();
        assert_eq!(a.len(), 4);
        assert!(a.members().iter().any(|s| s.x == [9.0]));
    }

    #[test]
    fn truncation_drops_most_crowded_point() {
        let p = pop(&[(0.0, [0.0, 1.0]), (1.0, [0.5, 0.5]), (2.0, [0.52, 0.48]), (3.0, [1.0, 0.0])]);
        let a = update_archive(&Archive::new(3), &p, &IdealPoint::new(vec![0.0, 0.0])).unwrap();
        let xs: Vec<f64> = a.members().iter().map(|s| s.x[0]).collect();
        assert_eq!(xs.len(), 3);
        assert!(xs.contains(&0.0) && xs.contains(&3.0));
        let f: Vec<&[f64]> = a.members().objectives();
        for x in &f {
            assert!(!f.iter().any(|y| dominates_unchecked(y, x)));
        }
    }

    #[test]
    fn contribution_examples() {
        let c = additive_epsilon_contributions(&[[0.0, 1.0], [1.0, 0.0], [0.0, 1.0]]);
        assert_eq!(c, vec![0.0, 1.0, 0.0]);
    }
}
