//! Problem-independent primitives: individuals, populations, Pareto dominance
//! and ideal-point tracking. All objectives are minimized.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Per-dimension box bounds of a decision space.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        Error::check_len(lower.len(), upper.len())?;
        if lower.iter().zip(&upper).any(|(lo, hi)| lo.is_nan() || hi.is_nan() || lo > hi) {
            return Err(Error::InvalidArgument("lower bound exceeds upper bound"));
        }
        Ok(Self { lower, upper })
    }

    /// The unit hypercube `[0, 1]^dim`.
    pub fn unit(dim: usize) -> Self {
        Self { lower: alloc::vec![0.0; dim], upper: alloc::vec![1.0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter().zip(self.lower.iter().zip(&self.upper)).all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    /// Clamps every coordinate into its interval.
    pub fn clamp(&self, x: &mut [f64]) {
        for (v, (lo, hi)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = v.clamp(*lo, *hi);
        }
    }
}

/// A decision vector together with its cached objective vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub x: Vec<f64>,
    pub f: Option<Vec<f64>>,
}

impl Individual {
    pub fn new(x: Vec<f64>) -> Self {
        Self { x, f: None }
    }

    pub fn evaluated(x: Vec<f64>, f: Vec<f64>) -> Self {
        Self { x, f: Some(f) }
    }

    /// Objective vector; panics on an unevaluated individual.
    pub fn objectives(&self) -> &[f64] {
        self.f.as_deref().expect("individual has not been evaluated")
    }

    pub fn try_objectives(&self) -> Result<&[f64]> {
        self.f.as_deref().ok_or(Error::NotEvaluated)
    }
}

/// An ordered sequence of individuals. Iteration order is insertion order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Population {
    members: Vec<Individual>,
}

impl Population {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        Self { members: Vec::with_capacity(n) }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn push(&mut self, individual: Individual) {
        self.members.push(individual);
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Individual> {
        self.members.iter()
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Individual> {
        self.members
    }

    pub fn get(&self, i: usize) -> Option<&Individual> {
        self.members.get(i)
    }

    /// Objective vectors of all members, in order. Panics if any member is unevaluated.
    pub fn objectives(&self) -> Vec<&[f64]> {
        self.members.iter().map(Individual::objectives).collect()
    }

    /// Cloned objective vectors of all members.
    pub fn objective_matrix(&self) -> Vec<Vec<f64>> {
        self.members.iter().map(|m| m.objectives().to_vec()).collect()
    }

    /// Picks members by index, preserving the order of `indices`.
    pub fn select(&self, indices: &[usize]) -> Population {
        indices.iter().map(|&i| self.members[i].clone()).collect()
    }

    /// Set union keyed on the decision vector: members of `other` whose
    /// decision vector already occurs in `self` are skipped.
    pub fn union_distinct(&self, other: &Population) -> Population {
        let mut seen: BTreeSet<Vec<u64>> = self.members.iter().map(|m| decision_key(&m.x)).collect();
        let mut out = self.clone();
        for m in other.iter() {
            if seen.insert(decision_key(&m.x)) {
                out.push(m.clone());
            }
        }
        out
    }
}

fn decision_key(x: &[f64]) -> Vec<u64> {
    x.iter().map(|v| v.to_bits()).collect()
}

impl FromIterator<Individual> for Population {
    fn from_iter<T: IntoIterator<Item = Individual>>(iter: T) -> Self {
        Self { members: iter.into_iter().collect() }
    }
}

impl From<Vec<Individual>> for Population {
    fn from(members: Vec<Individual>) -> Self {
        Self { members }
    }
}

impl core::ops::Index<usize> for Population {
    type Output = Individual;

    fn index(&self, i: usize) -> &Individual {
        &self.members[i]
    }
}

impl<'a> IntoIterator for &'a Population {
    type Item = &'a Individual;
    type IntoIter = core::slice::Iter<'a, Individual>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl Extend<Individual> for Population {
    fn extend<T: IntoIterator<Item = Individual>>(&mut self, iter: T) {
        self.members.extend(iter);
    }
}

/// Pareto dominance for minimization.
pub fn dominates(a: &[f64], b: &[f64]) -> Result<bool> {
    Error::check_len(a.len(), b.len())?;
    Ok(dominates_unchecked(a, b))
}

/// [`dominates`] without the length check; extra coordinates are ignored.
#[inline]
pub fn dominates_unchecked(a: &[f64], b: &[f64]) -> bool {
    let mut strictly = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strictly = true;
        }
    }
    strictly
}

/// Componentwise minimum of every objective vector observed so far.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealPoint {
    z_min: Vec<f64>,
}

impl IdealPoint {
    pub fn new(z_min: Vec<f64>) -> Self {
        Self { z_min }
    }

    /// Ideal point of a nonempty set of objective vectors.
    pub fn from_objectives<'a, I>(objectives: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a [f64]>,
    {
        let mut iter = objectives.into_iter();
        let first = iter.next().ok_or(Error::EmptyPopulation)?;
        Self::new(first.to_vec()).updated(iter)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.z_min
    }

    pub fn dim(&self) -> usize {
        self.z_min.len()
    }

    /// Returns the componentwise minimum of `self` and every vector in `objectives`.
    pub fn updated<'a, I>(&self, objectives: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a [f64]>,
    {
        let mut z = self.z_min.clone();
        for f in objectives {
            Error::check_len(z.len(), f.len())?;
            for (zi, fi) in z.iter_mut().zip(f) {
                if *fi < *zi {
                    *zi = *fi;
                }
            }
        }
        Ok(Self { z_min: z })
    }

    /// `f − z_min`.
    pub fn translate(&self, f: &[f64]) -> Vec<f64> {
        f.iter().zip(&self.z_min).map(|(a, b)| a - b).collect()
    }
}

/// Free-function form of [`IdealPoint::updated`].
pub fn update_ideal<'a, I>(z: &IdealPoint, objectives: I) -> Result<IdealPoint>
where
    I: IntoIterator<Item = &'a [f64]>,
{
    z.updated(objectives)
}

/// Indices of the members of `objectives` not dominated by any other member,
/// in their original order. Duplicates are all kept.
pub fn nondominated_indices<T: AsRef<[f64]>>(objectives: &[T]) -> Vec<usize> {
    (0..objectives.len())
        .filter(|&i| {
            let fi = objectives[i].as_ref();
            !objectives.iter().enumerate().any(|(j, fj)| j != i && dominates_unchecked(fj.as_ref(), fi))
        })
        .collect()
}

/// Members not dominated by any other member, in their original order.
pub fn nondominated_filter(population: &Population) -> Result<Population> {
    let objectives = population.iter().map(Individual::try_objectives).collect::<Result<Vec<_>>>()?;
    Ok(population.select(&nondominated_indices(&objectives)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn dominance_examples() {
        assert!(dominates(&[0.0, 0.0], &[1.0, 1.0]).unwrap());
        assert!(!dominates(&[0.0, 0.0], &[0.0, 0.0]).unwrap());
        assert!(!dominates(&[0.0, 1.0], &[1.0, 0.0]).unwrap());
        assert!(dominates(&[0.0, 1.0], &[0.0, 2.0]).unwrap());
    }

    #[test]
    fn dominance_length_mismatch() {
        assert_eq!(dominates(&[0.0], &[0.0, 1.0]), Err(Error::DimensionMismatch { expected: 1, found: 2 }));
    }

    #[test]
    fn ideal_point_examples() {
        let z = IdealPoint::new(vec![1.0, 1.0]);
        assert_eq!(z.updated([&[0.0, 2.0][..]]).unwrap().as_slice(), &[0.0, 1.0]);
        let z = IdealPoint::new(vec![0.0, 0.0]);
        assert_eq!(z.updated([&[1.0, 1.0][..]]).unwrap().as_slice(), &[0.0, 0.0]);
        let z = IdealPoint::new(vec![5.0, 5.0]);
        let f = [[3.0, 9.0], [9.0, 3.0]];
        assert_eq!(update_ideal(&z, f.iter().map(|v| &v[..])).unwrap().as_slice(), &[3.0, 3.0]);
        // empty set leaves the point unchanged
        assert_eq!(z.updated(core::iter::empty()).unwrap(), z);
    }

    fn pop(points: &[[f64; 2]]) -> Population {
        points.iter().map(|p| Individual::evaluated(p.to_vec(), p.to_vec())).collect()
    }

    #[test]
    fn filter_examples() {
        let p = pop(&[[0.0, 1.0], [1.0, 0.0], [1.0, 1.0]]);
        assert_eq!(nondominated_filter(&p).unwrap(), pop(&[[0.0, 1.0], [1.0, 0.0]]));
        let single = pop(&[[3.0, 3.0]]);
        assert_eq!(nondominated_filter(&single).unwrap(), single);
        let dup = pop(&[[0.0, 0.0], [0.0, 0.0]]);
        assert_eq!(nondominated_filter(&dup).unwrap().len(), 2);
    }

    #[test]
    fn filter_rejects_unevaluated() {
        let p: Population = [Individual::new(vec![0.0])].into_iter().collect();
        assert_eq!(nondominated_filter(&p), Err(Error::NotEvaluated));
    }

    #[test]
    fn union_skips_repeated_decisions() {
        let a = pop(&[[0.0, 1.0], [1.0, 0.0]]);
        let b = pop(&[[1.0, 0.0], [2.0, 2.0]]);
        let u = a.union_distinct(&b);
        assert_eq!(u, pop(&[[0.0, 1.0], [1.0, 0.0], [2.0, 2.0]]));
    }

    #[test]
    fn bounds_clamp() {
        let b = Bounds::new(vec![0.0, -1.0], vec![1.0, 1.0]).unwrap();
        let mut x = [2.0, -3.0];
        b.clamp(&mut x);
        assert_eq!(x, [1.0, -1.0]);
        assert!(b.contains(&x));
        assert!(Bounds::new(vec![1.0], vec![0.0]).is_err());
    }
}
