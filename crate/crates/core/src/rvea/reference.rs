use alloc::collections::BTreeSet;
use alloc::vec::Vec;


use crate::error::{Error, Result};
use crate::math::{clamped_acos, dot, norm};

/// Smallest neighbor angle (radians) assigned to a reference vector.
pub const GAMMA_FLOOR: f64 = 1e-6;

/// Angle between two nonzero vectors, in `[0, π]`.
pub fn angle(a: &[f64], b: &[f64]) -> Result<f64> {
    Error::check_len(a.len(), b.len())?;
    let (na, nb) = (norm(a), norm(b));
    if na == 0.0 || nb == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(clamped_acos(dot(a, b) / (na * nb)))
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Integer numerators of every simplex-lattice point with `h` divisions in
/// `m` dimensions: all `(k_1, …, k_m)` with `k_i ≥ 0` and `Σ k_i = h`, in
/// lexicographic order.
fn lattice_numerators(m: usize, h: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() + 1 == m {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in 0..=left {
            prefix.push(k);
            rec(m, left - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(binomial(h + m - 1, m - 1));
    if m > 0 {
        rec(m, h, &mut Vec::with_capacity(m), &mut out);
    }
    out
}

/// Uniform weight vectors on the unit simplex with components in
/// `{0, 1/h, …, 1}` (not normalized). There are `C(h + m − 1, m − 1)` of them.
pub fn simplex_lattice(m: usize, h: usize) -> Vec<Vec<f64>> {
    lattice_numerators(m, h).into_iter().map(|k| k.into_iter().map(|v| v as f64 / h as f64).collect()).collect()
}

/// Largest number of divisions whose lattice has at most `n` points (at least 1).
pub fn lattice_divisions_for(m: usize, n: usize) -> usize {
    let mut h = 1;
    while binomial(h + m, m - 1) <= n {
        h += 1;
    }
    h
}

/// Das–Dennis reference vectors: the simplex lattice, L2-normalized.
pub fn das_dennis(m: usize, h: usize) -> Result<ReferenceVectorSet> {
    if m < 2 || h < 1 {
        return Err(Error::InvalidArgument("Das-Dennis needs at least 2 objectives and 1 division"));
    }
    ReferenceVectorSet::from_directions(simplex_lattice(m, h))
}

/// Unit reference vectors with each vector's minimum angle to the others.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceVectorSet {
    vectors: Vec<Vec<f64>>,
    gamma: Vec<f64>,
}

impl ReferenceVectorSet {
    /// Normalizes the given directions, drops exact duplicates (after
    /// normalization) and computes the neighbor angles `γ`.
    pub fn from_directions<I>(directions: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<f64>>,
    {
        let mut seen = BTreeSet::new();
        let mut vectors = Vec::new();
        let mut dim = None;
        for mut v in directions {
            Error::check_len(*dim.get_or_insert(v.len()), v.len())?;
            let n = norm(&v);
            if n == 0.0 || !n.is_finite() {
                return Err(Error::ZeroVector);
            }
            v.iter_mut().for_each(|x| *x /= n);
            if seen.insert(v.iter().map(|x| x.to_bits()).collect::<Vec<_>>()) {
                vectors.push(v);
            }
        }
        if vectors.is_empty() {
            return Err(Error::InvalidArgument("reference vector set is empty"));
        }
        let gamma = neighbor_angles(&vectors);
        Ok(Self { vectors, gamma })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.vectors[0].len()
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }
}

fn neighbor_angles(vectors: &[Vec<f64>]) -> Vec<f64> {
    let k = vectors.len();
    if k == 1 {
        return alloc::vec![core::f64::consts::FRAC_PI_2];
    }
    let mut best_cos = alloc::vec![f64::NEG_INFINITY; k];
    for i in 0..k {
        for j in i + 1..k {
            let c = dot(&vectors[i], &vectors[j]);
            best_cos[i] = best_cos[i].max(c);
            best_cos[j] = best_cos[j].max(c);
        }
    }
    best_cos.into_iter().map(|c| clamped_acos(c).max(GAMMA_FLOOR)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn lattice_counts() {
        let two = simplex_lattice(2, 4);
        assert_eq!(two.len(), 5);
        assert!(two.contains(&vec![0.0, 1.0]) && two.contains(&vec![1.0, 0.0]));
        assert_eq!(simplex_lattice(3, 2).len(), 6);
        assert_eq!(das_dennis(3, 12).unwrap().len(), 91);
    }

    #[test]
    fn divisions_for_population() {
        assert_eq!(lattice_divisions_for(3, 91), 12);
        assert_eq!(lattice_divisions_for(3, 100), 12);
        assert_eq!(lattice_divisions_for(5, 210), 6);
        assert_eq!(lattice_divisions_for(3, 2), 1);
    }

    #[test]
    fn angle_examples() {
        assert!((angle(&[1.0, 0.0], &[0.0, 1.0]).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(angle(&[0.3, 0.4], &[0.6, 0.8]).unwrap(), 0.0);
        assert!((angle(&[1.0, 0.0], &[1.0, 1.0]).unwrap() - FRAC_PI_4).abs() < 1e-15);
        assert_eq!(angle(&[0.0, 0.0], &[1.0, 1.0]), Err(Error::ZeroVector));
    }

    #[test]
    fn gamma_of_small_sets() {
        let one = ReferenceVectorSet::from_directions([vec![1.0, 1.0]]).unwrap();
        assert_eq!(one.gamma(), &[FRAC_PI_2]);
        let dup = ReferenceVectorSet::from_directions([vec![1.0, 1.0], vec![2.0, 2.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(dup.len(), 2);
        assert!(dup.gamma().iter().all(|g| (g - FRAC_PI_4).abs() < 1e-12));
        let near = ReferenceVectorSet::from_directions([vec![1.0, 1.0], vec![1.0, 1.0 + 1e-15]]).unwrap();
        assert!(near.gamma().iter().all(|&g| g >= GAMMA_FLOOR));
    }

    #[test]
    fn das_dennis_rejects_degenerate_input() {
        assert!(das_dennis(1, 3).is_err());
        assert!(das_dennis(3, 0).is_err());
    }
}
