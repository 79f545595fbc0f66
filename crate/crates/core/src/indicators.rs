//! Quality indicators on normalized objective vectors: hypervolume (exact
//! for up to three objectives, Monte Carlo otherwise) and IGD⁺.

use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::problems::{normalize_point, ReferenceFront};

pub const DEFAULT_MC_SAMPLES: u64 = 1_000_000;
pub const DEFAULT_MC_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact,
    MonteCarlo,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndicatorResult {
    pub value: f64,
    pub method: Method,
    /// Sample count and seed, for Monte Carlo estimates only.
    pub samples: Option<u64>,
    pub seed: Option<u64>,
}

impl IndicatorResult {
    fn exact(value: f64) -> Self {
        Self { value, method: Method::Exact, samples: None, seed: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HvMode {
    Exact,
    MonteCarlo { samples: u64, seed: u64 },
    /// Exact for up to three objectives, default Monte Carlo otherwise.
    Auto,
}

/// Maps vectors into the reference front's `[ideal, nadir]` box.
pub fn normalize_front<T: AsRef<[f64]>>(points: &[T], front: &ReferenceFront) -> Vec<Vec<f64>> {
    points.iter().map(|p| normalize_point(p.as_ref(), front.ideal(), front.nadir())).collect()
}

/// Hypervolume of the region dominated by `points` and bounded by `q`.
/// Points that do not strictly dominate `q` contribute nothing.
pub fn hv<T: AsRef<[f64]>>(points: &[T], q: &[f64], mode: HvMode) -> Result<IndicatorResult> {
    let m = q.len();
    for p in points {
        Error::check_len(m, p.as_ref().len())?;
    }
    let inside: Vec<&[f64]> =
        points.iter().map(AsRef::as_ref).filter(|p| p.iter().zip(q).all(|(a, b)| a < b)).collect();
    let mode = match mode {
        HvMode::Auto if m <= 3 => HvMode::Exact,
        HvMode::Auto => HvMode::MonteCarlo { samples: DEFAULT_MC_SAMPLES, seed: DEFAULT_MC_SEED },
        other => other,
    };
    match mode {
        HvMode::Exact => {
            let value = match m {
                0 => return Err(Error::UnsupportedDimension(0)),
                1 => inside.iter().map(|p| q[0] - p[0]).fold(0.0, f64::max),
                2 => hv2d(inside.iter().map(|p| (p[0], p[1])).collect(), q[0], q[1]),
                3 => hv3d(&inside, q),
                _ => return Err(Error::UnsupportedDimension(m)),
            };
            Ok(IndicatorResult::exact(value))
        }
        HvMode::MonteCarlo { samples, seed } => Ok(IndicatorResult {
            value: hv_monte_carlo(&inside, q, samples, seed),
            method: Method::MonteCarlo,
            samples: Some(samples),
            seed: Some(seed),
        }),
        HvMode::Auto => unreachable!(),
    }
}

// Sweep along the first axis, keeping a staircase in the second.
fn hv2d(mut pts: Vec<(f64, f64)>, q0: f64, q1: f64) -> f64 {
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let mut area = 0.0;
    let mut floor = q1;
    for (x, y) in pts {
        if y < floor {
            area += (q0 - x) * (floor - y);
            floor = y;
        }
    }
    area
}

// Slices along the third axis; each slab's area is a 2D hypervolume.
fn hv3d(points: &[&[f64]], q: &[f64]) -> f64 {
    let mut order: Vec<&[f64]> = points.to_vec();
    order.sort_by(|a, b| a[2].total_cmp(&b[2]));
    let mut volume = 0.0;
    for (i, p) in order.iter().enumerate() {
        let top = order.get(i + 1).map_or(q[2], |n| n[2]);
        let depth = top - p[2];
        if depth > 0.0 {
            let slice = order[..=i].iter().map(|s| (s[0], s[1])).collect();
            volume += depth * hv2d(slice, q[0], q[1]);
        }
    }
    volume
}

fn hv_monte_carlo(points: &[&[f64]], q: &[f64], samples: u64, seed: u64) -> f64 {
    if points.is_empty() || samples == 0 {
        return 0.0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = alloc::vec![0.0; q.len()];
    let mut hits = 0u64;
    for _ in 0..samples {
        for (v, hi) in s.iter_mut().zip(q) {
            *v = rng.gen::<f64>() * hi;
        }
        if points.iter().any(|p| p.iter().zip(&s).all(|(a, b)| a <= b)) {
            hits += 1;
        }
    }
    let volume: f64 = q.iter().product();
    volume * hits as f64 / samples as f64
}

/// IGD⁺: mean over reference points `r` of `min_p ‖max(p − r, 0)‖`.
pub fn igd_plus<T: AsRef<[f64]>, U: AsRef<[f64]>>(points: &[T], reference: &[U]) -> Result<IndicatorResult> {
    if points.is_empty() {
        return Err(Error::EmptyPopulation);
    }
    if reference.is_empty() {
        return Err(Error::InvalidArgument("reference front is empty"));
    }
    let m = reference[0].as_ref().len();
    for p in points {
        Error::check_len(m, p.as_ref().len())?;
    }
    let total: f64 = reference
        .iter()
        .map(|r| {
            let r = r.as_ref();
            points
                .iter()
                .map(|p| p.as_ref().iter().zip(r).map(|(a, b)| (a - b).max(0.0).powi(2)).sum::<f64>())
                .fold(f64::INFINITY, f64::min)
                .sqrt()
        })
        .sum();
    Ok(IndicatorResult::exact(total / reference.len() as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const Q2: [f64; 2] = [1.5, 1.5];

    #[test]
    fn hv_examples() {
        assert_eq!(hv(&[[0.0, 0.0]], &Q2, HvMode::Exact).unwrap().value, 2.25);
        assert_eq!(hv(&[[0.0, 1.0], [1.0, 0.0]], &Q2, HvMode::Exact).unwrap().value, 1.25);
        assert_eq!(hv(&[[2.0, 0.0]], &Q2, HvMode::Exact).unwrap().value, 0.0);
        let empty: [[f64; 2]; 0] = [];
        assert_eq!(hv(&empty, &Q2, HvMode::Auto).unwrap().value, 0.0);
    }

    #[test]
    fn hv_monte_carlo_close_to_exact() {
        let r = hv(&[[0.0, 1.0], [1.0, 0.0]], &Q2, HvMode::Auto).unwrap();
        assert_eq!(r.method, Method::Exact);
        let mc = hv(&[[0.0, 1.0], [1.0, 0.0]], &Q2, HvMode::MonteCarlo { samples: 1_000_000, seed: 7 }).unwrap();
        assert!((mc.value - 1.25).abs() / 1.25 < 0.01, "{}", mc.value);
        assert_eq!(mc.samples, Some(1_000_000));
    }

    #[test]
    fn hv3d_matches_boxes() {
        // two unit-depth slabs of area 0.5 overlapping in a 0.5×0.5 column
        let pts = [[0.5, 0.0, 0.0], [0.0, 0.5, 0.0]];
        let q = [1.0, 1.0, 1.0];
        let v = hv(&pts, &q, HvMode::Exact).unwrap().value;
        assert!((v - (0.5 + 0.5 - 0.25)).abs() < 1e-12);
        assert!(matches!(hv(&[[0.0; 4]], &[1.0; 4], HvMode::Exact), Err(Error::UnsupportedDimension(4))));
    }

    #[test]
    fn igd_plus_examples() {
        assert_eq!(igd_plus(&[[1.0, 1.0]], &[[0.0, 0.0]]).unwrap().value, 2f64.sqrt());
        assert_eq!(igd_plus(&[[0.0, 1.0]], &[[1.0, 0.0]]).unwrap().value, 1.0);
        let r = [[0.0, 1.0], [1.0, 0.0]];
        assert_eq!(igd_plus(&[[1.0, 0.0], [0.0, 1.0], [2.0, 2.0]], &r).unwrap().value, 0.0);
        let none: [[f64; 2]; 0] = [];
        assert_eq!(igd_plus(&none, &r), Err(Error::EmptyPopulation));
    }

    #[test]
    fn normalization_examples() {
        let front = ReferenceFront::from_points(vec![vec![0.0, 4.0], vec![4.0, 0.0]]).unwrap();
        assert_eq!(normalize_front(&[[2.0, 2.0], [0.0, 0.0], [4.0, 4.0]], &front), vec![
            vec![0.5, 0.5],
            vec![0.0, 0.0],
            vec![1.0, 1.0]
        ]);
    }
}
