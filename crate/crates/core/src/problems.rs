//! Scalable box-constrained benchmark problems and samplers for their true
//! Pareto fronts.
//!
//! Formulas follow the MaF suite as distributed with PlatEMO; DTLZ2 and DTLZ7
//! use their original definitions (DTLZ7 is identical to MaF7).

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};
use core::fmt;
use core::str::FromStr;

#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;


use crate::error::{Error, Result};
use crate::moo::{nondominated_indices, Bounds, Population};
use crate::rvea::simplex_lattice;

/// Objective function of a box-constrained minimization problem.
pub trait Problem {
    fn num_objectives(&self) -> usize;

    fn bounds(&self) -> &Bounds;

    fn num_variables(&self) -> usize {
        self.bounds().dim()
    }

    fn evaluate(&self, x: &[f64]) -> Result<Vec<f64>>;

    /// Evaluates every unevaluated member in place.
    fn evaluate_population(&self, population: &mut Population, generation: usize) -> Result<()> {
        let members = core::mem::take(population).into_members();
        let mut out = Population::with_capacity(members.len());
        for mut m in members {
            if m.f.is_none() {
                let f = self
                    .evaluate(&m.x)
                    .map_err(|e| Error::Evaluation { generation, source: alloc::boxed::Box::new(e) })?;
                m.f = Some(f);
            }
            out.push(m);
        }
        *population = out;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProblemKind {
    Dtlz2,
    Dtlz7,
    MaF1,
    MaF2,
    MaF3,
    MaF4,
    MaF5,
    MaF6,
    MaF7,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 9] = [
        ProblemKind::Dtlz2,
        ProblemKind::Dtlz7,
        ProblemKind::MaF1,
        ProblemKind::MaF2,
        ProblemKind::MaF3,
        ProblemKind::MaF4,
        ProblemKind::MaF5,
        ProblemKind::MaF6,
        ProblemKind::MaF7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Dtlz2 => "DTLZ2",
            ProblemKind::Dtlz7 => "DTLZ7",
            ProblemKind::MaF1 => "MaF1",
            ProblemKind::MaF2 => "MaF2",
            ProblemKind::MaF3 => "MaF3",
            ProblemKind::MaF4 => "MaF4",
            ProblemKind::MaF5 => "MaF5",
            ProblemKind::MaF6 => "MaF6",
            ProblemKind::MaF7 => "MaF7",
        }
    }

    /// Number of distance variables.
    pub fn default_k(self) -> usize {
        match self {
            ProblemKind::Dtlz7 | ProblemKind::MaF7 => 20,
            _ => 10,
        }
    }

    /// Value of every distance variable on the Pareto set.
    pub fn optimal_distance_value(self) -> f64 {
        match self {
            ProblemKind::Dtlz7 | ProblemKind::MaF7 => 0.0,
            _ => 0.5,
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProblemKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or(Error::InvalidArgument("unknown problem name"))
    }
}

/// A concrete problem instance: kind, objective count and decision space.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub kind: ProblemKind,
    pub m: usize,
    pub d: usize,
    bounds: Bounds,
}

impl ProblemSpec {
    /// Instance with the suite's default number of distance variables.
    pub fn new(kind: ProblemKind, m: usize) -> Result<Self> {
        Self::with_k(kind, m, kind.default_k())
    }

    pub fn with_k(kind: ProblemKind, m: usize, k: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument("problems need at least 2 objectives"));
        }
        if k < 1 {
            return Err(Error::InvalidArgument("problems need at least 1 distance variable"));
        }
        let d = m + k - 1;
        Ok(Self { kind, m, d, bounds: Bounds::unit(d) })
    }

    pub fn name(&self) -> String {
        String::from(self.kind.name())
    }

    /// A Pareto-optimal decision vector with the given position variables.
    pub fn optimal_decision(&self, position: &[f64]) -> Vec<f64> {
        let mut x = position.to_vec();
        x.resize(self.d, self.kind.optimal_distance_value());
        x
    }
}

impl Problem for ProblemSpec {
    fn num_objectives(&self) -> usize {
        self.m
    }

    fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    fn evaluate(&self, x: &[f64]) -> Result<Vec<f64>> {
        Error::check_len(self.d, x.len())?;
        let m = self.m;
        let (position, distance) = x.split_at(m - 1);
        let f = match self.kind {
            ProblemKind::Dtlz2 => {
                let g = sum_sq_offset(distance);
                scaled_sphere(position, 1.0 + g)
            }
            ProblemKind::MaF1 => {
                let g = sum_sq_offset(distance);
                inverted_linear(position).into_iter().map(|v| (1.0 + g) * (1.0 - v)).collect()
            }
            ProblemKind::MaF2 => maf2(x, m),
            ProblemKind::MaF3 => {
                let y = scaled_sphere(position, 1.0 + rastrigin_g(distance));
                y.iter().enumerate().map(|(i, v)| if i + 1 < m { v.powi(4) } else { v.powi(2) }).collect()
            }
            ProblemKind::MaF4 => {
                let s = 1.0 + rastrigin_g(distance);
                let y = scaled_sphere(position, 1.0);
                y.iter().enumerate().map(|(i, v)| (s - s * v) * 2f64.powi(i as i32 + 1)).collect()
            }
            ProblemKind::MaF5 => {
                let g = sum_sq_offset(distance);
                let biased: Vec<f64> = position.iter().map(|v| v.powi(100)).collect();
                let y = scaled_sphere(&biased, 1.0 + g);
                y.iter().enumerate().map(|(i, v)| v * 2f64.powi((m - i) as i32)).collect()
            }
            ProblemKind::MaF6 => {
                let g = sum_sq_offset(distance);
                let theta: Vec<f64> = position
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if i == 0 { v } else { (1.0 + 2.0 * g * v) / (2.0 + 2.0 * g) })
                    .collect();
                scaled_sphere(&theta, 1.0 + 100.0 * g)
            }
            ProblemKind::Dtlz7 | ProblemKind::MaF7 => {
                let g = 1.0 + 9.0 * distance.iter().sum::<f64>() / distance.len() as f64;
                let h = m as f64 - position.iter().map(|&v| v / (1.0 + g) * (1.0 + (3.0 * PI * v).sin())).sum::<f64>();
                let mut f = position.to_vec();
                f.push((1.0 + g) * h);
                f
            }
        };
        Ok(f)
    }
}

fn sum_sq_offset(distance: &[f64]) -> f64 {
    distance.iter().map(|v| (v - 0.5) * (v - 0.5)).sum()
}

fn rastrigin_g(distance: &[f64]) -> f64 {
    100.0 * (distance.len() as f64 + distance.iter().map(|v| (v - 0.5).powi(2) - (20.0 * PI * (v - 0.5)).cos()).sum::<f64>())
}

/// `scale · (Π cos, …, cos·sin, sin)` on the position variables, with
/// angles `x_i·π/2`.
fn scaled_sphere(position: &[f64], scale: f64) -> Vec<f64> {
    let m = position.len() + 1;
    (0..m)
        .map(|i| {
            // objective i uses cos of the first m-1-i angles and sin of the next one
            let cos_count = m - 1 - i;
            let mut v = scale;
            for p in &position[..cos_count] {
                v *= (p * FRAC_PI_2).cos();
            }
            if i > 0 {
                v *= (position[cos_count] * FRAC_PI_2).sin();
            }
            v
        })
        .collect()
}

/// The linear DTLZ1 shape without its 1/2 factor: `(Π x, …, x·(1−x), 1−x)`.
fn inverted_linear(position: &[f64]) -> Vec<f64> {
    let m = position.len() + 1;
    (0..m)
        .map(|i| {
            let prod_count = m - 1 - i;
            let mut v: f64 = position[..prod_count].iter().product();
            if i > 0 {
                v *= 1.0 - position[prod_count];
            }
            v
        })
        .collect()
}

fn maf2(x: &[f64], m: usize) -> Vec<f64> {
    let d = x.len();
    let theta: Vec<f64> = x[..m - 1].iter().map(|v| v / 2.0 + 0.25).collect();
    let group = (d - m + 1) / m;
    let sphere = scaled_sphere(&theta, 1.0);
    (0..m)
        .map(|i| {
            let start = m - 1 + i * group;
            let end = if i + 1 < m { start + group } else { d };
            let g: f64 = x[start..end].iter().map(|v| (v / 2.0 + 0.25 - 0.5).powi(2)).sum();
            (1.0 + g) * sphere[i]
        })
        .collect()
}

/// Sampled true Pareto front with its ideal and nadir points.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceFront {
    points: Vec<Vec<f64>>,
    normalized: Vec<Vec<f64>>,
    ideal: Vec<f64>,
    nadir: Vec<f64>,
}

impl ReferenceFront {
    pub fn from_points(points: Vec<Vec<f64>>) -> Result<Self> {
        let first = points.first().ok_or(Error::InvalidArgument("reference front is empty"))?;
        let m = first.len();
        let mut ideal = first.clone();
        let mut nadir = first.clone();
        for p in &points {
            Error::check_len(m, p.len())?;
            for j in 0..m {
                ideal[j] = ideal[j].min(p[j]);
                nadir[j] = nadir[j].max(p[j]);
            }
        }
        let normalized = points.iter().map(|p| normalize_point(p, &ideal, &nadir)).collect();
        Ok(Self { points, normalized, ideal, nadir })
    }

    /// Points in raw objective space.
    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    /// Points min–max normalized to `[0, 1]^M`.
    pub fn normalized(&self) -> &[Vec<f64>] {
        &self.normalized
    }

    pub fn ideal(&self) -> &[f64] {
        &self.ideal
    }

    pub fn nadir(&self) -> &[f64] {
        &self.nadir
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.ideal.len()
    }
}

/// `(f − ideal) / (nadir − ideal)` componentwise; a zero span maps to 0.
pub(crate) fn normalize_point(f: &[f64], ideal: &[f64], nadir: &[f64]) -> Vec<f64> {
    f.iter()
        .zip(ideal.iter().zip(nadir))
        .map(|(v, (lo, hi))| {
            let span = hi - lo;
            if span > 0.0 {
                (v - lo) / span
            } else {
                0.0
            }
        })
        .collect()
}

/// Points per axis of a full grid in `dims` dimensions with at most `target` points.
fn grid_resolution(target: usize, dims: usize) -> usize {
    let mut p = 2;
    while (p + 1usize).checked_pow(dims as u32).is_some_and(|c| c <= target) {
        p += 1;
    }
    p
}

fn grid(dims: usize, per_axis: usize) -> Vec<Vec<f64>> {
    let mut out = alloc::vec![Vec::new()];
    let step = 1.0 / (per_axis - 1) as f64;
    for _ in 0..dims {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..per_axis).map(move |i| {
                    let mut v = prefix.clone();
                    v.push(i as f64 * step);
                    v
                })
            })
            .collect();
    }
    out
}

fn unit_sphere(w: &[f64]) -> Vec<f64> {
    let n = w.iter().map(|v| v * v).sum::<f64>().sqrt();
    w.iter().map(|v| v / n).collect()
}

/// Samples about `target_count` points of the true Pareto front.
///
/// Concave sphere fronts project a simplex lattice onto the sphere; MaF1
/// inverts the lattice; MaF2 and MaF6 evaluate a grid of position variables
/// at the optimal distance setting; MaF7/DTLZ7 enumerate the non-dominated
/// segments on a grid and filter out dominated points.
pub fn reference_front(spec: &ProblemSpec, target_count: usize) -> Result<ReferenceFront> {
    let m = spec.m;
    if target_count < m {
        return Err(Error::InvalidArgument("reference front needs at least M points"));
    }
    let lattice = || simplex_lattice(m, crate::rvea::lattice_divisions_for(m, target_count));
    let eval_grid = |dims: usize| -> Result<Vec<Vec<f64>>> {
        let per_axis = grid_resolution(target_count, dims);
        grid(dims, per_axis)
            .into_iter()
            .map(|g| {
                let mut position = g;
                position.resize(m - 1, 0.5);
                spec.evaluate(&spec.optimal_decision(&position))
            })
            .collect()
    };
    let points: Vec<Vec<f64>> = match spec.kind {
        ProblemKind::Dtlz2 => lattice().iter().map(|w| unit_sphere(w)).collect(),
        ProblemKind::MaF1 => lattice().into_iter().map(|w| w.into_iter().map(|v| 1.0 - v).collect()).collect(),
        ProblemKind::MaF2 => eval_grid(m - 1)?,
        ProblemKind::MaF3 => lattice()
            .into_iter()
            .map(|w| w.iter().enumerate().map(|(i, v)| if i + 1 < m { v * v } else { *v }).collect())
            .collect(),
        ProblemKind::MaF4 => lattice()
            .iter()
            .map(|w| unit_sphere(w).iter().enumerate().map(|(i, u)| (1.0 - u) * 2f64.powi(i as i32 + 1)).collect())
            .collect(),
        ProblemKind::MaF5 => lattice()
            .iter()
            .map(|w| unit_sphere(w).iter().enumerate().map(|(i, u)| u * 2f64.powi((m - i) as i32)).collect())
            .collect(),
        ProblemKind::MaF6 => eval_grid(1)?,
        ProblemKind::Dtlz7 | ProblemKind::MaF7 => disconnected_front(spec, target_count)?,
    };
    ReferenceFront::from_points(points)
}

// Non-dominated position intervals of the DTLZ7 front.
const DTLZ7_SEGMENTS: [(f64, f64); 2] = [(0.0, 0.251412), (0.631627, 0.859401)];

fn disconnected_front(spec: &ProblemSpec, target_count: usize) -> Result<Vec<Vec<f64>>> {
    let m = spec.m;
    let per_axis = grid_resolution(target_count, m - 1);
    let [a, b] = DTLZ7_SEGMENTS;
    let first_len = a.1 - a.0;
    let split = first_len / (first_len + (b.1 - b.0));
    let points = grid(m - 1, per_axis)
        .into_iter()
        .map(|g| {
            let position: Vec<f64> = g
                .into_iter()
                .map(|u| if u <= split { a.0 + u / split * first_len } else { b.0 + (u - split) / (1.0 - split) * (b.1 - b.0) })
                .collect();
            spec.evaluate(&spec.optimal_decision(&position))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(nondominated_indices(&points).into_iter().map(|i| points[i].clone()).collect())
}
