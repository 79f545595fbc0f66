use alloc::vec::Vec;

#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;


use crate::error::{Error, Result};
use crate::math::median_in_place;

/// Lower bound applied to an estimated kernel bandwidth. A window with zero
/// spread would otherwise produce `σ = 0`, for which the CIM is undefined.
pub const BANDWIDTH_FLOOR: f64 = 1e-6;

/// Correntropy-induced metric with a Gaussian kernel of bandwidth `sigma`:
/// `sqrt(1 − mean_i exp(−(x_i − y_i)² / 2σ²))`, which lies in `[0, 1]`.
pub fn cim(x: &[f64], y: &[f64], sigma: f64) -> Result<f64> {
    Error::check_len(x.len(), y.len())?;
    if x.is_empty() {
        return Err(Error::InvalidArgument("CIM needs at least one dimension"));
    }
    if sigma.is_nan() || sigma <= 0.0 {
        return Err(Error::InvalidArgument("kernel bandwidth must be positive"));
    }
    Ok(cim_unchecked(x, y, sigma))
}

#[inline]
pub(crate) fn cim_unchecked(x: &[f64], y: &[f64], sigma: f64) -> f64 {
    let scale = -0.5 / (sigma * sigma);
    let correntropy = x.iter().zip(y).map(|(a, b)| ((a - b) * (a - b) * scale).exp()).sum::<f64>() / x.len() as f64;
    // rounding can push the mean a hair above 1
    (1.0 - correntropy).max(0.0).sqrt()
}

/// Representative kernel bandwidth of a window of instances.
///
/// Per dimension `j`, `Σ_j = (4 / (2 + d))^(1/(4+d)) · std_j · λ^(−1/(4+d))`
/// with `λ` the window length and `std_j` the population standard
/// deviation; the result is the median of `Σ`, floored at
/// [`BANDWIDTH_FLOOR`]. An empty window yields the floor.
pub fn estimate_bandwidth<T: AsRef<[f64]>>(window: &[T]) -> f64 {
    let Some(first) = window.first() else {
        return BANDWIDTH_FLOOR;
    };
    let d = first.as_ref().len();
    if d == 0 {
        return BANDWIDTH_FLOOR;
    }
    let n = window.len() as f64;
    let dim = d as f64;
    let factor = (4.0 / (2.0 + dim)).powf(1.0 / (4.0 + dim)) * n.powf(-1.0 / (4.0 + dim));

    let mut sigmas: Vec<f64> = (0..d)
        .map(|j| {
            let mean = window.iter().map(|x| x.as_ref()[j]).sum::<f64>() / n;
            let var = window.iter().map(|x| (x.as_ref()[j] - mean).powi(2)).sum::<f64>() / n;
            factor * var.sqrt()
        })
        .collect();
    median_in_place(&mut sigmas).max(BANDWIDTH_FLOOR)
}
