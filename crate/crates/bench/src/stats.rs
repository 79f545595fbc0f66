//! Descriptive statistics and the two-sided Wilcoxon rank-sum test.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest pooled sample size for which the null distribution is enumerated.
pub const EXACT_LIMIT: usize = 12;

/// Mean of the middle pair for even lengths. `NaN` for an empty sample.
pub fn median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

/// Sample standard deviation (`n − 1` denominator); 0 for fewer than two values.
pub fn std_dev(values: &[f64]) -> f64 {
    let n = values.len();
    if n < 2 {
        return 0.0;
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
}

/// Outcome of a comparison from the first sample's point of view.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mark {
    /// First sample significantly better.
    Better,
    /// No significant difference.
    Similar,
    /// First sample significantly worse.
    Worse,
}

impl Mark {
    pub fn symbol(self) -> &'static str {
        match self {
            Mark::Better => "+",
            Mark::Similar => "≈",
            Mark::Worse => "-",
        }
    }
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankSumResult {
    pub mark: Mark,
    pub p: f64,
    /// Rank sum of the first sample (mid-ranks for ties).
    pub w: f64,
}

/// Pooled mid-ranks, doubled so that they are integers.
fn doubled_ranks(a: &[f64], b: &[f64]) -> (Vec<u64>, Vec<usize>) {
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let mut order: Vec<usize> = (0..pooled.len()).collect();
    order.sort_by(|&i, &j| pooled[i].total_cmp(&pooled[j]));
    let mut ranks = vec![0u64; pooled.len()];
    let mut ties = Vec::new();
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && pooled[order[end]] == pooled[order[start]] {
            end += 1;
        }
        // positions start+1 ..= end share rank (start+1+end)/2
        let doubled = (start + 1 + end) as u64;
        for &i in &order[start..end] {
            ranks[i] = doubled;
        }
        ties.push(end - start);
        start = end;
    }
    (ranks, ties)
}

/// Two-sided p-value by enumerating all `C(n, n₁)` assignments of the pooled
/// (doubled) ranks to the first sample.
fn exact_p(ranks: &[u64], n1: usize, observed: u64) -> f64 {
    let total: u64 = ranks.iter().sum();
    let max = total as usize;
    // counts[k][s]: subsets of size k with doubled rank sum s
    let mut counts = vec![vec![0u64; max + 1]; n1 + 1];
    counts[0][0] = 1;
    for &r in ranks {
        for k in (1..=n1).rev() {
            for s in (r as usize..=max).rev() {
                counts[k][s] += counts[k - 1][s - r as usize];
            }
        }
    }
    let n = ranks.len() as u64;
    // the null mean n1·(n+1)/2, in doubled units
    let centre = n1 as u64 * (n + 1);
    let dev = |s: u64| s.abs_diff(centre);
    let threshold = dev(observed);
    let all: u64 = counts[n1].iter().sum();
    let extreme: u64 = counts[n1].iter().enumerate().filter(|&(s, _)| dev(s as u64) >= threshold).map(|(_, c)| *c).sum();
    extreme as f64 / all as f64
}

/// Normal approximation with tie correction and a 0.5 continuity correction.
fn normal_p(w: f64, n1: usize, n2: usize, ties: &[usize]) -> f64 {
    let (n1f, n2f) = (n1 as f64, n2 as f64);
    let n = n1f + n2f;
    let mean = n1f * (n + 1.0) / 2.0;
    let tie_term: f64 = ties.iter().map(|&t| (t as f64).powi(3) - t as f64).sum();
    let var = n1f * n2f / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if var <= 0.0 {
        return 1.0;
    }
    let z = ((w - mean).abs() - 0.5).max(0.0) / var.sqrt();
    libm::erfc(z / std::f64::consts::SQRT_2).min(1.0)
}

/// Two-sided rank-sum test of `a` against `b` at significance `level`.
///
/// The p-value is exact when `|a| + |b| ≤ 12` and normal-approximated
/// otherwise. The mark says whether `a` is significantly better or worse,
/// where better means larger values if `higher_is_better`. Identical pooled
/// values give `≈` with `p = 1`.
pub fn wilcoxon_rank_sum(a: &[f64], b: &[f64], higher_is_better: bool, level: f64) -> RankSumResult {
    let (n1, n2) = (a.len(), b.len());
    let (ranks, ties) = doubled_ranks(a, b);
    let doubled_w: u64 = ranks[..n1].iter().sum();
    let w = doubled_w as f64 / 2.0;
    if n1 == 0 || n2 == 0 || ties.len() == 1 {
        return RankSumResult { mark: Mark::Similar, p: 1.0, w };
    }
    let p = if n1 + n2 <= EXACT_LIMIT { exact_p(&ranks, n1, doubled_w) } else { normal_p(w, n1, n2, &ties) };
    let mean = n1 as f64 * (n1 + n2 + 1) as f64 / 2.0;
    let mark = if p >= level || w == mean {
        Mark::Similar
    } else if (w > mean) == higher_is_better {
        Mark::Better
    } else {
        Mark::Worse
    };
    RankSumResult { mark, p, w }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_and_std_examples() {
        assert_eq!(median(&[3.0]), 3.0);
        assert_eq!(median(&[5.0, 1.0, 3.0]), 3.0);
        assert_eq!(median(&[4.0, 1.0, 3.0, 2.0]), 2.5);
        assert_eq!(std_dev(&[7.0]), 0.0);
        assert!((std_dev(&[1.0, 2.0, 3.0, 4.0]) - 1.2909944487358056).abs() < 1e-15);
    }

    #[test]
    fn identical_samples_are_similar() {
        let r = wilcoxon_rank_sum(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0], true, 0.05);
        assert_eq!(r.mark, Mark::Similar);
        let r = wilcoxon_rank_sum(&[4.0; 5], &[4.0; 6], true, 0.05);
        assert_eq!((r.mark, r.p), (Mark::Similar, 1.0));
    }

    #[test]
    fn exact_three_versus_three() {
        let r = wilcoxon_rank_sum(&[1.0, 2.0, 3.0], &[10.0, 11.0, 12.0], true, 0.2);
        assert!((r.p - 0.1).abs() < 1e-15);
        assert_eq!(r.mark, Mark::Worse);
        // at the usual 0.05 level the same samples are not separable
        assert_eq!(wilcoxon_rank_sum(&[1.0, 2.0, 3.0], &[10.0, 11.0, 12.0], true, 0.05).mark, Mark::Similar);
        let lower = wilcoxon_rank_sum(&[1.0, 2.0, 3.0], &[10.0, 11.0, 12.0], false, 0.2);
        assert_eq!(lower.mark, Mark::Better);
    }

    #[test]
    fn disjoint_samples_of_ten() {
        let a: Vec<f64> = (0..10).map(f64::from).collect();
        let b: Vec<f64> = (20..30).map(f64::from).collect();
        let r = wilcoxon_rank_sum(&b, &a, true, 0.05);
        assert!(r.p < 0.001, "{}", r.p);
        assert_eq!(r.mark, Mark::Better);
    }
}
