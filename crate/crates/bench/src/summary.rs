use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::config::Algorithm;
use crate::record::RunRecord;
use crate::stats::{median, std_dev, wilcoxon_rank_sum, Mark};

/// Significance level of the pairwise marks.
pub const SIGNIFICANCE: f64 = 0.05;

/// One (algorithm, problem, M) cell of the comparison table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    pub algorithm: Algorithm,
    pub problem: String,
    pub m: usize,
    pub runs: usize,
    pub hv_median: f64,
    pub hv_std: f64,
    pub igdp_median: f64,
    pub igdp_std: f64,
    /// Marks from the reference algorithm's point of view: `+` means the
    /// reference is significantly better than this row. Empty on the
    /// reference algorithm's own rows.
    pub hv_mark: Option<Mark>,
    pub hv_p: Option<f64>,
    pub igdp_mark: Option<Mark>,
    pub igdp_p: Option<f64>,
}

type Cell = (String, usize);

/// Per-cell medians and standard deviations with rank-sum marks against
/// `reference`. Rows are ordered by problem, M, then algorithm.
pub fn summarize(records: &[RunRecord], reference: Algorithm) -> Vec<SummaryRow> {
    let mut cells: BTreeMap<(Cell, Algorithm), Vec<&RunRecord>> = BTreeMap::new();
    for r in records {
        cells.entry(((r.problem.clone(), r.m), r.algorithm)).or_default().push(r);
    }
    let samples = |rs: &[&RunRecord]| -> (Vec<f64>, Vec<f64>) {
        let mut sorted = rs.to_vec();
        sorted.sort_by_key(|r| r.seed);
        (sorted.iter().map(|r| r.hv).collect(), sorted.iter().map(|r| r.igd_plus).collect())
    };
    cells
        .iter()
        .map(|(((problem, m), algorithm), rs)| {
            let (hv, igdp) = samples(rs);
            let base = cells.get(&((problem.clone(), *m), reference)).filter(|_| *algorithm != reference);
            let (hv_cmp, igdp_cmp) = match base {
                Some(b) => {
                    let (bhv, bigdp) = samples(b);
                    (
                        Some(wilcoxon_rank_sum(&bhv, &hv, true, SIGNIFICANCE)),
                        Some(wilcoxon_rank_sum(&bigdp, &igdp, false, SIGNIFICANCE)),
                    )
                }
                None => (None, None),
            };
            SummaryRow {
                algorithm: *algorithm,
                problem: problem.clone(),
                m: *m,
                runs: rs.len(),
                hv_median: median(&hv),
                hv_std: std_dev(&hv),
                igdp_median: median(&igdp),
                igdp_std: std_dev(&igdp),
                hv_mark: hv_cmp.map(|c| c.mark),
                hv_p: hv_cmp.map(|c| c.p),
                igdp_mark: igdp_cmp.map(|c| c.mark),
                igdp_p: igdp_cmp.map(|c| c.p),
            }
        })
        .collect()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_summary_csv<W: std::io::Write>(rows: &[SummaryRow], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "algorithm", "problem", "m", "runs", "hv_median", "hv_std", "igdp_median", "igdp_std", "hv_mark", "hv_p",
        "igdp_mark", "igdp_p",
    ])?;
    for r in rows {
        w.write_record([
            r.algorithm.to_string(),
            r.problem.clone(),
            r.m.to_string(),
            r.runs.to_string(),
            r.hv_median.to_string(),
            r.hv_std.to_string(),
            r.igdp_median.to_string(),
            r.igdp_std.to_string(),
            opt(r.hv_mark),
            opt(r.hv_p),
            opt(r.igdp_mark),
            opt(r.igdp_p),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Aligned plain-text table, `median (std) mark` per indicator.
pub fn render_text(rows: &[SummaryRow]) -> String {
    let header = ["problem", "M", "algorithm", "runs", "HV", "IGD+"];
    let body: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            let cell = |med: f64, sd: f64, mark: Option<Mark>| {
                format!("{med:.4e} ({sd:.2e}){}", mark.map(|k| format!(" {k}")).unwrap_or_default())
            };
            [
                r.problem.clone(),
                r.m.to_string(),
                r.algorithm.to_string(),
                r.runs.to_string(),
                cell(r.hv_median, r.hv_std, r.hv_mark),
                cell(r.igdp_median, r.igdp_std, r.igdp_mark),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &body {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&header.map(String::from));
    for row in &body {
        line(row);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(algorithm: Algorithm, seed: u64, hv: f64, igd_plus: f64) -> RunRecord {
        RunRecord {
            algorithm,
            problem: "MaF1".into(),
            m: 5,
            seed,
            population_size: 10,
            generations: 1,
            evaluations: 20,
            hv,
            hv_method: "exact".into(),
            igd_plus,
            trace: vec![],
            final_objectives: vec![],
            wall_clock_secs: 0.0,
        }
    }

    #[test]
    fn single_run_cell() {
        let rows = summarize(&[rec(Algorithm::RveaCa, 1, 0.8, 0.1)], Algorithm::RveaCa);
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].hv_median, rows[0].hv_std), (0.8, 0.0));
        assert_eq!(rows[0].hv_mark, None);
    }

    #[test]
    fn marks_match_rank_sum_test() {
        let mut rs = Vec::new();
        for s in 0..8 {
            rs.push(rec(Algorithm::RveaCa, s, 1.0 + s as f64 * 0.01, 0.1 + s as f64 * 0.001));
            rs.push(rec(Algorithm::Rvea, s, 0.5 + s as f64 * 0.01, 0.3 + s as f64 * 0.001));
        }
        let rows = summarize(&rs, Algorithm::RveaCa);
        let other = rows.iter().find(|r| r.algorithm == Algorithm::Rvea).unwrap();
        let ca: Vec<f64> = (0..8).map(|s| 1.0 + s as f64 * 0.01).collect();
        let base: Vec<f64> = (0..8).map(|s| 0.5 + s as f64 * 0.01).collect();
        let expected = wilcoxon_rank_sum(&ca, &base, true, SIGNIFICANCE);
        assert_eq!(other.hv_mark, Some(expected.mark));
        assert_eq!(other.hv_p, Some(expected.p));
        assert_eq!(other.hv_mark, Some(Mark::Better));
        assert_eq!(other.igdp_mark, Some(Mark::Better));
        let text = render_text(&rows);
        assert_eq!(text.lines().count(), 3);
        assert!(text.contains(" +"));
    }

    #[test]
    fn odd_median_is_middle_value() {
        let rs: Vec<RunRecord> = [0.3, 0.9, 0.5].iter().enumerate().map(|(i, &h)| rec(Algorithm::Rvea, i as u64, h, 0.0)).collect();
        assert_eq!(summarize(&rs, Algorithm::RveaCa)[0].hv_median, 0.5);
    }
}
