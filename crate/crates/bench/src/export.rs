//! File outputs: run records, traces, network dumps, fronts and summaries.

use std::fs;
use std::path::{Path, PathBuf};

use rveaca_core::cim::TopoNetwork;
use serde::{Deserialize, Serialize};

use crate::error::BenchError;
use crate::record::RunRecord;
use crate::runner::JobOutput;
use crate::summary::{render_text, summarize, write_summary_csv, SummaryRow};
use crate::config::ExperimentConfig;

fn create_dir(path: &Path) -> Result<(), BenchError> {
    fs::create_dir_all(path).map_err(BenchError::io(path))
}

fn write_file(path: &Path, contents: &[u8]) -> Result<(), BenchError> {
    fs::write(path, contents).map_err(BenchError::io(path))
}

pub fn write_record(dir: &Path, record: &RunRecord) -> Result<PathBuf, BenchError> {
    let path = dir.join(format!("{}.json", record.stem()));
    write_file(&path, &serde_json::to_vec_pretty(record)?)?;
    Ok(path)
}

pub fn read_record(path: &Path) -> Result<RunRecord, BenchError> {
    let text = fs::read(path).map_err(BenchError::io(path))?;
    Ok(serde_json::from_slice(&text)?)
}

/// Columns `t, hv, igdp, nodes, components, V`; `V` is empty for the baseline.
pub fn write_trace_csv(path: &Path, record: &RunRecord) -> Result<(), BenchError> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["t", "hv", "igdp", "nodes", "components", "V"])?;
    for p in &record.trace {
        w.write_record([
            p.t.to_string(),
            p.hv.to_string(),
            p.igdp.to_string(),
            p.nodes.to_string(),
            p.components.to_string(),
            p.threshold.map(|v| v.to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush().map_err(BenchError::io(path))
}

/// One objective vector per row, no header.
pub fn write_points_csv<T: AsRef<[f64]>>(path: &Path, points: &[T]) -> Result<(), BenchError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_path(path)?;
    for p in points {
        w.write_record(p.as_ref().iter().map(f64::to_string))?;
    }
    w.flush().map_err(BenchError::io(path))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeDump {
    pub id: usize,
    pub y: Vec<f64>,
    pub sigma: f64,
    pub alpha: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeDump {
    pub a: usize,
    pub b: usize,
    pub age: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkDump {
    pub nodes: Vec<NodeDump>,
    pub edges: Vec<EdgeDump>,
}

impl From<&TopoNetwork> for NetworkDump {
    fn from(net: &TopoNetwork) -> Self {
        Self {
            nodes: net
                .nodes()
                .iter()
                .enumerate()
                .map(|(id, n)| NodeDump { id, y: n.y.clone(), sigma: n.sigma, alpha: n.alpha })
                .collect(),
            edges: net.edges().into_iter().map(|e| EdgeDump { a: e.a, b: e.b, age: e.age }).collect(),
        }
    }
}

/// Writes the standard output tree under `config.out` and returns the summary.
///
/// ```text
/// <out>/runs/<stem>.json   <out>/trace/<stem>.csv   <out>/networks/<stem>.json
/// <out>/summary.csv        <out>/summary.txt
/// ```
pub fn persist(config: &ExperimentConfig, outputs: &[JobOutput]) -> Result<Vec<SummaryRow>, BenchError> {
    let out = &config.out;
    let runs = out.join("runs");
    let trace = out.join("trace");
    create_dir(&runs)?;
    create_dir(&trace)?;
    let networks = out.join("networks");
    if config.dump_networks {
        create_dir(&networks)?;
    }
    for o in outputs {
        write_record(&runs, &o.record)?;
        write_trace_csv(&trace.join(format!("{}.csv", o.record.stem())), &o.record)?;
        if let (true, Some(net)) = (config.dump_networks, &o.network) {
            let path = networks.join(format!("{}.json", o.record.stem()));
            write_file(&path, &serde_json::to_vec_pretty(&NetworkDump::from(net))?)?;
        }
    }
    let records: Vec<RunRecord> = outputs.iter().map(|o| o.record.clone()).collect();
    let rows = summarize(&records, config.reference_algorithm);
    let mut csv_bytes = Vec::new();
    write_summary_csv(&rows, &mut csv_bytes)?;
    write_file(&out.join("summary.csv"), &csv_bytes)?;
    write_file(&out.join("summary.txt"), render_text(&rows).as_bytes())?;
    Ok(rows)
}
