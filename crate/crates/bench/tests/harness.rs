use std::collections::BTreeMap;
use std::fs;
use std::process::Command;

use rveaca_bench::config::Scale;
use rveaca_bench::export::{persist, read_record, write_record, NetworkDump};
use rveaca_bench::summary::write_summary_csv;
use rveaca_bench::{run_jobs, Algorithm, ExperimentConfig, ProblemEntry};

fn small_config(out: &std::path::Path) -> ExperimentConfig {
    let mut scales = BTreeMap::new();
    scales.insert(3, Scale { population_size: 16, evaluations: 16 * 9 });
    scales.insert(4, Scale { population_size: 20, evaluations: 20 * 6 });
    ExperimentConfig {
        algorithms: vec![Algorithm::RveaCa, Algorithm::Rvea],
        problems: vec![ProblemEntry { name: "MaF7".into(), m: 3 }, ProblemEntry { name: "MaF1".into(), m: 4 }],
        scales,
        runs: 3,
        seed: 100,
        lambda: 20,
        trace_every: 3,
        out: out.to_path_buf(),
        ..Default::default()
    }
    .with_small_indicators()
}

trait Small {
    fn with_small_indicators(self) -> Self;
}

impl Small for ExperimentConfig {
    fn with_small_indicators(mut self) -> Self {
        self.indicators.mc_samples = 20_000;
        self.indicators.trace_mc_samples = 2_000;
        self.indicators.front_points = 500;
        self
    }
}

#[test]
fn records_round_trip_through_json() {
    let dir = tempfile::tempdir().unwrap();
    let outputs = run_jobs(&small_config(dir.path())).unwrap();
    for o in &outputs {
        let path = write_record(dir.path(), &o.record).unwrap();
        assert_eq!(read_record(&path).unwrap(), o.record);
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let dir = tempfile::tempdir().unwrap();
    let csv = |workers| {
        let cfg = ExperimentConfig { workers, ..small_config(dir.path()) };
        let outputs = run_jobs(&cfg).unwrap();
        let rows = rveaca_bench::summary::summarize(
            &outputs.iter().map(|o| o.record.clone()).collect::<Vec<_>>(),
            Algorithm::RveaCa,
        );
        let mut bytes = Vec::new();
        write_summary_csv(&rows, &mut bytes).unwrap();
        bytes
    };
    assert_eq!(csv(1), csv(4));
}

#[test]
fn output_tree_layout() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = ExperimentConfig { dump_networks: true, ..small_config(dir.path()) };
    let outputs = run_jobs(&cfg).unwrap();
    assert_eq!(outputs.len(), 12);
    let rows = persist(&cfg, &outputs).unwrap();
    assert_eq!(rows.len(), 4);
    assert!(dir.path().join("runs/rvea-ca_MaF7_M3_s100.json").is_file());
    assert!(dir.path().join("runs/rvea_MaF1_M4_s102.json").is_file());
    let trace = fs::read_to_string(dir.path().join("trace/rvea-ca_MaF7_M3_s101.csv")).unwrap();
    assert_eq!(trace.lines().next().unwrap(), "t,hv,igdp,nodes,components,V");
    // generations 3, 6 and the final 8
    assert_eq!(trace.lines().count(), 4);
    let net: NetworkDump =
        serde_json::from_str(&fs::read_to_string(dir.path().join("networks/rvea-ca_MaF7_M3_s100.json")).unwrap()).unwrap();
    assert!(!net.nodes.is_empty());
    assert!(net.edges.iter().all(|e| e.a < e.b && e.b < net.nodes.len()));
    assert!(!dir.path().join("networks/rvea_MaF7_M3_s100.json").exists());
    let summary = fs::read_to_string(dir.path().join("summary.csv")).unwrap();
    assert!(summary.starts_with("algorithm,problem,m,runs,hv_median"));
}

fn cli() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rveaca"))
}

#[test]
fn cli_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    let status = cli().args(["run", "--config"]).arg(&bad).status().unwrap();
    assert_eq!(status.code(), Some(2));

    let status = cli().args(["run", "--problems", "ZDT9:3", "--out"]).arg(dir.path()).status().unwrap();
    assert_eq!(status.code(), Some(2));

    // M=3 has no default scale
    let status = cli().args(["run", "--problems", "MaF1:3", "--out"]).arg(dir.path()).status().unwrap();
    assert_eq!(status.code(), Some(2));

    let status = cli().args(["run", "--algos", "nsga2", "--problems", "MaF1:5"]).status().unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn cli_runs_config_with_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("exp.json");
    fs::write(
        &config,
        r#"{"algorithms":["rvea-ca"],"problems":[{"name":"DTLZ2","m":3}],
            "scales":{"3":{"population_size":12,"evaluations":60}},
            "runs":5,"lambda":10,"indicators":{"front_points":200}}"#,
    )
    .unwrap();
    let out = dir.path().join("out");
    let output = cli()
        .args(["run", "--runs", "2", "--seed", "40", "--workers", "2", "--config"])
        .arg(&config)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stderr));
    assert!(out.join("runs/rvea-ca_DTLZ2_M3_s40.json").is_file());
    assert!(out.join("runs/rvea-ca_DTLZ2_M3_s41.json").is_file());
    assert!(!out.join("runs/rvea-ca_DTLZ2_M3_s42.json").exists());
    assert!(String::from_utf8_lossy(&output.stdout).contains("DTLZ2"));
}

#[test]
fn cli_writes_fronts() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("front.csv");
    let status = cli().args(["front", "--problem", "DTLZ2", "--m", "3", "--points", "100", "--out"]).arg(&path).status().unwrap();
    assert!(status.success());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 91);
    for line in text.lines() {
        let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        assert!((v.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-12);
    }
}
