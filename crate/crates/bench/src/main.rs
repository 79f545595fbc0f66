use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rveaca_bench::config::{parse_algorithm_list, parse_problem_list};
use rveaca_bench::export::{persist, write_points_csv};
use rveaca_bench::summary::render_text;
use rveaca_bench::{run_jobs, BenchError, ConfigError, ExperimentConfig};
use rveaca_core::problems::{reference_front, ProblemSpec};

#[derive(Parser)]
#[command(name = "rveaca", version, about = "Run RVEA-CA / RVEA benchmark experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment and write records, traces and a summary.
    Run {
        /// JSON experiment config; flags below override its fields.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        runs: Option<usize>,
        /// Base seed; run i uses seed + i.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        workers: Option<usize>,
        /// Comma-separated NAME:M entries, e.g. `MaF1:5,MaF7:3`.
        #[arg(long)]
        problems: Option<String>,
        /// Comma-separated subset of `rvea-ca,rvea`.
        #[arg(long)]
        algos: Option<String>,
        /// Also dump each RVEA-CA run's final network as JSON.
        #[arg(long)]
        dump_networks: bool,
    },
    /// Write a sampled true Pareto front as CSV.
    Front {
        #[arg(long)]
        problem: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 10_000)]
        points: usize,
        /// Write min-max normalized points instead of raw ones.
        #[arg(long)]
        normalized: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<(), BenchError> {
    match cli.command {
        Command::Run { config, out, runs, seed, workers, problems, algos, dump_networks } => {
            let mut cfg = match config {
                Some(path) => ExperimentConfig::load(&path)?,
                None => ExperimentConfig::default(),
            };
            if let Some(v) = out {
                cfg.out = v;
            }
            if let Some(v) = runs {
                cfg.runs = v;
            }
            if let Some(v) = seed {
                cfg.seed = v;
            }
            if let Some(v) = workers {
                cfg.workers = v;
            }
            if let Some(v) = problems {
                cfg.problems = parse_problem_list(&v)?;
            }
            if let Some(v) = algos {
                cfg.algorithms = parse_algorithm_list(&v)?;
            }
            cfg.dump_networks |= dump_networks;
            let outputs = run_jobs(&cfg)?;
            let rows = persist(&cfg, &outputs)?;
            print!("{}", render_text(&rows));
            Ok(())
        }
        Command::Front { problem, m, points, normalized, out } => {
            let kind = problem.parse().map_err(|_| ConfigError::UnknownProblem(problem.clone()))?;
            let spec = ProblemSpec::new(kind, m).map_err(|e| ConfigError::Invalid(e.to_string()))?;
            let front = reference_front(&spec, points).map_err(|e| ConfigError::Invalid(e.to_string()))?;
            if normalized {
                write_points_csv(&out, front.normalized())
            } else {
                write_points_csv(&out, front.points())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
