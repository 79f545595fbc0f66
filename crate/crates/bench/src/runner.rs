use std::collections::BTreeMap;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rveaca_core::cim::TopoNetwork;
use rveaca_core::indicators::{hv, igd_plus, normalize_front, HvMode, Method};
use rveaca_core::problems::{reference_front, ProblemSpec, ReferenceFront};
use rveaca_core::rvea::{run_rvea_baseline, GenerationReport, RveaConfig};
use rveaca_core::rvea_ca::{run_rvea_ca, RveaCaConfig};
use rveaca_core::Population;

use crate::config::{Algorithm, ExperimentConfig, ProblemEntry};
use crate::error::{BenchError, ConfigError};
use crate::record::{run_stem, RunRecord, TracePoint};

/// One (algorithm, problem, seed) cell of an experiment.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Job {
    pub algorithm: Algorithm,
    pub problem: ProblemEntry,
    pub seed: u64,
}

/// Jobs in canonical order, seeds `base, base + 1, …`.
pub fn jobs(config: &ExperimentConfig) -> Vec<Job> {
    let mut out = Vec::new();
    for &algorithm in &config.algorithms {
        for problem in &config.problems {
            for i in 0..config.runs as u64 {
                out.push(Job { algorithm, problem: problem.clone(), seed: config.seed + i });
            }
        }
    }
    out
}

/// A problem instance with its sampled true front.
#[derive(Debug, Clone)]
pub struct PreparedProblem {
    pub spec: ProblemSpec,
    pub front: ReferenceFront,
}

impl PreparedProblem {
    pub fn new(entry: &ProblemEntry, front_points: usize) -> Result<Self, BenchError> {
        let kind = entry.kind()?;
        let spec = ProblemSpec::new(kind, entry.m).map_err(|e| ConfigError::Invalid(e.to_string()))?;
        let front = reference_front(&spec, front_points).map_err(|e| ConfigError::Invalid(e.to_string()))?;
        Ok(Self { spec, front })
    }
}

/// Normalized hypervolume and IGD⁺ of a population.
pub struct Evaluator<'a> {
    front: &'a ReferenceFront,
    q: Vec<f64>,
}

impl<'a> Evaluator<'a> {
    pub fn new(front: &'a ReferenceFront, reference_point: f64) -> Self {
        Self { front, q: vec![reference_point; front.dim()] }
    }

    pub fn measure(&self, population: &Population, mode: HvMode) -> Result<(f64, Method, f64), rveaca_core::Error> {
        let f = normalize_front(&population.objective_matrix(), self.front);
        let h = hv(&f, &self.q, mode)?;
        let d = igd_plus(&f, self.front.normalized())?;
        Ok((h.value, h.method, d.value))
    }
}

/// The outcome of one job: its record and, for RVEA-CA, the final network.
pub struct JobOutput {
    pub record: RunRecord,
    pub network: Option<TopoNetwork>,
}

pub fn run_job(config: &ExperimentConfig, job: &Job, prepared: &PreparedProblem) -> Result<JobOutput, BenchError> {
    let scale = config.scale(job.problem.m).ok_or(ConfigError::MissingScale(job.problem.m))?;
    let t_max = scale.generations();
    let n = scale.population_size;
    let m = job.problem.m;
    let settings = &config.indicators;
    let trace_mode = if m <= 3 {
        HvMode::Exact
    } else {
        HvMode::MonteCarlo { samples: settings.trace_mc_samples, seed: settings.mc_seed }
    };
    let final_mode =
        if m <= 3 { HvMode::Exact } else { HvMode::MonteCarlo { samples: settings.mc_samples, seed: settings.mc_seed } };
    let evaluator = Evaluator::new(&prepared.front, settings.reference_point);
    let label = run_stem(job.algorithm, prepared.spec.kind.name(), m, job.seed);
    let fail = |source| BenchError::Run { label: label.clone(), source };

    let mut trace = Vec::new();
    let mut trace_error = None;
    let mut observer = |r: &GenerationReport<'_>| {
        if !r.t.is_multiple_of(config.trace_every) && r.t != r.max_generations {
            return;
        }
        match evaluator.measure(r.population, trace_mode) {
            Ok((hv, _, igdp)) => trace.push(TracePoint {
                t: r.t,
                hv,
                igdp,
                nodes: r.nodes,
                components: r.components,
                threshold: r.threshold,
            }),
            Err(e) => trace_error = Some(e),
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(job.seed);
    let started = Instant::now();
    let (population, evaluations, network) = match job.algorithm {
        Algorithm::RveaCa => {
            let cfg = RveaCaConfig { lambda: config.lambda, ..RveaCaConfig::new(n, t_max) };
            let out = run_rvea_ca(&prepared.spec, &cfg, &mut rng, Some(&mut observer)).map_err(fail)?;
            (out.population, out.evaluations, Some(out.network))
        }
        Algorithm::Rvea => {
            let out =
                run_rvea_baseline(&prepared.spec, &RveaConfig::new(n, t_max), &mut rng, Some(&mut observer)).map_err(fail)?;
            (out.population, out.evaluations, None)
        }
    };
    let wall_clock_secs = started.elapsed().as_secs_f64();
    if let Some(e) = trace_error {
        return Err(fail(e));
    }
    let (hv, method, igd_plus) = evaluator.measure(&population, final_mode).map_err(fail)?;
    let record = RunRecord {
        algorithm: job.algorithm,
        problem: prepared.spec.kind.name().to_string(),
        m,
        seed: job.seed,
        population_size: n,
        generations: t_max,
        evaluations,
        hv,
        hv_method: match method {
            Method::Exact => "exact",
            Method::MonteCarlo => "monte-carlo",
        }
        .to_string(),
        igd_plus,
        trace,
        final_objectives: population.objective_matrix(),
        wall_clock_secs,
    };
    Ok(JobOutput { record, network })
}

fn sort_key(r: &RunRecord) -> (Algorithm, String, usize, u64) {
    (r.algorithm, r.problem.clone(), r.m, r.seed)
}

/// Runs every job on a pool of `config.workers` threads. Outputs are in
/// canonical `(algorithm, problem, M, seed)` order regardless of the
/// worker count.
pub fn run_jobs(config: &ExperimentConfig) -> Result<Vec<JobOutput>, BenchError> {
    config.validate()?;
    let mut prepared = BTreeMap::new();
    for p in &config.problems {
        if !prepared.contains_key(p) {
            prepared.insert(p.clone(), PreparedProblem::new(p, config.indicators.front_points)?);
        }
    }
    let jobs = jobs(config);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| ConfigError::Invalid(format!("cannot start worker pool: {e}")))?;
    let mut outputs: Vec<JobOutput> =
        pool.install(|| jobs.par_iter().map(|job| run_job(config, job, &prepared[&job.problem])).collect::<Result<_, _>>())?;
    outputs.sort_by_key(|o| sort_key(&o.record));
    Ok(outputs)
}

/// [`run_jobs`] without the networks.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<RunRecord>, BenchError> {
    Ok(run_jobs(config)?.into_iter().map(|o| o.record).collect())
}
