//! Query-complexity benchmark: random targets over a range of dimensions.

use std::io::Write;

use serde::Serialize;

use crate::generate::{generate_target, trial_seed};
use crate::run::{learn, Algorithm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum AlgorithmChoice {
    Adaptive,
    Nonadaptive,
    Both,
}

impl AlgorithmChoice {
    pub fn algorithms(self) -> &'static [Algorithm] {
        match self {
            AlgorithmChoice::Adaptive => &[Algorithm::Adaptive],
            AlgorithmChoice::Nonadaptive => &[Algorithm::Nonadaptive],
            AlgorithmChoice::Both => &[Algorithm::Adaptive, Algorithm::Nonadaptive],
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub t: u32,
    pub trials: usize,
    pub seed: u64,
    pub algorithm: AlgorithmChoice,
    pub timing: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("empty dimension range {0}..={1}")]
    EmptyRange(usize, usize),
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("weight bound must be positive")]
    ZeroBound,
    #[error("learning failed for n={n}, seed={seed}: {source}")]
    Learn { n: usize, seed: u64, source: hslearn::Error },
}

/// One CSV row. Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub t: u32,
    pub seed: u64,
    pub algorithm: String,
    pub rounds: usize,
    pub queries_round1: usize,
    pub queries_round2: usize,
    pub total_queries: usize,
    pub candidates: usize,
    pub pairs_checked: usize,
    pub elapsed_ms: u64,
    pub correct: bool,
}

/// Rows ordered by `(n, trial, algorithm)`. Trial `i` at dimension `n` uses
/// the target drawn from `trial_seed(seed, n, i)`, shared by both
/// algorithms.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    if config.n_min > config.n_max {
        return Err(BenchError::EmptyRange(config.n_min, config.n_max));
    }
    if config.trials == 0 {
        return Err(BenchError::NoTrials);
    }
    if config.t == 0 {
        return Err(BenchError::ZeroBound);
    }
    let mut rows = Vec::new();
    for n in config.n_min..=config.n_max {
        for trial in 0..config.trials {
            let seed = trial_seed(config.seed, n, trial);
            let target = generate_target(n, config.t, seed).halfspace;
            for &algorithm in config.algorithm.algorithms() {
                let run = learn(&target, algorithm, config.timing)
                    .map_err(|source| BenchError::Learn { n, seed, source })?;
                let r = run.report;
                rows.push(BenchRecord {
                    n,
                    t: config.t,
                    seed,
                    algorithm: algorithm.to_string(),
                    rounds: r.rounds,
                    queries_round1: r.queries_per_round.first().copied().unwrap_or(0),
                    queries_round2: r.queries_per_round.get(1).copied().unwrap_or(0),
                    total_queries: r.total_queries,
                    candidates: r.candidates,
                    pairs_checked: r.pairs_checked,
                    elapsed_ms: r.elapsed_ms,
                    correct: r.correct,
                });
            }
        }
    }
    Ok(rows)
}

pub fn write_csv(records: &[BenchRecord], out: impl Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Least-squares slope of `ln y` against `ln x`. `None` with fewer than two
/// distinct `x` values or a non-positive coordinate.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Mean total queries per dimension for one algorithm.
pub fn mean_totals(records: &[BenchRecord], algorithm: Algorithm) -> Vec<(usize, f64)> {
    let name = algorithm.to_string();
    let mut out: Vec<(usize, f64, usize)> = Vec::new();
    for r in records.iter().filter(|r| r.algorithm == name) {
        match out.last_mut() {
            Some(last) if last.0 == r.n => {
                last.1 += r.total_queries as f64;
                last.2 += 1;
            }
            _ => out.push((r.n, r.total_queries as f64, 1)),
        }
    }
    out.into_iter().map(|(n, sum, c)| (n, sum / c as f64)).collect()
}

/// Human-readable slope lines, one per algorithm present in `records`.
pub fn slope_summary(records: &[BenchRecord], config: &BenchConfig) -> Vec<String> {
    config
        .algorithm
        .algorithms()
        .iter()
        .map(|&a| {
            let means = mean_totals(records, a);
            let pts: Vec<(f64, f64)> = means.iter().map(|&(n, m)| (n as f64, m)).collect();
            let slope = match loglog_slope(&pts) {
                Some(s) => format!("{s:.3}"),
                None => "n/a".to_owned(),
            };
            format!(
                "{a}: log-log slope of total queries vs n = {slope} (n={}..={}, t={}, reference 2t+4 = {})",
                config.n_min,
                config.n_max,
                config.t,
                2 * config.t + 4
            )
        })
        .collect()
}
