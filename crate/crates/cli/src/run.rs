//! One learning run against a simulated oracle.

use std::fmt;
use std::time::Instant;

use hslearn::automaton::equivalent;
use hslearn::learner::{learn_adaptive, learn_nonadaptive};
use hslearn::{Halfspace, MembershipOracle, QueryTranscript, SimulatedOracle};

use crate::format::{HalfspaceJson, LearnReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Algorithm {
    Adaptive,
    Nonadaptive,
}

impl Algorithm {
    pub fn round_limit(self) -> usize {
        match self {
            Algorithm::Adaptive => 2,
            Algorithm::Nonadaptive => 1,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Adaptive => "adaptive",
            Algorithm::Nonadaptive => "nonadaptive",
        })
    }
}

pub struct Run {
    pub report: LearnReport,
    pub transcript: QueryTranscript,
}

/// Learns `target` with `algorithm`. With `timing` off, `elapsed_ms` is 0 so
/// that reports are reproducible byte for byte.
pub fn learn(target: &Halfspace, algorithm: Algorithm, timing: bool) -> hslearn::Result<Run> {
    let mut oracle = SimulatedOracle::new(target.clone(), Some(algorithm.round_limit()))?;
    let t = target.bound();
    let start = Instant::now();
    let outcome = match algorithm {
        Algorithm::Adaptive => learn_adaptive(&mut oracle, t)?,
        Algorithm::Nonadaptive => learn_nonadaptive(&mut oracle, t)?,
    };
    let elapsed_ms = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    let correct = equivalent(&outcome.hypothesis, target)?.is_equivalent();
    let stats = oracle.stats();
    let report = LearnReport {
        algorithm: algorithm.to_string(),
        hypothesis: HalfspaceJson::from(&outcome.hypothesis),
        rounds: stats.rounds,
        queries_per_round: stats.per_round,
        total_queries: stats.total,
        candidates: outcome.candidates,
        pairs_checked: outcome.pairs_checked,
        elapsed_ms,
        correct,
    };
    Ok(Run { report, transcript: oracle.transcript().clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports() {
        let h = Halfspace::new(vec![1, 1], 1, 1).unwrap();
        let r = learn(&h, Algorithm::Adaptive, false).unwrap().report;
        assert_eq!((r.rounds, r.correct, r.elapsed_ms), (2, true, 0));
        assert_eq!(r.queries_per_round.iter().sum::<usize>(), r.total_queries);
        let r = learn(&h, Algorithm::Nonadaptive, false).unwrap().report;
        assert_eq!((r.rounds, r.correct, r.pairs_checked), (1, true, 0));
    }
}
