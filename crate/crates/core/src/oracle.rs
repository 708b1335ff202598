//! Round-structured membership oracles.
//!
//! A round is a batch of assignments fixed before any of its answers is
//! revealed. Adaptivity is therefore the number of rounds a learner used,
//! which the transcript records.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::assignment::Assignment;
use crate::halfspace::Halfspace;
use crate::{Error, Result};

/// Every answer seen so far, keyed by assignment.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnswerIndex {
    map: BTreeMap<Assignment, bool>,
}

impl AnswerIndex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, a: &Assignment) -> Option<bool> {
        self.map.get(a).copied()
    }

    /// Like [`get`](Self::get), but a missing answer is an error.
    pub fn require(&self, a: &Assignment) -> Result<bool> {
        self.get(a).ok_or(Error::MissingAnswer(*a))
    }

    pub fn contains(&self, a: &Assignment) -> bool {
        self.map.contains_key(a)
    }

    /// Records an answer. Conflicting answers for the same point are rejected.
    pub fn insert(&mut self, a: Assignment, value: bool) -> Result<()> {
        match self.map.insert(a, value) {
            Some(old) if old != value => {
                self.map.insert(a, old);
                Err(Error::InvariantViolation("two different answers for one assignment"))
            }
            _ => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Answers in lexicographic order of the assignments.
    pub fn iter(&self) -> impl Iterator<Item = (Assignment, bool)> + '_ {
        self.map.iter().map(|(a, v)| (*a, *v))
    }
}

impl FromIterator<(Assignment, bool)> for AnswerIndex {
    /// Later entries win on conflict.
    fn from_iter<I: IntoIterator<Item = (Assignment, bool)>>(iter: I) -> Self {
        Self { map: iter.into_iter().collect() }
    }
}

/// One submitted batch and its answers, both in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    pub queries: Vec<Assignment>,
    pub answers: Vec<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QueryTranscript {
    rounds: Vec<Round>,
    total_queries: usize,
    answers: AnswerIndex,
}

impl QueryTranscript {
    pub fn rounds(&self) -> &[Round] {
        &self.rounds
    }

    /// Submissions, counting repeats.
    pub fn total_queries(&self) -> usize {
        self.total_queries
    }

    pub fn answers(&self) -> &AnswerIndex {
        &self.answers
    }

    pub fn record(&mut self, round: Round) -> Result<()> {
        for (a, &v) in round.queries.iter().zip(&round.answers) {
            self.answers.insert(*a, v)?;
        }
        self.total_queries += round.queries.len();
        self.rounds.push(round);
        Ok(())
    }

    pub fn stats(&self) -> OracleStats {
        OracleStats {
            rounds: self.rounds.len(),
            per_round: self.rounds.iter().map(|r| r.queries.len()).collect(),
            total: self.total_queries,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleStats {
    pub rounds: usize,
    pub per_round: Vec<usize>,
    pub total: usize,
}

pub trait MembershipOracle {
    fn dim(&self) -> usize;

    /// Answers a batch. The result lists `(a, f(a))` in lexicographic order
    /// of `a`, whatever order the batch was given in.
    fn submit_round(&mut self, batch: &[Assignment]) -> Result<Vec<(Assignment, bool)>>;

    fn transcript(&self) -> &QueryTranscript;

    fn stats(&self) -> OracleStats {
        self.transcript().stats()
    }

    fn answers(&self) -> &AnswerIndex {
        self.transcript().answers()
    }
}

/// Answers queries by evaluating a hidden target.
#[derive(Clone, Debug)]
pub struct SimulatedOracle {
    target: Halfspace,
    round_limit: Option<usize>,
    transcript: QueryTranscript,
}

impl SimulatedOracle {
    /// The target must have weights in `[0, t]`.
    pub fn new(target: Halfspace, round_limit: Option<usize>) -> Result<Self> {
        target.check_nonnegative()?;
        Ok(Self { target, round_limit, transcript: QueryTranscript::default() })
    }

    pub fn target(&self) -> &Halfspace {
        &self.target
    }

    pub fn round_limit(&self) -> Option<usize> {
        self.round_limit
    }
}

impl MembershipOracle for SimulatedOracle {
    fn dim(&self) -> usize {
        self.target.dim()
    }

    fn submit_round(&mut self, batch: &[Assignment]) -> Result<Vec<(Assignment, bool)>> {
        if let Some(limit) = self.round_limit {
            if self.transcript.rounds.len() >= limit {
                return Err(Error::RoundLimitExceeded { limit });
            }
        }
        for a in batch {
            self.target.check_dim_of(a)?;
        }
        let mut queries = batch.to_vec();
        queries.sort_unstable();
        let answers: Vec<bool> = queries.iter().map(|a| self.target.eval(a)).collect();
        let out = queries.iter().copied().zip(answers.iter().copied()).collect();
        self.transcript.record(Round { queries, answers })?;
        Ok(out)
    }

    fn transcript(&self) -> &QueryTranscript {
        &self.transcript
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn a(s: &str) -> Assignment {
        s.parse().unwrap()
    }

    fn hs(weights: &[i64], u: i64, t: u32) -> Halfspace {
        Halfspace::new(weights.to_vec(), u, t).unwrap()
    }

    #[test]
    fn fresh_handles() {
        let o = SimulatedOracle::new(hs(&[1, 0], 1, 1), Some(2)).unwrap();
        assert_eq!(o.stats(), OracleStats { rounds: 0, per_round: vec![], total: 0 });
        assert!(SimulatedOracle::new(Halfspace::constant(3, 2, false), None).is_ok());
        assert!(SimulatedOracle::new(hs(&[2, 1], 2, 2), None).is_ok());
        assert!(SimulatedOracle::new(hs(&[1, -1], 1, 1), None).is_err());
    }

    #[test]
    fn answers_come_back_sorted() {
        let mut o = SimulatedOracle::new(hs(&[1, 1], 1, 1), None).unwrap();
        let out = o.submit_round(&[a("10"), a("00")]).unwrap();
        assert_eq!(out, vec![(a("00"), false), (a("10"), true)]);

        let mut o = SimulatedOracle::new(hs(&[2, 1], 2, 2), None).unwrap();
        let out = o.submit_round(&[a("11"), a("01"), a("10"), a("00")]).unwrap();
        let bits: Vec<bool> = out.iter().map(|p| p.1).collect();
        assert_eq!(bits, vec![false, false, true, true]);
    }

    #[test]
    fn round_limit() {
        let mut o = SimulatedOracle::new(hs(&[1], 1, 1), Some(1)).unwrap();
        o.submit_round(&[a("1")]).unwrap();
        assert_eq!(o.submit_round(&[a("0")]), Err(Error::RoundLimitExceeded { limit: 1 }));
        assert_eq!(o.stats().rounds, 1);
    }

    #[test]
    fn empty_batch_uses_a_round() {
        let mut o = SimulatedOracle::new(hs(&[1], 1, 1), Some(1)).unwrap();
        assert_eq!(o.submit_round(&[]).unwrap(), vec![]);
        assert_eq!(o.stats().rounds, 1);
        assert!(o.submit_round(&[]).is_err());
    }

    #[test]
    fn counters() {
        let mut o = SimulatedOracle::new(hs(&[1, 1, 1], 2, 1), None).unwrap();
        let cube: Vec<Assignment> = crate::assignment::cube(3).collect();
        o.submit_round(&cube[..7]).unwrap();
        assert_eq!(o.stats(), OracleStats { rounds: 1, per_round: vec![7], total: 7 });

        let mut o = SimulatedOracle::new(hs(&[1, 1, 1], 2, 1), None).unwrap();
        o.submit_round(&cube[..3]).unwrap();
        o.submit_round(&cube[..5]).unwrap();
        assert_eq!(o.stats(), OracleStats { rounds: 2, per_round: vec![3, 5], total: 8 });
        assert_eq!(o.answers().len(), 5);
    }

    #[test]
    fn duplicates_are_counted_but_indexed_once() {
        let mut o = SimulatedOracle::new(hs(&[1, 1], 2, 1), None).unwrap();
        o.submit_round(&[a("11"), a("11"), a("01")]).unwrap();
        assert_eq!(o.stats().total, 3);
        assert_eq!(o.answers().len(), 2);
        assert_eq!(o.answers().get(&a("11")), Some(true));
    }

    #[test]
    fn conflicting_answers_are_rejected() {
        let mut idx = AnswerIndex::new();
        idx.insert(a("1"), true).unwrap();
        assert!(idx.insert(a("1"), false).is_err());
        assert_eq!(idx.get(&a("1")), Some(true));
        assert_eq!(idx.require(&a("0")), Err(Error::MissingAnswer(a("0"))));
    }

    #[test]
    fn dimension_mismatch() {
        let mut o = SimulatedOracle::new(hs(&[1, 1], 1, 1), None).unwrap();
        assert!(o.submit_round(&[a("1")]).is_err());
    }
}
