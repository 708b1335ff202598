//! Distinguishing sets and consistent-hypothesis selection.

use alloc::vec::Vec;

use hashbrown::HashMap;

use super::candidates::CandidateSet;
use super::staircase::staircase_set;
use crate::assignment::Assignment;
use crate::automaton::{equivalent, Equivalence};
use crate::halfspace::Halfspace;
use crate::oracle::AnswerIndex;
use crate::{Error, Result};

/// Points that separate every non-equivalent pair of candidates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishingSet {
    points: Vec<Assignment>,
    classes: usize,
    pairs_checked: usize,
}

impl DistinguishingSet {
    /// Sorted, without repeats.
    pub fn points(&self) -> &[Assignment] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of pairwise different functions among the candidates.
    pub fn classes(&self) -> usize {
        self.classes
    }

    /// Number of automaton equivalence checks performed.
    pub fn pairs_checked(&self) -> usize {
        self.pairs_checked
    }
}

fn fingerprint(h: &Halfspace, probes: &[Assignment]) -> Vec<u64> {
    let mut bits = alloc::vec![0u64; probes.len().div_ceil(64)];
    for (i, p) in probes.iter().enumerate() {
        if h.eval(p) {
            bits[i / 64] |= 1 << (i % 64);
        }
    }
    bits
}

/// The union over all non-equivalent candidate pairs of their
/// lexicographically smallest distinguishing assignment.
///
/// Candidates are first grouped into functions: equal evaluations on `A_1`
/// make two candidates suspects and the automaton settles it. The pairwise
/// pass then runs over one representative per function, which yields the
/// same set because the smallest witness depends only on the two functions.
pub fn distinguishing_set(c: &CandidateSet) -> Result<DistinguishingSet> {
    let n = c.dim();
    let probes = staircase_set(n, 1.min(n)).into_points();
    let mut pairs_checked = 0;
    let mut reps: Vec<&Halfspace> = Vec::new();
    let mut buckets: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for h in c.candidates() {
        let bucket = buckets.entry(fingerprint(h, &probes)).or_default();
        let mut known = false;
        for &r in bucket.iter() {
            pairs_checked += 1;
            if equivalent(reps[r], h)?.is_equivalent() {
                known = true;
                break;
            }
        }
        if !known {
            bucket.push(reps.len());
            reps.push(h);
        }
    }
    let mut points = Vec::new();
    for (i, f) in reps.iter().enumerate() {
        for g in &reps[i + 1..] {
            pairs_checked += 1;
            match equivalent(f, g)? {
                Equivalence::Witness(a) => points.push(a),
                Equivalence::Equivalent => {
                    return Err(Error::InvariantViolation("representatives of two classes are equivalent"))
                }
            }
        }
    }
    points.sort_unstable();
    points.dedup();
    Ok(DistinguishingSet { points, classes: reps.len(), pairs_checked })
}

fn consistent(h: &Halfspace, answers: &AnswerIndex) -> bool {
    answers.iter().all(|(a, v)| h.eval(&a) == v)
}

/// The first candidate that agrees with every recorded answer.
pub fn select_consistent(c: &CandidateSet, answers: &AnswerIndex) -> Result<Halfspace> {
    let mut survivors = c.candidates().iter().filter(|h| consistent(h, answers));
    let first = survivors
        .next()
        .ok_or(Error::InvariantViolation("no candidate agrees with the answers"))?;
    if cfg!(debug_assertions) {
        for other in survivors {
            if !equivalent(first, other)?.is_equivalent() {
                return Err(Error::InvariantViolation("two non-equivalent candidates survive"));
            }
        }
    }
    Ok(first.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn hs(weights: &[i64], u: i64, t: u32) -> Halfspace {
        Halfspace::new(weights.to_vec(), u, t).unwrap()
    }

    fn set(hs: Vec<Halfspace>) -> CandidateSet {
        let n = hs[0].dim();
        CandidateSet::from_halfspaces(n, 2, hs).unwrap()
    }

    fn a(s: &str) -> Assignment {
        s.parse().unwrap()
    }

    #[test]
    fn single_candidate() {
        let d = distinguishing_set(&set(vec![hs(&[1], 1, 1)])).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.pairs_checked(), 0);
    }

    #[test]
    fn two_dictators() {
        let d = distinguishing_set(&set(vec![hs(&[1, 0], 1, 1), hs(&[0, 1], 1, 1)])).unwrap();
        assert_eq!(d.points(), &[a("01")]);
    }

    #[test]
    fn equivalent_pair() {
        let d = distinguishing_set(&set(vec![hs(&[1, 1], 1, 2), hs(&[2, 2], 2, 2)])).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.classes(), 1);
    }

    #[test]
    fn grouping_matches_plain_pairwise_pass() {
        let mut hs_all = Vec::new();
        for w0 in 0..=2 {
            for w1 in 0..=2 {
                for w2 in 0..=2 {
                    for u in 1..=6 {
                        let h = hs(&[w0, w1, w2], u, 2).canonicalize();
                        if !h.is_constant() {
                            hs_all.push(h);
                        }
                    }
                }
            }
        }
        let mut expected = Vec::new();
        for (i, f) in hs_all.iter().enumerate() {
            for g in &hs_all[i + 1..] {
                if let Equivalence::Witness(w) = equivalent(f, g).unwrap() {
                    expected.push(w);
                }
            }
        }
        expected.sort_unstable();
        expected.dedup();
        let d = distinguishing_set(&set(hs_all)).unwrap();
        assert_eq!(d.points(), &expected[..]);
    }

    #[test]
    fn selection() {
        let c = set(vec![hs(&[1, 0], 1, 1), hs(&[0, 1], 1, 1)]);
        let answers: AnswerIndex = [(a("01"), true)].into_iter().collect();
        assert_eq!(select_consistent(&c, &answers).unwrap(), hs(&[0, 1], 1, 1));
        let answers: AnswerIndex = [(a("01"), true), (a("10"), true), (a("00"), true)].into_iter().collect();
        assert!(select_consistent(&c, &answers).is_err());
    }
}
