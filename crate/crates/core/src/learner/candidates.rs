//! Candidate hypotheses consistent with an inferred weight order.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;

use super::round1::Round1Summary;
use crate::halfspace::Halfspace;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    n: usize,
    t: u32,
    order: Vec<usize>,
    candidates: Vec<Halfspace>,
}

impl CandidateSet {
    /// Build a set directly from halfspaces of one dimension.
    pub fn from_halfspaces(n: usize, t: u32, candidates: Vec<Halfspace>) -> Result<Self> {
        if let Some(h) = candidates.iter().find(|h| h.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: h.dim() });
        }
        Ok(Self { n, t, order: Vec::new(), candidates })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> u32 {
        self.t
    }

    /// The relevant variables in the order the weight vectors follow.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn candidates(&self) -> &[Halfspace] {
        &self.candidates
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }
}

/// Calls `visit` with every nondecreasing vector in `[1, t]^m`, in
/// lexicographic order.
pub fn for_each_nondecreasing(m: usize, t: i64, mut visit: impl FnMut(&[i64])) {
    let mut w = vec![1i64; m];
    loop {
        visit(&w);
        let Some(p) = w.iter().rposition(|&x| x < t) else {
            return;
        };
        let v = w[p] + 1;
        w[p..].iter_mut().for_each(|x| *x = v);
    }
}

/// Every halfspace whose weights are nondecreasing along the inferred order,
/// lie in `[1, t]` on relevant variables and are 0 elsewhere, with thresholds
/// in `[1, mt]` (`[1, t]` in the weight-one case). Thresholds are
/// canonicalised, repeats and constants dropped, first occurrence kept.
pub fn enumerate_candidates(summary: &Round1Summary, t: u32) -> Result<CandidateSet> {
    if summary.constant.is_some() {
        return Err(Error::Precondition("candidates need a non-constant verdict"));
    }
    let n = summary.n;
    let order = summary.order();
    let m = order.len();
    let ti = i64::from(t);
    let max_u = if summary.weight_one_case { ti } else { m as i64 * ti };
    let mut seen: HashSet<(Vec<i64>, i64)> = HashSet::new();
    let mut candidates = Vec::new();
    let mut weights = vec![0i64; n];
    let mut failure = None;
    for_each_nondecreasing(m, ti, |w| {
        for (&var, &wi) in order.iter().zip(w) {
            weights[var] = wi;
        }
        for u in 1..=max_u {
            let h = match Halfspace::new_nonnegative(weights.clone(), u, t) {
                Ok(h) => h.canonicalize(),
                Err(e) => {
                    failure.get_or_insert(e);
                    return;
                }
            };
            if !h.is_constant() && seen.insert((h.weights().to_vec(), h.threshold())) {
                candidates.push(h);
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(CandidateSet { n, t, order, candidates })
}
