//! The two-round adaptive learner and the one-round non-adaptive learner.
//!
//! Round one asks a staircase set `A_m`. Its answers give the constant
//! verdict, the relevant variables and the weight order up to symmetry. The
//! candidates are then all halfspaces with weights nondecreasing along that
//! order. The adaptive learner asks, in round two, a point separating every
//! non-equivalent pair of candidates. The non-adaptive learner instead asks
//! large balls around `A_(2t-2)` up front.

mod candidates;
mod distinguish;
mod round1;
mod specifying;
mod staircase;

pub use candidates::{enumerate_candidates, for_each_nondecreasing, CandidateSet};
pub use distinguish::{distinguishing_set, select_consistent, DistinguishingSet};
pub use round1::{analyze_round1, Round1Summary};
pub use specifying::{specifying_set_check, SpecifyingVerdict};
pub use staircase::{
    nonadaptive_queries, nonadaptive_radius, round1_queries, round1_radius, staircase_centers,
    staircase_set, StaircaseSet,
};

use alloc::vec::Vec;

use crate::assignment::Assignment;
use crate::halfspace::Halfspace;
use crate::oracle::MembershipOracle;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LearnOutcome {
    pub hypothesis: Halfspace,
    pub summary: Round1Summary,
    /// Candidates enumerated (0 for a constant target).
    pub candidates: usize,
    /// Automaton equivalence checks made while building the second round.
    pub pairs_checked: usize,
}

fn constant_outcome(summary: Round1Summary, value: bool) -> LearnOutcome {
    LearnOutcome {
        hypothesis: Halfspace::constant(summary.n, summary.t, value),
        summary,
        candidates: 0,
        pairs_checked: 0,
    }
}

/// Learns a target in `HS_t` in two rounds, or one if it is constant. The
/// second round asks the distinguishing points not already answered.
pub fn learn_adaptive<O: MembershipOracle + ?Sized>(oracle: &mut O, t: u32) -> Result<LearnOutcome> {
    if t == 0 {
        return Err(Error::ZeroWeightBound);
    }
    let n = oracle.dim();
    oracle.submit_round(&round1_queries(n, t))?;
    let summary = analyze_round1(n, t, oracle.answers())?;
    if let Some(value) = summary.constant {
        return Ok(constant_outcome(summary, value));
    }
    let candidates = enumerate_candidates(&summary, t)?;
    let separating = distinguishing_set(&candidates)?;
    let unanswered: Vec<Assignment> = separating
        .points()
        .iter()
        .filter(|b| !oracle.answers().contains(b))
        .copied()
        .collect();
    oracle.submit_round(&unanswered)?;
    let hypothesis = select_consistent(&candidates, oracle.answers())?;
    Ok(LearnOutcome {
        hypothesis,
        summary,
        candidates: candidates.len(),
        pairs_checked: separating.pairs_checked(),
    })
}

/// Learns a target in `HS_t` from the single batch [`nonadaptive_queries`].
pub fn learn_nonadaptive<O: MembershipOracle + ?Sized>(
    oracle: &mut O,
    t: u32,
) -> Result<LearnOutcome> {
    if t == 0 {
        return Err(Error::ZeroWeightBound);
    }
    let n = oracle.dim();
    oracle.submit_round(&nonadaptive_queries(n, t))?;
    let summary = analyze_round1(n, t, oracle.answers())?;
    if let Some(value) = summary.constant {
        return Ok(constant_outcome(summary, value));
    }
    let candidates = enumerate_candidates(&summary, t)?;
    let hypothesis = select_consistent(&candidates, oracle.answers()).map_err(|e| match e {
        Error::InvariantViolation("no candidate agrees with the answers") => Error::NonAdaptiveCoverage,
        other => other,
    })?;
    Ok(LearnOutcome { hypothesis, summary, candidates: candidates.len(), pairs_checked: 0 })
}
