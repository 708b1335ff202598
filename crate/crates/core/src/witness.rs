//! Ball-local witness searches.
//!
//! Each search scans a Hamming ball around a given assignment in
//! lexicographic order and returns the first hit. The radii come from the
//! structure of halfspaces in `HS_t`: a hit is guaranteed whenever the
//! preconditions hold, so an empty scan is reported as
//! [`Error::InvariantViolation`] rather than as a normal outcome.

use crate::assignment::Assignment;
use crate::ball::hamming_ball;
use crate::halfspace::Halfspace;
use crate::{Error, Result};

/// Radius of a local search, clamped to the dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessSearchBudget {
    radius: usize,
}

impl WitnessSearchBudget {
    pub fn new(radius: usize, n: usize) -> Result<Self> {
        if radius > n {
            return Err(Error::Precondition("search radius exceeds the dimension"));
        }
        Ok(Self { radius })
    }

    /// `2t - 2`, clamped to `n`.
    pub fn strong_assignment(t: u32, n: usize) -> Self {
        Self { radius: (2 * t as usize).saturating_sub(2).min(n) }
    }

    /// `2t + 1`, clamped to `n`.
    pub fn order(t: u32, n: usize) -> Self {
        Self { radius: (2 * t as usize + 1).min(n) }
    }

    pub fn radius(&self) -> usize {
        self.radius
    }
}

/// Strict weight order between two variables, as certified by a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderWitness {
    /// `b` with `b_heavier + b_lighter = 1`.
    pub point: Assignment,
    pub heavier: usize,
    pub lighter: usize,
}

fn has_critical_one(h: &Halfspace, a: &Assignment) -> bool {
    a.ones_indices().any(|i| !h.eval(&a.with(i, false)))
}

fn scan(
    a: &Assignment,
    budget: WitnessSearchBudget,
    hit: impl Fn(&Assignment) -> bool,
) -> Option<Assignment> {
    hamming_ball(a, budget.radius()).into_iter().find(|c| hit(c))
}

/// A strong assignment (weighted sum exactly `u`) within distance `2t - 2`
/// of `a`, where `f(a) = 1` and some 1-coordinate of `a` is critical.
pub fn find_strong_assignment_near(h: &Halfspace, a: &Assignment) -> Result<Assignment> {
    h.check_dim_of(a)?;
    h.check_nonnegative()?;
    h.require_canonical_nonconstant()?;
    if !h.eval(a) {
        return Err(Error::Precondition("f(a) must be 1"));
    }
    if !has_critical_one(h, a) {
        return Err(Error::Precondition("no 1-coordinate of a is critical"));
    }
    let budget = WitnessSearchBudget::strong_assignment(h.bound(), h.dim());
    scan(a, budget, |c| h.weighted_sum(c) == h.threshold())
        .ok_or(Error::InvariantViolation("no strong assignment within distance 2t-2"))
}

/// A point `c` within distance `2t - 2` of `a` with `c_k = 1`, `f(c) = 1`
/// and `f(c|x_k=0) = 0`.
pub fn find_pivot_witness_near(h: &Halfspace, a: &Assignment, k: usize) -> Result<Assignment> {
    h.check_dim_of(a)?;
    h.check_nonnegative()?;
    if k >= h.dim() {
        return Err(Error::Precondition("variable index out of range"));
    }
    if !h.is_relevant_exact(k) {
        return Err(Error::Precondition("x_k is not relevant"));
    }
    if !a.get(k) || !h.eval(a) {
        return Err(Error::Precondition("need a_k = 1 and f(a) = 1"));
    }
    if !has_critical_one(h, a) {
        return Err(Error::Precondition("no 1-coordinate of a is critical"));
    }
    let budget = WitnessSearchBudget::strong_assignment(h.bound(), h.dim());
    scan(a, budget, |c| c.get(k) && h.eval(c) && !h.eval(&c.with(k, false)))
        .ok_or(Error::InvariantViolation("no pivot witness within distance 2t-2"))
}

/// For a minterm `a` of weight at least 2, a point `b` within distance
/// `2t + 1` with `b_j + b_k = 1` whose two `(j, k)`-restrictions differ.
/// Returns `None` when `f` is symmetric in `x_j, x_k`.
pub fn find_order_witness_near(
    h: &Halfspace,
    a: &Assignment,
    j: usize,
    k: usize,
) -> Result<Option<OrderWitness>> {
    h.check_dim_of(a)?;
    h.check_nonnegative()?;
    if j >= h.dim() || k >= h.dim() || j == k {
        return Err(Error::Precondition("need two distinct variables in range"));
    }
    if h.is_symmetric_exact(j, k) {
        return Ok(None);
    }
    if !h.is_minterm(a) || a.weight() < 2 {
        return Err(Error::Precondition("a must be a minterm of weight at least 2"));
    }
    let budget = WitnessSearchBudget::order(h.bound(), h.dim());
    let found = scan(a, budget, |b| {
        b.get(j) != b.get(k)
            && h.eval(&b.with(j, true).with(k, false)) != h.eval(&b.with(j, false).with(k, true))
    })
    .ok_or(Error::InvariantViolation("no order witness within distance 2t+1"))?;
    let (heavier, lighter) = if h.eval(&found.with(j, true).with(k, false)) {
        (j, k)
    } else {
        (k, j)
    };
    Ok(Some(OrderWitness { point: found, heavier, lighter }))
}
