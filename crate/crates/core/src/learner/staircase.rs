//! The staircase sets `A_m` and the query sets built from them.

use alloc::vec::Vec;

use crate::assignment::Assignment;
use crate::ball::union_of_balls;

/// `A_m`: the union of `B(0^i 1^(n-i-j) 0^j; m)` over all `i + j <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseSet {
    n: usize,
    radius: usize,
    points: Vec<Assignment>,
}

impl StaircaseSet {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Members in lexicographic order.
    pub fn points(&self) -> &[Assignment] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Assignment> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, a: &Assignment) -> bool {
        self.points.binary_search(a).is_ok()
    }
}

/// The `0^i 1^(n-i-j) 0^j` words, each once, `0^n` included.
pub fn staircase_centers(n: usize) -> Vec<Assignment> {
    let mut centers = alloc::vec![Assignment::zeros(n)];
    for lead in 0..n {
        for trail in 0..n - lead {
            centers.push(Assignment::block(n, lead, trail));
        }
    }
    centers
}

/// Builds `A_m`. Panics if `m > n`.
pub fn staircase_set(n: usize, m: usize) -> StaircaseSet {
    assert!(m <= n, "staircase radius {m} exceeds dimension {n}");
    StaircaseSet { n, radius: m, points: union_of_balls(n, &staircase_centers(n), m) }
}

/// Radius of the first-round staircase set: `4t + 1`, or 1 when `t = 1`,
/// clamped to `n`.
///
/// With `t = 1` every relevant weight equals 1, so no weight order has to be
/// discovered and `A_1` already decides relevance and contains `B(0^n; 1)`.
pub fn round1_radius(t: u32, n: usize) -> usize {
    let r = if t == 1 { 1 } else { 4 * t as usize + 1 };
    r.min(n)
}

/// The first-round batch of the adaptive learner.
pub fn round1_queries(n: usize, t: u32) -> Vec<Assignment> {
    staircase_set(n, round1_radius(t, n)).into_points()
}

/// Radius of the balls the non-adaptive learner puts around `A_(2t-2)`.
pub fn nonadaptive_radius(t: u32, n: usize) -> usize {
    let t = t as usize;
    (8 * t * t * t).min(n)
}

/// The single batch of the non-adaptive learner: the first-round set plus
/// `B(a; 8t^3)` for every `a` in `A_(2t-2)`.
pub fn nonadaptive_queries(n: usize, t: u32) -> Vec<Assignment> {
    let inner = staircase_set(n, (2 * t as usize - 2).min(n));
    let balls = union_of_balls(n, inner.points(), nonadaptive_radius(t, n));
    let mut all = round1_queries(n, t);
    all.extend(balls);
    all.sort_unstable();
    all.dedup();
    all
}
