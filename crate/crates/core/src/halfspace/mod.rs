//! Boolean halfspaces `[w_1 x_1 + ... + w_n x_n >= u]`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::assignment::{check_dim, Assignment};
use crate::{Error, Result};

mod predicates;

/// A halfspace with integer weights in `[-t, t]` and an integer threshold.
///
/// The learner's target class only uses weights in `[0, t]`; see
/// [`Halfspace::is_nonnegative`]. The automaton accepts the wider class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    weights: Vec<i64>,
    threshold: i64,
    bound: u32,
}

impl Halfspace {
    pub fn new(weights: Vec<i64>, threshold: i64, bound: u32) -> Result<Self> {
        check_dim(weights.len())?;
        if bound == 0 {
            return Err(Error::ZeroWeightBound);
        }
        let t = i64::from(bound);
        if let Some((index, &weight)) = weights.iter().enumerate().find(|(_, w)| w.abs() > t) {
            return Err(Error::WeightOutOfRange { index, weight, min: -t, max: t });
        }
        Ok(Self { weights, threshold, bound })
    }

    /// Like [`Halfspace::new`] but additionally requires weights in `[0, t]`.
    pub fn new_nonnegative(weights: Vec<i64>, threshold: i64, bound: u32) -> Result<Self> {
        let h = Self::new(weights, threshold, bound)?;
        h.check_nonnegative()?;
        Ok(h)
    }

    /// The canonical constant: all weights zero, threshold 0 (constant 1) or
    /// 1 (constant 0).
    pub fn constant(n: usize, bound: u32, value: bool) -> Self {
        Self::new(vec![0; n], i64::from(!value), bound).expect("valid constant")
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    #[inline]
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    #[inline]
    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    #[inline]
    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn is_nonnegative(&self) -> bool {
        self.weights.iter().all(|&w| w >= 0)
    }

    pub(crate) fn check_nonnegative(&self) -> Result<()> {
        match self.weights.iter().enumerate().find(|(_, &w)| w < 0) {
            Some((index, &weight)) => Err(Error::WeightOutOfRange {
                index,
                weight,
                min: 0,
                max: i64::from(self.bound),
            }),
            None => Ok(()),
        }
    }

    pub(crate) fn check_dim_of(&self, a: &Assignment) -> Result<()> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: a.dim() });
        }
        Ok(())
    }

    /// `sum_i w_i a_i`. Panics on dimension mismatch.
    #[inline]
    pub fn weighted_sum(&self, a: &Assignment) -> i64 {
        assert_eq!(a.dim(), self.dim(), "dimension mismatch");
        let n = self.dim();
        let mut bits = a.rank();
        let mut sum = 0;
        while bits != 0 {
            let low = bits.trailing_zeros() as usize;
            sum += self.weights[n - 1 - low];
            bits &= bits - 1;
        }
        sum
    }

    /// `f(a)`. Panics on dimension mismatch; see [`Halfspace::evaluate`].
    #[inline]
    pub fn eval(&self, a: &Assignment) -> bool {
        self.weighted_sum(a) >= self.threshold
    }

    pub fn evaluate(&self, a: &Assignment) -> Result<bool> {
        self.check_dim_of(a)?;
        Ok(self.eval(a))
    }

    pub fn min_sum(&self) -> i64 {
        self.weights.iter().filter(|&&w| w < 0).sum()
    }

    pub fn max_sum(&self) -> i64 {
        self.weights.iter().filter(|&&w| w > 0).sum()
    }

    /// `Some(v)` when the function is constant `v`.
    pub fn constant_value(&self) -> Option<bool> {
        if self.min_sum() >= self.threshold {
            Some(true)
        } else if self.max_sum() < self.threshold {
            Some(false)
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// Achievable weighted sums over all assignments.
    pub fn achievable_sums(&self) -> SumSet {
        SumSet::of(self.weights.iter().copied())
    }

    /// Pointwise-equal halfspace whose threshold is the smallest achievable
    /// weighted sum `>= u`, so a strong assignment exists. A constant-0
    /// function gets threshold `max_sum + 1`; a constant-1 function ends up
    /// with threshold `min_sum`.
    #[must_use]
    pub fn canonicalize(&self) -> Halfspace {
        let threshold = self
            .achievable_sums()
            .min_at_least(self.threshold)
            .unwrap_or(self.max_sum() + 1);
        Halfspace { threshold, ..self.clone() }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonicalize().threshold == self.threshold
    }

    /// Whether `a` is a strong assignment: `w · a = u` exactly.
    pub fn is_strong_assignment(&self, a: &Assignment) -> Result<bool> {
        self.check_dim_of(a)?;
        self.require_canonical_nonconstant()?;
        Ok(self.weighted_sum(a) == self.threshold)
    }

    pub(crate) fn require_canonical_nonconstant(&self) -> Result<()> {
        if self.is_constant() {
            return Err(Error::Precondition("halfspace is constant"));
        }
        if !self.is_canonical() {
            return Err(Error::Precondition("halfspace threshold is not canonical"));
        }
        Ok(())
    }

    /// Same weights with `w_i` and `w_j` replaced.
    pub(crate) fn with_weights_at(&self, i: usize, wi: i64, j: usize, wj: i64) -> Halfspace {
        let mut weights = self.weights.clone();
        weights[i] = wi;
        weights[j] = wj;
        Halfspace { weights, ..self.clone() }
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        let mut first = true;
        for (i, &w) in self.weights.iter().enumerate() {
            if w == 0 {
                continue;
            }
            if !first {
                f.write_str(if w < 0 { " - " } else { " + " })?;
            } else if w < 0 {
                f.write_str("-")?;
            }
            first = false;
            match w.abs() {
                1 => write!(f, "x{}", i + 1)?,
                m => write!(f, "{m}x{}", i + 1)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " >= {}]", self.threshold)
    }
}

impl fmt::Debug for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (t={}, n={})", self.bound, self.dim())
    }
}

/// The set of subset sums of a multiset of integers.
#[derive(Clone, Debug)]
pub struct SumSet {
    offset: i64,
    reachable: Vec<bool>,
}

impl SumSet {
    pub fn of(values: impl Iterator<Item = i64> + Clone) -> Self {
        let lo: i64 = values.clone().filter(|&w| w < 0).sum();
        let hi: i64 = values.clone().filter(|&w| w > 0).sum();
        let mut reachable = vec![false; (hi - lo + 1) as usize];
        reachable[(-lo) as usize] = true;
        for w in values {
            if w > 0 {
                let w = w as usize;
                for s in (w..reachable.len()).rev() {
                    if reachable[s - w] {
                        reachable[s] = true;
                    }
                }
            } else if w < 0 {
                let w = (-w) as usize;
                for s in 0..reachable.len() - w {
                    if reachable[s + w] {
                        reachable[s] = true;
                    }
                }
            }
        }
        Self { offset: lo, reachable }
    }

    pub fn contains(&self, s: i64) -> bool {
        let idx = s - self.offset;
        idx >= 0 && (idx as usize) < self.reachable.len() && self.reachable[idx as usize]
    }

    /// Smallest member `>= s`.
    pub fn min_at_least(&self, s: i64) -> Option<i64> {
        let start = (s - self.offset).max(0);
        (start as usize..self.reachable.len())
            .find(|&i| self.reachable[i])
            .map(|i| i as i64 + self.offset)
    }

    /// Whether some member lies in `[lo, hi]`.
    pub fn intersects(&self, lo: i64, hi: i64) -> bool {
        self.min_at_least(lo).is_some_and(|s| s <= hi)
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.reachable
            .iter()
            .enumerate()
            .filter(|(_, &r)| r)
            .map(|(i, _)| i as i64 + self.offset)
    }
}
