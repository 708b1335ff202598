//! Minterms, relevance and symmetry.
//!
//! `is_relevant`, `is_symmetric_pair` and `nonsymmetry_minterm_witness`
//! enumerate the cube and are meant as desk-scale oracles. The `*_exact`
//! variants decide the same properties through subset sums.

use alloc::vec::Vec;

use super::{Halfspace, SumSet};
use crate::assignment::{cube, Assignment};
use crate::{Error, Result};

impl Halfspace {
    /// `f(a) = 1` and every single 1-to-0 flip gives 0.
    pub fn is_minterm(&self, a: &Assignment) -> bool {
        self.eval(a) && a.ones_indices().all(|i| !self.eval(&a.with(i, false)))
    }

    /// `f(a) = 1` and every 1-coordinate is critical or irrelevant.
    pub fn is_semiminterm(&self, a: &Assignment) -> bool {
        self.eval(a)
            && a.ones_indices()
                .all(|i| !self.eval(&a.with(i, false)) || !self.is_relevant(i))
    }

    /// Whether `f|x_i=0` and `f|x_i=1` differ, by enumeration over the
    /// other `n - 1` variables.
    pub fn is_relevant(&self, i: usize) -> bool {
        assert!(i < self.dim());
        cube(self.dim())
            .filter(|a| !a.get(i))
            .any(|a| self.eval(&a) != self.eval(&a.with(i, true)))
    }

    fn sums_without(&self, excluded: &[usize]) -> SumSet {
        SumSet::of(
            self.weights
                .iter()
                .enumerate()
                .filter(move |(k, _)| !excluded.contains(k))
                .map(|(_, &w)| w)
                .collect::<Vec<_>>()
                .into_iter(),
        )
    }

    /// Relevance of `x_i` decided through the subset sums of the other
    /// weights: some sum `s` must satisfy `[s >= u] != [s + w_i >= u]`.
    pub fn is_relevant_exact(&self, i: usize) -> bool {
        let w = self.weights[i];
        let u = self.threshold;
        let sums = self.sums_without(&[i]);
        match w.cmp(&0) {
            core::cmp::Ordering::Greater => sums.intersects(u - w, u - 1),
            core::cmp::Ordering::Less => sums.intersects(u, u - w - 1),
            core::cmp::Ordering::Equal => false,
        }
    }

    pub fn relevant_variables(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.is_relevant_exact(i)).collect()
    }

    /// `f|x_i=0,x_j=1 == f|x_i=1,x_j=0`, by enumeration.
    pub fn is_symmetric_pair(&self, i: usize, j: usize) -> bool {
        assert!(i < self.dim() && j < self.dim());
        if i == j {
            return true;
        }
        cube(self.dim())
            .filter(|a| !a.get(i) && !a.get(j))
            .all(|a| self.eval(&a.with(j, true)) == self.eval(&a.with(i, true)))
    }

    /// Symmetry decided through subset sums: the two restrictions are
    /// `[s >= u - w_j]` and `[s >= u - w_i]` over the remaining sums `s`.
    pub fn is_symmetric_exact(&self, i: usize, j: usize) -> bool {
        if i == j || self.weights[i] == self.weights[j] {
            return true;
        }
        let (lo, hi) = {
            let a = self.threshold - self.weights[i];
            let b = self.threshold - self.weights[j];
            (a.min(b), a.max(b))
        };
        !self.sums_without(&[i, j]).intersects(lo, hi - 1)
    }

    /// The lexicographically first minterm `a` with `a_i + a_j = 1` whose
    /// two `(i, j)`-restrictions evaluate differently; `None` iff `f` is
    /// symmetric in `x_i, x_j`.
    pub fn nonsymmetry_minterm_witness(&self, i: usize, j: usize) -> Option<Assignment> {
        assert!(i < self.dim() && j < self.dim());
        if i == j {
            return None;
        }
        cube(self.dim()).find(|a| {
            a.get(i) != a.get(j)
                && self.is_minterm(a)
                && self.eval(&a.with(i, false).with(j, true))
                    != self.eval(&a.with(i, true).with(j, false))
        })
    }

    /// Moves weight between `x_i` and `x_j` one unit at a time until
    /// `|w_i - w_j| <= 1`. Each transfer preserves the function because the
    /// pair is symmetric.
    pub fn smooth_symmetric_weights(&self, i: usize, j: usize) -> Result<Halfspace> {
        if !self.is_symmetric_exact(i, j) {
            return Err(Error::Precondition("variables are not symmetric"));
        }
        let (mut wi, mut wj) = (self.weights[i], self.weights[j]);
        while wi > wj + 1 {
            wi -= 1;
            wj += 1;
        }
        while wj > wi + 1 {
            wj -= 1;
            wi += 1;
        }
        Ok(self.with_weights_at(i, wi, j, wj))
    }
}
