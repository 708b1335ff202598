//! Layered automata for Boolean combinations of halfspaces.
//!
//! For halfspaces `f_1..f_k` over `x_1..x_n` and a combiner
//! `g: {0,1}^k -> {0,1}`, level `i` holds the reachable tuples of partial
//! sums `(W_1, .., W_k)` after reading `x_1..x_i`. Reading 0 keeps the tuple,
//! reading 1 adds the weights of `x_{i+1}`. A level-`n` state accepts iff
//! `g([W_1 >= u_1], .., [W_k >= u_k]) = 1`.
//!
//! Tuples are packed into a mixed-radix `u64` key. The packing is linear, so
//! the 1-successor of every key on a level is `key + delta` for a per-level
//! constant, and each level is the sorted merge of two shifted copies of the
//! previous one.

use alloc::vec;
use alloc::vec::Vec;

use crate::assignment::{check_dim, Assignment};
use crate::halfspace::Halfspace;
use crate::{Error, Result};

/// Truth table of `g: {0,1}^k -> {0,1}`. Entry `sum_j b_j 2^j` holds
/// `g(b_1, .., b_k)`, with `b_1` the least significant bit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combiner {
    arity: usize,
    table: Vec<bool>,
}

impl Combiner {
    pub fn new(arity: usize, table: Vec<bool>) -> Result<Self> {
        if arity >= 16 || table.len() != 1 << arity {
            return Err(Error::Precondition("truth table length must be 2^k"));
        }
        Ok(Self { arity, table })
    }

    pub fn from_fn(arity: usize, g: impl Fn(&[bool]) -> bool) -> Self {
        let table = (0..1usize << arity)
            .map(|idx| {
                let bits: Vec<bool> = (0..arity).map(|j| idx >> j & 1 == 1).collect();
                g(&bits)
            })
            .collect();
        Self { arity, table }
    }

    pub fn identity() -> Self {
        Self { arity: 1, table: vec![false, true] }
    }

    pub fn xor() -> Self {
        Self { arity: 2, table: vec![false, true, true, false] }
    }

    pub fn and(arity: usize) -> Self {
        Self::from_fn(arity, |b| b.iter().all(|&x| x))
    }

    pub fn or(arity: usize) -> Self {
        Self::from_fn(arity, |b| b.iter().any(|&x| x))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, inputs: &[bool]) -> bool {
        assert_eq!(inputs.len(), self.arity);
        let idx = inputs.iter().enumerate().fold(0, |acc, (j, &b)| acc | (usize::from(b) << j));
        self.table[idx]
    }
}

#[derive(Clone, Debug)]
struct Component {
    weights: Vec<i64>,
    threshold: i64,
    offset: i64,
    radix: u64,
    place: u64,
}

impl Component {
    fn decode(&self, key: u64) -> i64 {
        ((key / self.place) % self.radix) as i64 - self.offset
    }
}

/// Result of an equivalence query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    /// The lexicographically smallest assignment on which the two differ.
    Witness(Assignment),
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent)
    }

    pub fn witness(&self) -> Option<Assignment> {
        match self {
            Equivalence::Equivalent => None,
            Equivalence::Witness(a) => Some(*a),
        }
    }
}

/// Only reachable states are materialised.
#[derive(Clone, Debug)]
pub struct LayeredAutomaton {
    n: usize,
    components: Vec<Component>,
    combiner: Combiner,
    /// Sorted state keys, levels `0..=n`.
    levels: Vec<Vec<u64>>,
    /// Successor indices on 0 and 1, levels `0..n`.
    next: Vec<Vec<[u32; 2]>>,
    accepting: Vec<bool>,
}

/// `(2t)^k n^(k+1)`, saturating.
pub fn state_bound(t: u32, k: usize, n: usize) -> u128 {
    let base = u128::from(2 * t);
    let mut bound: u128 = 1;
    for _ in 0..k {
        bound = bound.saturating_mul(base);
    }
    for _ in 0..=k {
        bound = bound.saturating_mul(n as u128);
    }
    bound
}

impl LayeredAutomaton {
    /// Builds the automaton of `g(f_1, .., f_k)`.
    pub fn build(halfspaces: &[&Halfspace], combiner: &Combiner) -> Result<Self> {
        if halfspaces.len() != combiner.arity() {
            return Err(Error::ArityMismatch {
                expected: combiner.arity(),
                found: halfspaces.len(),
            });
        }
        let n = halfspaces.first().map_or(0, |h| h.dim());
        check_dim(n)?;
        if let Some(h) = halfspaces.iter().find(|h| h.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: h.dim() });
        }

        let mut place: u64 = 1;
        let mut components = Vec::with_capacity(halfspaces.len());
        for h in halfspaces {
            let offset = -h.min_sum();
            let radix = (h.max_sum() + offset + 1) as u64;
            components.push(Component {
                weights: h.weights().to_vec(),
                threshold: h.threshold(),
                offset,
                radix,
                place,
            });
            place = place.checked_mul(radix).ok_or(Error::StateKeyOverflow)?;
        }
        if place > i64::MAX as u64 {
            return Err(Error::StateKeyOverflow);
        }

        let start: u64 = components.iter().map(|c| c.offset as u64 * c.place).sum();
        let mut levels = Vec::with_capacity(n + 1);
        let mut next = Vec::with_capacity(n);
        levels.push(vec![start]);
        for i in 0..n {
            let delta: i64 = components
                .iter()
                .map(|c| c.weights[i] * c.place as i64)
                .sum();
            let (merged, links) = step(levels.last().unwrap(), delta);
            levels.push(merged);
            next.push(links);
        }

        let accepting = levels[n]
            .iter()
            .map(|&key| {
                let bits: Vec<bool> =
                    components.iter().map(|c| c.decode(key) >= c.threshold).collect();
                combiner.eval(&bits)
            })
            .collect();

        let automaton = Self { n, components, combiner: combiner.clone(), levels, next, accepting };
        let t = halfspaces.iter().map(|h| h.bound()).max().unwrap_or(1);
        let reachable = automaton.state_count() as u128 - 1;
        if reachable > state_bound(t, halfspaces.len(), n) {
            return Err(Error::InvariantViolation("reachable states exceed (2t)^k n^(k+1)"));
        }
        Ok(automaton)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn combiner(&self) -> &Combiner {
        &self.combiner
    }

    /// Total number of reachable states, including the start state.
    pub fn state_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// The partial-sum tuple of state `index` on `level`.
    pub fn state_sums(&self, level: usize, index: usize) -> Vec<i64> {
        let key = self.levels[level][index];
        self.components.iter().map(|c| c.decode(key)).collect()
    }

    pub fn accepts(&self, a: &Assignment) -> Result<bool> {
        if a.dim() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: a.dim() });
        }
        let mut state = 0usize;
        for i in 0..self.n {
            state = self.next[i][state][usize::from(a.get(i))] as usize;
        }
        Ok(self.accepting[state])
    }

    /// Per level, whether an accepting state is reachable from each state.
    fn live(&self) -> Vec<Vec<bool>> {
        let mut live = vec![Vec::new(); self.n + 1];
        live[self.n] = self.accepting.clone();
        for i in (0..self.n).rev() {
            let above = &live[i + 1];
            live[i] = self.next[i].iter().map(|&[z, o]| above[z as usize] || above[o as usize]).collect();
        }
        live
    }

    /// The lexicographically smallest accepted assignment, if any.
    pub fn find_accepting(&self) -> Option<Assignment> {
        let live = self.live();
        if !live[0][0] {
            return None;
        }
        let mut word = Assignment::zeros(self.n);
        let mut state = 0usize;
        for i in 0..self.n {
            let [zero, one] = self.next[i][state];
            if live[i + 1][zero as usize] {
                state = zero as usize;
            } else {
                word = word.with(i, true);
                state = one as usize;
            }
        }
        Some(word)
    }

    /// Number of accepted assignments, by path counting.
    pub fn count_accepting(&self) -> u128 {
        let mut counts: Vec<u128> = self.accepting.iter().map(|&a| u128::from(a)).collect();
        for i in (0..self.n).rev() {
            counts = self.next[i]
                .iter()
                .map(|&[z, o]| counts[z as usize] + counts[o as usize])
                .collect();
        }
        counts[0]
    }
}

/// Next level from sorted `keys`: the sorted union of `keys` and
/// `keys + delta`, plus the successor indices of every current state.
fn step(keys: &[u64], delta: i64) -> (Vec<u64>, Vec<[u32; 2]>) {
    if delta == 0 {
        let links = (0..keys.len() as u32).map(|i| [i, i]).collect();
        return (keys.to_vec(), links);
    }
    let shifted = |i: usize| keys[i].wrapping_add(delta as u64);
    let len = keys.len();
    let mut merged = Vec::with_capacity(2 * len);
    let mut zero_idx = vec![0u32; len];
    let mut one_idx = vec![0u32; len];
    let (mut p, mut q) = (0, 0);
    while p < len || q < len {
        let take_zero = q == len || (p < len && keys[p] <= shifted(q));
        let key = if take_zero { keys[p] } else { shifted(q) };
        if merged.last() != Some(&key) {
            merged.push(key);
        }
        let idx = (merged.len() - 1) as u32;
        if take_zero {
            zero_idx[p] = idx;
            p += 1;
        } else {
            one_idx[q] = idx;
            q += 1;
        }
    }
    let links = zero_idx.into_iter().zip(one_idx).map(|(z, o)| [z, o]).collect();
    (merged, links)
}

/// Decides `f_1 == f_2` through the XOR automaton; on inequivalence returns
/// the lexicographically smallest distinguishing assignment.
pub fn equivalent(f1: &Halfspace, f2: &Halfspace) -> Result<Equivalence> {
    let automaton = LayeredAutomaton::build(&[f1, f2], &Combiner::xor())?;
    Ok(match automaton.find_accepting() {
        None => Equivalence::Equivalent,
        Some(a) => Equivalence::Witness(a),
    })
}
