//! Constructive combinatorics on bounded integer sequences.
//!
//! * [`bounded_prefix_permutation`]: reorder `w_1..w_m in [-t, t]` with sum
//!   in `[-t+1, t-1]` so every prefix sum stays in `[-t+1, t-1]`.
//! * [`zero_sum_partition`]: split the indices into zero-sum blocks of size
//!   at most `2t - 1` plus a last block carrying the whole sum, of size at
//!   most `2t - 2` when that sum is nonzero.
//! * [`pair_target_subset`]: for pairs in `[-t, t]^2`, a subset hitting the
//!   total with at most `8t^3 - 4t^2 - 2t + 1` elements.
//!
//! Each construction has a matching `check_*` function used by the property
//! suites and by `hslearn verify-lemmas`.
//!
//! Known gap: for `t = 1` the block bound `2t - 1 = 1` cannot hold when the
//! sequence contains a `+1` and a `-1`; the construction then returns pair
//! blocks of size 2, and [`check_partition`] reports them.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedIntSequence {
    values: Vec<i64>,
    bound: i64,
}

impl BoundedIntSequence {
    pub fn new(values: Vec<i64>, bound: i64) -> Result<Self> {
        if bound <= 0 {
            return Err(Error::ZeroWeightBound);
        }
        if let Some((index, &weight)) = values.iter().enumerate().find(|(_, v)| v.abs() > bound) {
            return Err(Error::WeightOutOfRange { index, weight, min: -bound, max: bound });
        }
        Ok(Self { values, bound })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }

    fn sum_in_range(&self) -> bool {
        self.sum().abs() < self.bound
    }

    fn all_extreme(&self) -> bool {
        self.values.iter().all(|v| *v == 0 || v.abs() == self.bound)
    }
}

/// Blocks of a partition of `0..m`; the last block carries the total sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn last(&self) -> &[usize] {
        self.blocks.last().expect("a partition always has a last block")
    }

    pub fn into_blocks(self) -> Vec<Vec<usize>> {
        self.blocks
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSequence {
    values: Vec<(i64, i64)>,
    bound: i64,
}

impl PairSequence {
    pub fn new(values: Vec<(i64, i64)>, bound: i64) -> Result<Self> {
        if bound <= 0 {
            return Err(Error::ZeroWeightBound);
        }
        for (index, &(w, v)) in values.iter().enumerate() {
            if let Some(weight) = [w, v].into_iter().find(|x| x.abs() > bound) {
                return Err(Error::WeightOutOfRange { index, weight, min: -bound, max: bound });
            }
        }
        Ok(Self { values, bound })
    }

    pub fn values(&self) -> &[(i64, i64)] {
        &self.values
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn sum(&self) -> (i64, i64) {
        self.values.iter().fold((0, 0), |(a, b), &(w, v)| (a + w, b + v))
    }
}

/// `8t^3 - 4t^2 - 2t + 1`.
pub fn pair_subset_bound(t: i64) -> i64 {
    8 * t * t * t - 4 * t * t - 2 * t + 1
}

fn lowest_unused(values: &[i64], used: &[bool], pred: impl Fn(i64) -> bool) -> Option<usize> {
    (0..values.len()).find(|&i| !used[i] && pred(values[i]))
}

/// An order `phi` of the indices keeping every prefix sum in `[-t+1, t-1]`.
///
/// Requires the total in `[-t+1, t-1]` and at least one entry outside
/// `{-t, 0, t}`. Ties are broken by taking the lowest eligible index.
pub fn bounded_prefix_permutation(seq: &BoundedIntSequence) -> Result<Vec<usize>> {
    if !seq.sum_in_range() {
        return Err(Error::Precondition("sum must lie in [-t+1, t-1]"));
    }
    if seq.all_extreme() {
        return Err(Error::Precondition("all entries lie in {-t, 0, t}"));
    }
    let w = seq.values();
    let t = seq.bound();
    let mut used = vec![false; w.len()];
    let mut order = Vec::with_capacity(w.len());
    let take = |i: usize, used: &mut Vec<bool>, order: &mut Vec<usize>| {
        used[i] = true;
        order.push(i);
        w[i]
    };

    let first = lowest_unused(w, &used, |v| v != 0 && v.abs() < t).expect("checked above");
    let mut prefix = take(first, &mut used, &mut order);

    // Cancel +t/-t pairs while both remain, stepping away from the current sign.
    while let (Some(p), Some(q)) = (
        lowest_unused(w, &used, |v| v == t),
        lowest_unused(w, &used, |v| v == -t),
    ) {
        let (a, b) = if prefix < 0 { (p, q) } else { (q, p) };
        prefix += take(a, &mut used, &mut order);
        prefix += take(b, &mut used, &mut order);
    }

    while order.len() < w.len() {
        let next = match prefix.signum() {
            1 => lowest_unused(w, &used, |v| v < 0)
                .or_else(|| lowest_unused(w, &used, |v| v == 0))
                .or_else(|| lowest_unused(w, &used, |_| true)),
            -1 => lowest_unused(w, &used, |v| v > 0)
                .or_else(|| lowest_unused(w, &used, |v| v == 0))
                .or_else(|| lowest_unused(w, &used, |_| true)),
            _ => lowest_unused(w, &used, |v| v.abs() < t)
                .or_else(|| lowest_unused(w, &used, |_| true)),
        }
        .expect("an unused index remains");
        prefix += take(next, &mut used, &mut order);
        if prefix.abs() >= t {
            return Err(Error::InvariantViolation("prefix sum left [-t+1, t-1]"));
        }
    }
    Ok(order)
}

/// Partition into zero-sum blocks of size `<= 2t - 1` and a last block
/// summing to the total (size `<= 2t - 2` when the total is nonzero).
///
/// Blocks are cut from the bounded-prefix order at the earliest repeated
/// prefix value. Sequences made only of `-t, 0, t` are split into `{+t, -t}`
/// pairs and `{0}` singletons. The last block is empty only for `m = 0`.
pub fn zero_sum_partition(seq: &BoundedIntSequence) -> Result<Partition> {
    if !seq.sum_in_range() {
        return Err(Error::Precondition("sum must lie in [-t+1, t-1]"));
    }
    let w = seq.values();
    if w.is_empty() {
        return Ok(Partition { blocks: vec![Vec::new()] });
    }
    if seq.all_extreme() {
        return Ok(Partition { blocks: pair_extremes(w) });
    }

    let t = seq.bound() as usize;
    let window = 2 * t - 1;
    let mut remaining = bounded_prefix_permutation(seq)?;
    let mut blocks = Vec::new();
    while remaining.len() >= window {
        let (start, end) = earliest_repeat(w, &remaining[..window])
            .ok_or(Error::InvariantViolation("no repeated prefix value"))?;
        let mut block: Vec<usize> = remaining.drain(start..end).collect();
        block.sort_unstable();
        blocks.push(block);
    }
    if !remaining.is_empty() {
        remaining.sort_unstable();
        blocks.push(remaining);
    }
    Ok(Partition { blocks })
}

/// Earliest `(j1, j2)`, `j1 < j2`, with equal prefix sums `W_j1 = W_j2`
/// over `order` (`W_0 = 0`).
fn earliest_repeat(w: &[i64], order: &[usize]) -> Option<(usize, usize)> {
    let mut prefixes = Vec::with_capacity(order.len() + 1);
    prefixes.push(0i64);
    for &i in order {
        let next = prefixes.last().unwrap() + w[i];
        if let Some(j1) = prefixes.iter().position(|&p| p == next) {
            return Some((j1, prefixes.len()));
        }
        prefixes.push(next);
    }
    None
}

fn pair_extremes(w: &[i64]) -> Vec<Vec<usize>> {
    let mut used = vec![false; w.len()];
    let mut blocks = Vec::new();
    for i in 0..w.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        if w[i] == 0 {
            blocks.push(vec![i]);
        } else {
            let partner = (i + 1..w.len()).find(|&j| !used[j] && w[j] == -w[i]);
            match partner {
                Some(j) => {
                    used[j] = true;
                    blocks.push(vec![i, j]);
                }
                None => blocks.push(vec![i]),
            }
        }
    }
    blocks
}

/// A subset `M` with `sum_{i in M} z_i = target` and
/// `|M| <= 8t^3 - 4t^2 - 2t + 1`. Returns the empty set for target `(0, 0)`.
///
/// The first coordinates are partitioned with [`zero_sum_partition`]; the
/// second-coordinate block sums `V_1..V_{q-1}` lie in `[-2t^2+1, 2t^2-1]`,
/// so partitioning them at bound `2t^2` yields a last block of at most
/// `4t^2 - 2` blocks that closes the remaining gap.
pub fn pair_target_subset(z: &PairSequence, target: (i64, i64)) -> Result<Vec<usize>> {
    let t = z.bound();
    if z.sum() != target {
        return Err(Error::Precondition("target must equal the total sum"));
    }
    if target.0.abs() >= t || target.1.abs() >= t {
        return Err(Error::Precondition("target must lie in [-t+1, t-1]^2"));
    }
    if target == (0, 0) {
        return Ok(Vec::new());
    }
    let firsts = BoundedIntSequence::new(z.values().iter().map(|p| p.0).collect(), t)?;
    let partition = zero_sum_partition(&firsts)?;
    let blocks = partition.blocks();
    let (last, rest) = blocks.split_last().expect("nonempty partition");
    let block_v = |b: &[usize]| b.iter().map(|&i| z.values()[i].1).sum::<i64>();

    let mut subset = last.to_vec();
    let gap = target.1 - block_v(last);
    if gap != 0 {
        let coarse = BoundedIntSequence::new(rest.iter().map(|b| block_v(b)).collect(), 2 * t * t)
            .map_err(|_| Error::InvariantViolation("block sum exceeds 2t^2"))?;
        let chosen = zero_sum_partition(&coarse)
            .map_err(|_| Error::InvariantViolation("second-coordinate gap exceeds 2t^2 - 1"))?;
        for &q in chosen.last() {
            subset.extend_from_slice(&rest[q]);
        }
    }
    subset.sort_unstable();
    Ok(subset)
}

/// A violated conclusion of one of the constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaViolation {
    NotAPermutation,
    PrefixOutOfRange { position: usize, prefix: i64 },
    NotAPartition,
    NonzeroBlock { block: usize, sum: i64 },
    LastBlockSum { sum: i64, expected: i64 },
    BlockTooLarge { block: usize, size: usize, limit: usize },
    LastBlockTooLarge { size: usize, limit: usize },
    SubsetSum { sum: (i64, i64), expected: (i64, i64) },
    SubsetTooLarge { size: usize, limit: usize },
    NotASubset,
}

impl fmt::Display for LemmaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotAPermutation => write!(f, "output is not a permutation"),
            Self::PrefixOutOfRange { position, prefix } => {
                write!(f, "prefix sum {prefix} at position {position} is out of range")
            }
            Self::NotAPartition => write!(f, "blocks do not partition the index set"),
            Self::NonzeroBlock { block, sum } => write!(f, "block {block} sums to {sum}, not 0"),
            Self::LastBlockSum { sum, expected } => {
                write!(f, "last block sums to {sum}, expected {expected}")
            }
            Self::BlockTooLarge { block, size, limit } => {
                write!(f, "block {block} has size {size} > {limit}")
            }
            Self::LastBlockTooLarge { size, limit } => {
                write!(f, "last block has size {size} > {limit} with nonzero sum")
            }
            Self::SubsetSum { sum, expected } => {
                write!(f, "subset sums to {sum:?}, expected {expected:?}")
            }
            Self::SubsetTooLarge { size, limit } => write!(f, "subset size {size} > {limit}"),
            Self::NotASubset => write!(f, "indices are repeated or out of range"),
        }
    }
}

pub fn check_prefix_permutation(
    seq: &BoundedIntSequence,
    order: &[usize],
) -> core::result::Result<(), LemmaViolation> {
    let m = seq.values().len();
    let mut seen = vec![false; m];
    if order.len() != m {
        return Err(LemmaViolation::NotAPermutation);
    }
    for &i in order {
        if i >= m || seen[i] {
            return Err(LemmaViolation::NotAPermutation);
        }
        seen[i] = true;
    }
    let mut prefix = 0;
    for (position, &i) in order.iter().enumerate() {
        prefix += seq.values()[i];
        if prefix.abs() >= seq.bound() {
            return Err(LemmaViolation::PrefixOutOfRange { position, prefix });
        }
    }
    Ok(())
}

/// Checks all four partition conclusions; returns every violation found.
pub fn check_partition(seq: &BoundedIntSequence, partition: &Partition) -> Vec<LemmaViolation> {
    let m = seq.values().len();
    let t = seq.bound() as usize;
    let r = seq.sum();
    let mut out = Vec::new();
    let mut seen = vec![false; m];
    let mut count = 0;
    for block in partition.blocks() {
        for &i in block {
            if i >= m || seen[i] {
                out.push(LemmaViolation::NotAPartition);
                return out;
            }
            seen[i] = true;
            count += 1;
        }
    }
    if count != m || partition.blocks().is_empty() {
        out.push(LemmaViolation::NotAPartition);
        return out;
    }
    let sum_of = |b: &[usize]| b.iter().map(|&i| seq.values()[i]).sum::<i64>();
    let (last, rest) = partition.blocks().split_last().unwrap();
    for (block, b) in rest.iter().enumerate() {
        let sum = sum_of(b);
        if sum != 0 {
            out.push(LemmaViolation::NonzeroBlock { block, sum });
        }
    }
    let last_sum = sum_of(last);
    if last_sum != r {
        out.push(LemmaViolation::LastBlockSum { sum: last_sum, expected: r });
    }
    for (block, b) in partition.blocks().iter().enumerate() {
        if b.len() > 2 * t - 1 {
            out.push(LemmaViolation::BlockTooLarge { block, size: b.len(), limit: 2 * t - 1 });
        }
    }
    if r != 0 && last.len() > 2 * t - 2 {
        out.push(LemmaViolation::LastBlockTooLarge { size: last.len(), limit: 2 * t - 2 });
    }
    out
}

pub fn check_pair_subset(
    z: &PairSequence,
    target: (i64, i64),
    subset: &[usize],
) -> Vec<LemmaViolation> {
    let mut out = Vec::new();
    let mut seen = vec![false; z.values().len()];
    for &i in subset {
        if i >= seen.len() || seen[i] {
            out.push(LemmaViolation::NotASubset);
            return out;
        }
        seen[i] = true;
    }
    let sum = subset
        .iter()
        .fold((0, 0), |(a, b), &i| (a + z.values()[i].0, b + z.values()[i].1));
    if sum != target {
        out.push(LemmaViolation::SubsetSum { sum, expected: target });
    }
    let limit = pair_subset_bound(z.bound()) as usize;
    if subset.len() > limit {
        out.push(LemmaViolation::SubsetTooLarge { size: subset.len(), limit });
    }
    out
}

/// `t - 1` copies of `t` followed by `t - 1` copies of `-(t - 1)`: all
/// subset sums are distinct, so the last block must take all `2t - 2`
/// elements.
pub fn tightness_instance(t: i64) -> BoundedIntSequence {
    assert!(t >= 2);
    let n = (t - 1) as usize;
    let mut values = vec![t; n];
    values.extend(core::iter::repeat_n(-(t - 1), n));
    BoundedIntSequence::new(values, t).expect("entries within [-t, t]")
}

/// Whether different sub-multisets of `values` always have different sums.
/// Subsets picking equal values from different positions count as the same
/// sub-multiset.
pub fn subset_sums_distinct(values: &[i64]) -> bool {
    let mut groups: Vec<(i64, usize)> = Vec::new();
    for &v in values {
        match groups.iter_mut().find(|(w, _)| *w == v) {
            Some((_, c)) => *c += 1,
            None => groups.push((v, 1)),
        }
    }
    let mut counts = vec![0usize; groups.len()];
    let mut sums = Vec::new();
    loop {
        sums.push(groups.iter().zip(&counts).map(|((v, _), &c)| v * c as i64).sum::<i64>());
        let Some(p) = (0..groups.len()).find(|&g| counts[g] < groups[g].1) else {
            break;
        };
        counts[..p].iter_mut().for_each(|c| *c = 0);
        counts[p] += 1;
    }
    sums.sort_unstable();
    sums.windows(2).all(|p| p[0] != p[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64], t: i64) -> BoundedIntSequence {
        BoundedIntSequence::new(v.to_vec(), t).unwrap()
    }

    fn prefixes(s: &BoundedIntSequence, order: &[usize]) -> Vec<i64> {
        order
            .iter()
            .scan(0, |acc, &i| {
                *acc += s.values()[i];
                Some(*acc)
            })
            .collect()
    }

    /// All orders of a short sequence, for existence checks.
    fn permutations(m: usize) -> Vec<Vec<usize>> {
        if m == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(m - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, m - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn prefix_permutation_examples() {
        let s = seq(&[1], 2);
        assert_eq!(bounded_prefix_permutation(&s).unwrap(), vec![0]);

        let s = seq(&[2, -2, 1], 2);
        let order = bounded_prefix_permutation(&s).unwrap();
        assert_eq!(order.iter().map(|&i| s.values()[i]).collect::<Vec<_>>(), vec![1, -2, 2]);
        assert_eq!(prefixes(&s, &order), vec![1, -1, 1]);
        // Exhaustive search agrees that a valid order exists.
        assert!(permutations(3).iter().any(|p| check_prefix_permutation(&s, p).is_ok()));

        let s = seq(&[3, -3, 3, -3, 2], 3);
        let order = bounded_prefix_permutation(&s).unwrap();
        assert_eq!(
            order.iter().map(|&i| s.values()[i]).collect::<Vec<_>>(),
            vec![2, -3, 3, -3, 3]
        );
        assert!(prefixes(&s, &order).iter().all(|p| p.abs() <= 2));
    }

    #[test]
    fn prefix_permutation_preconditions() {
        assert!(bounded_prefix_permutation(&seq(&[2, 1], 2)).is_err());
        assert!(bounded_prefix_permutation(&seq(&[2, -2, 0], 2)).is_err());
        assert!(BoundedIntSequence::new(vec![3], 2).is_err());
    }

    #[test]
    fn partition_examples() {
        let p = zero_sum_partition(&seq(&[0], 1)).unwrap();
        assert_eq!(p.blocks(), &[vec![0]]);

        let s = seq(&[3, 3, -2, -2], 3);
        let p = zero_sum_partition(&s).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1, 2, 3]]);
        assert!(check_partition(&s, &p).is_empty());

        let s = seq(&[1, 1, -1, -1, 1], 2);
        let p = zero_sum_partition(&s).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1, 3], vec![4]]);
        assert!(check_partition(&s, &p).is_empty());
    }

    #[test]
    fn partition_of_extremes_pairs_opposites() {
        let s = seq(&[2, 0, -2, -2, 2], 2);
        let p = zero_sum_partition(&s).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1], vec![3, 4]]);
        assert!(check_partition(&s, &p).is_empty());
    }

    #[test]
    fn unit_bound_pairs_break_the_block_limit() {
        let s = seq(&[1, -1], 1);
        let p = zero_sum_partition(&s).unwrap();
        assert_eq!(
            check_partition(&s, &p),
            vec![LemmaViolation::BlockTooLarge { block: 0, size: 2, limit: 1 }]
        );
        // No partition at all satisfies the limit: both singletons are nonzero.
    }

    #[test]
    fn empty_sequence() {
        let s = seq(&[], 2);
        let p = zero_sum_partition(&s).unwrap();
        assert!(check_partition(&s, &p).is_empty());
        assert_eq!(p.last(), &[] as &[usize]);
    }

    #[test]
    fn pair_subset_examples() {
        let z = PairSequence::new(vec![(1, 1)], 2).unwrap();
        assert_eq!(pair_target_subset(&z, (1, 1)).unwrap(), vec![0]);

        let z = PairSequence::new(vec![(1, 0), (-1, 1), (0, -1), (1, 1)], 2).unwrap();
        let m = pair_target_subset(&z, (1, 1)).unwrap();
        assert!(check_pair_subset(&z, (1, 1), &m).is_empty());
        // A subset summing to (1, 1) exists by brute force.
        assert!((1u32..16).any(|mask| {
            let sel: Vec<usize> = (0..4).filter(|i| mask & (1 << i) != 0).collect();
            check_pair_subset(&z, (1, 1), &sel).is_empty()
        }));

        let z = PairSequence::new(vec![(0, 0), (0, 0)], 1).unwrap();
        assert_eq!(pair_target_subset(&z, (0, 0)).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn pair_subset_preconditions() {
        let z = PairSequence::new(vec![(1, 1)], 2).unwrap();
        assert!(pair_target_subset(&z, (0, 1)).is_err());
        let z = PairSequence::new(vec![(2, 0)], 2).unwrap();
        assert!(pair_target_subset(&z, (2, 0)).is_err());
        assert!(PairSequence::new(vec![(0, 3)], 2).is_err());
    }

    #[test]
    fn tightness() {
        for t in 2..=4 {
            let s = tightness_instance(t);
            assert!(subset_sums_distinct(s.values()));
            let p = zero_sum_partition(&s).unwrap();
            assert_eq!(p.blocks().len(), 1);
            assert_eq!(p.last().len() as i64, 2 * t - 2);
        }
        assert_eq!(tightness_instance(3).values(), &[3, 3, -2, -2]);
        assert!(!subset_sums_distinct(&[1, 2, 3]));
        assert!(!subset_sums_distinct(&[2, -2]));
        assert!(subset_sums_distinct(&[1, 1, 1]));
    }

    #[test]
    fn bound_formula() {
        assert_eq!(pair_subset_bound(1), 3);
        assert_eq!(pair_subset_bound(2), 45);
    }
}
