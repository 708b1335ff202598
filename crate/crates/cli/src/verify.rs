//! Randomised checks of the combinatorial lemmas.

use hslearn::lemmas::{
    bounded_prefix_permutation, check_pair_subset, check_partition, check_prefix_permutation,
    pair_target_subset, subset_sums_distinct, tightness_instance, zero_sum_partition,
    BoundedIntSequence, PairSequence,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Longest random sequence.
pub const MAX_LEN: usize = 30;

/// Draws before giving up on a sequence with an entry outside `{-t, 0, t}`.
const MAX_DRAWS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    PrefixPermutation,
    ZeroSumPartition,
    PairSubset,
    Tightness,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::PrefixPermutation => "prefix-permutation",
            Check::ZeroSumPartition => "zero-sum-partition",
            Check::PairSubset => "pair-subset",
            Check::Tightness => "tightness",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: Check,
    pub t: i64,
    pub instances: usize,
    pub violations: usize,
    /// The first failing instance and what went wrong.
    pub first_violation: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn line(&self) -> String {
        let verdict = if self.passed() { "ok" } else { "FAIL" };
        let mut s = format!(
            "{:<19} t={} instances={:<6} violations={:<6} {verdict}",
            self.check.name(),
            self.t,
            self.instances,
            self.violations
        );
        if self.instances == 0 {
            s.push_str(" (vacuous)");
        }
        if let Some(v) = &self.first_violation {
            s.push_str(&format!("\n    first: {v}"));
        }
        s
    }
}

/// Moves entries toward the opposite sign until the total lies in
/// `[-t+1, t-1]`.
fn repair(v: &mut [i64], t: i64, rng: &mut impl Rng) {
    loop {
        let s: i64 = v.iter().sum();
        if s.abs() < t {
            return;
        }
        let i = rng.random_range(0..v.len());
        if s > 0 && v[i] > -t {
            v[i] -= 1;
        } else if s < 0 && v[i] < t {
            v[i] += 1;
        }
    }
}

fn random_values(rng: &mut impl Rng, t: i64, min_len: usize) -> Vec<i64> {
    let len = rng.random_range(min_len..=MAX_LEN);
    let mut v: Vec<i64> = (0..len).map(|_| rng.random_range(-t..=t)).collect();
    repair(&mut v, t, rng);
    v
}

/// A sequence in `[-t, t]` of length at most [`MAX_LEN`] with total in
/// `[-t+1, t-1]`.
pub fn random_sequence(rng: &mut impl Rng, t: i64) -> BoundedIntSequence {
    BoundedIntSequence::new(random_values(rng, t, 0), t).expect("entries in range")
}

/// Like [`random_sequence`] with at least one entry outside `{-t, 0, t}`.
/// `None` when `t = 1`, where no such entry exists.
pub fn random_mixed_sequence(rng: &mut impl Rng, t: i64) -> Option<BoundedIntSequence> {
    (0..MAX_DRAWS).find_map(|_| {
        let v = random_values(rng, t, 1);
        v.iter()
            .any(|&x| x != 0 && x.abs() != t)
            .then(|| BoundedIntSequence::new(v, t).expect("entries in range"))
    })
}

pub fn random_pairs(rng: &mut impl Rng, t: i64) -> PairSequence {
    let len = rng.random_range(0..=MAX_LEN);
    let mut a: Vec<i64> = (0..len).map(|_| rng.random_range(-t..=t)).collect();
    let mut b: Vec<i64> = (0..len).map(|_| rng.random_range(-t..=t)).collect();
    if len > 0 {
        repair(&mut a, t, rng);
        repair(&mut b, t, rng);
    }
    PairSequence::new(a.into_iter().zip(b).collect(), t).expect("entries in range")
}

fn tally(check: Check, t: i64, outcomes: impl Iterator<Item = Option<String>>) -> CheckReport {
    let mut report = CheckReport { check, t, instances: 0, violations: 0, first_violation: None };
    for outcome in outcomes {
        report.instances += 1;
        if let Some(v) = outcome {
            report.violations += 1;
            report.first_violation.get_or_insert(v);
        }
    }
    report
}

fn describe(values: &impl std::fmt::Debug, problems: &[impl std::fmt::Display]) -> String {
    let text: Vec<String> = problems.iter().map(ToString::to_string).collect();
    format!("{values:?}: {}", text.join("; "))
}

pub fn check_prefix_permutations(trials: usize, t: i64, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances: Vec<BoundedIntSequence> =
        (0..trials).map_while(|_| random_mixed_sequence(&mut rng, t)).collect();
    tally(
        Check::PrefixPermutation,
        t,
        instances.iter().map(|s| match bounded_prefix_permutation(s) {
            Err(e) => Some(format!("{:?}: {e}", s.values())),
            Ok(order) => check_prefix_permutation(s, &order).err().map(|v| describe(&s.values(), &[v])),
        }),
    )
}

pub fn check_zero_sum_partitions(trials: usize, t: i64, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    tally(
        Check::ZeroSumPartition,
        t,
        (0..trials).map(|_| {
            let s = random_sequence(&mut rng, t);
            match zero_sum_partition(&s) {
                Err(e) => Some(format!("{:?}: {e}", s.values())),
                Ok(p) => {
                    let problems = check_partition(&s, &p);
                    (!problems.is_empty()).then(|| describe(&s.values(), &problems))
                }
            }
        }),
    )
}

pub fn check_pair_subsets(trials: usize, t: i64, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    tally(
        Check::PairSubset,
        t,
        (0..trials).map(|_| {
            let z = random_pairs(&mut rng, t);
            let target = z.sum();
            match pair_target_subset(&z, target) {
                Err(e) => Some(format!("{:?}: {e}", z.values())),
                Ok(m) => {
                    let problems = check_pair_subset(&z, target, &m);
                    (!problems.is_empty()).then(|| describe(&z.values(), &problems))
                }
            }
        }),
    )
}

/// The extremal instance must have distinct sub-multiset sums and force a
/// last block of exactly `2t - 2` elements.
pub fn check_tightness(t: i64) -> CheckReport {
    let s = tightness_instance(t);
    let outcome = if !subset_sums_distinct(s.values()) {
        Some(format!("{:?}: two sub-multisets share a sum", s.values()))
    } else {
        match zero_sum_partition(&s) {
            Err(e) => Some(format!("{:?}: {e}", s.values())),
            Ok(p) if p.last().len() as i64 != 2 * t - 2 => Some(format!(
                "{:?}: last block has {} elements, expected {}",
                s.values(),
                p.last().len(),
                2 * t - 2
            )),
            Ok(_) => None,
        }
    };
    tally(Check::Tightness, t, std::iter::once(outcome))
}

/// Every check for every `t` in `1..=t_max`; tightness from `t = 2`.
pub fn verify_lemmas(trials: usize, t_max: i64, seed: u64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for t in 1..=t_max {
        let s = seed.wrapping_add(t as u64);
        out.push(check_prefix_permutations(trials, t, s));
        out.push(check_zero_sum_partitions(trials, t, s));
        out.push(check_pair_subsets(trials, t, s));
    }
    for t in 2..=t_max {
        out.push(check_tightness(t));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_inputs_meet_the_preconditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for t in 1..=4 {
            for _ in 0..200 {
                let s = random_sequence(&mut rng, t);
                assert!(s.sum().abs() < t && s.values().len() <= MAX_LEN);
                let z = random_pairs(&mut rng, t);
                assert!(z.sum().0.abs() < t && z.sum().1.abs() < t);
                match random_mixed_sequence(&mut rng, t) {
                    None => assert_eq!(t, 1),
                    Some(s) => assert!(s.values().iter().any(|&x| x != 0 && x.abs() != t)),
                }
            }
        }
    }

    #[test]
    fn tightness_reports() {
        for t in 2..=4 {
            assert!(check_tightness(t).passed());
        }
        assert_eq!(check_tightness(3).instances, 1);
    }

    #[test]
    fn unit_bound_partitions_are_flagged() {
        let r = check_zero_sum_partitions(200, 1, 0);
        assert!(!r.passed());
        assert!(r.first_violation.unwrap().contains("size 2 > 1"));
        assert_eq!(check_prefix_permutations(200, 1, 0).instances, 0);
    }

    #[test]
    fn larger_bounds_pass() {
        for r in verify_lemmas(300, 4, 9).into_iter().filter(|r| r.t >= 2) {
            assert!(r.passed(), "{}", r.line());
        }
    }
}
