use hslearn::lemmas::{
    bounded_prefix_permutation, check_pair_subset, check_partition, check_prefix_permutation,
    pair_target_subset, zero_sum_partition, BoundedIntSequence, PairSequence,
};
use proptest::prelude::*;

/// Nudges entries toward zero-sum until the total lies in `[-t+1, t-1]`.
fn repair(mut v: Vec<i64>, t: i64) -> Vec<i64> {
    while v.iter().sum::<i64>() > t - 1 {
        let i = v.iter().position(|&x| x > -t).unwrap();
        v[i] -= 1;
    }
    while v.iter().sum::<i64>() < -(t - 1) {
        let i = v.iter().position(|&x| x < t).unwrap();
        v[i] += 1;
    }
    v
}

fn sequence(t: i64) -> impl Strategy<Value = BoundedIntSequence> {
    prop::collection::vec(-t..=t, 0..=30)
        .prop_map(move |v| BoundedIntSequence::new(repair(v, t), t).unwrap())
}

fn pairs(t: i64) -> impl Strategy<Value = PairSequence> {
    prop::collection::vec((-t..=t, -t..=t), 0..=30).prop_map(move |v| {
        let (a, b): (Vec<i64>, Vec<i64>) = v.into_iter().unzip();
        let z = repair(a, t).into_iter().zip(repair(b, t)).collect();
        PairSequence::new(z, t).unwrap()
    })
}

fn all_extreme(s: &BoundedIntSequence) -> bool {
    s.values().iter().all(|&x| x == 0 || x.abs() == s.bound())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn prefix_permutation(s in (2i64..=4).prop_flat_map(sequence)) {
        if all_extreme(&s) {
            prop_assert!(bounded_prefix_permutation(&s).is_err());
        } else {
            let order = bounded_prefix_permutation(&s).unwrap();
            prop_assert_eq!(check_prefix_permutation(&s, &order), Ok(()));
            prop_assert_eq!(bounded_prefix_permutation(&s).unwrap(), order);
        }
    }

    #[test]
    fn zero_sum_partition_holds_for_t_at_least_two(s in (2i64..=4).prop_flat_map(sequence)) {
        let p = zero_sum_partition(&s).unwrap();
        prop_assert_eq!(check_partition(&s, &p), vec![]);
    }

    #[test]
    fn pair_subset(z in (1i64..=4).prop_flat_map(pairs)) {
        let target = z.sum();
        let m = pair_target_subset(&z, target).unwrap();
        prop_assert_eq!(check_pair_subset(&z, target, &m), vec![]);
    }
}

#[test]
fn unit_bound_partition_needs_pairs() {
    let s = BoundedIntSequence::new(vec![1, -1], 1).unwrap();
    let p = zero_sum_partition(&s).unwrap();
    assert_eq!(p.blocks(), &[vec![0, 1]]);
    assert!(!check_partition(&s, &p).is_empty());
}
