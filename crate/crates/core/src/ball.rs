//! Hamming balls `B(a; d)` and unions of them.

use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::assignment::{cube, Assignment};

/// Calls `visit` with every flip mask over `n` bits of popcount at most `d`.
fn for_each_mask(n: usize, d: usize, visit: &mut impl FnMut(u64)) {
    fn rec(start: usize, n: usize, left: usize, mask: u64, visit: &mut impl FnMut(u64)) {
        visit(mask);
        if left == 0 {
            return;
        }
        for pos in start..n {
            rec(pos + 1, n, left - 1, mask | (1u64 << pos), visit);
        }
    }
    rec(0, n, d.min(n), 0, visit);
}

/// Visits every member of `B(a; d)` exactly once, in no particular order.
pub fn for_each_in_ball(a: &Assignment, d: usize, mut visit: impl FnMut(Assignment)) {
    for_each_mask(a.dim(), d, &mut |m| visit(a.raw_xor(m)));
}

/// `B(a; d)`, sorted lexicographically. Its size is `sum_{i<=d} C(n, i)`.
pub fn hamming_ball(a: &Assignment, d: usize) -> Vec<Assignment> {
    let mut out = Vec::with_capacity(ball_size(a.dim(), d) as usize);
    for_each_in_ball(a, d, |b| out.push(b));
    out.sort_unstable();
    out
}

/// `sum_{i <= d} C(n, i)`, saturating.
pub fn ball_size(n: usize, d: usize) -> u64 {
    let mut total: u64 = 0;
    let mut c: u128 = 1;
    for i in 0..=d.min(n) {
        total = total.saturating_add(c.min(u64::MAX as u128) as u64);
        c = c * (n - i) as u128 / (i + 1) as u128;
    }
    total
}

/// Sorted, deduplicated union of `B(c; d)` over all centers.
pub fn union_of_balls(n: usize, centers: &[Assignment], d: usize) -> Vec<Assignment> {
    if centers.is_empty() {
        return Vec::new();
    }
    if d >= n {
        return cube(n).collect();
    }
    let mut seen: HashSet<u64> = HashSet::new();
    for c in centers {
        assert_eq!(c.dim(), n, "center of the wrong dimension");
        for_each_in_ball(c, d, |b| {
            seen.insert(b.rank());
        });
    }
    let mut ranks: Vec<u64> = seen.into_iter().collect();
    ranks.sort_unstable();
    ranks.into_iter().map(|r| Assignment::from_rank(n, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn a(s: &str) -> Assignment {
        s.parse().unwrap()
    }

    fn brute(center: &Assignment, d: usize) -> Vec<Assignment> {
        cube(center.dim()).filter(|b| b.distance(center) <= d).collect()
    }

    #[test]
    fn radius_zero_is_the_center() {
        assert_eq!(hamming_ball(&a("00"), 0), vec![a("00")]);
    }

    #[test]
    fn radius_one_in_three_dims() {
        assert_eq!(hamming_ball(&a("000"), 1).len(), 4);
    }

    #[test]
    fn radius_two_around_1010() {
        let ball = hamming_ball(&a("1010"), 2);
        assert_eq!(ball.len(), 11);
        assert_eq!(ball, brute(&a("1010"), 2));
    }

    #[test]
    fn matches_filter_over_cube() {
        for n in 0..=7 {
            for r in 0..(1u64 << n) {
                let c = Assignment::from_rank(n, r);
                for d in 0..=n + 1 {
                    let ball = hamming_ball(&c, d);
                    assert_eq!(ball, brute(&c, d));
                    assert_eq!(ball.len() as u64, ball_size(n, d));
                }
            }
        }
    }

    #[test]
    fn union_matches_explicit() {
        let centers = [a("10000"), a("00011")];
        let u = union_of_balls(5, &centers, 1);
        let mut expected: Vec<_> = cube(5)
            .filter(|b| centers.iter().any(|c| c.distance(b) <= 1))
            .collect();
        expected.sort();
        assert_eq!(u, expected);
        assert_eq!(union_of_balls(3, &centers[..0], 1), vec![]);
    }

    #[test]
    fn ball_size_values() {
        assert_eq!(ball_size(4, 2), 11);
        assert_eq!(ball_size(3, 10), 8);
        assert_eq!(ball_size(64, 64), u64::MAX);
    }
}
