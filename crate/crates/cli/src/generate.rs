//! Seeded random targets.

use hslearn::Halfspace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Draws before giving up on finding a non-constant target.
pub const MAX_DRAWS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedTarget {
    pub halfspace: Halfspace,
    /// Every draw was constant; `halfspace` is the last one.
    pub constant: bool,
}

/// Weights uniform in `[0, t]`, threshold uniform in `[1, nt]`, canonical
/// threshold. Constant draws are rejected up to [`MAX_DRAWS`] times.
pub fn generate_target(n: usize, t: u32, seed: u64) -> GeneratedTarget {
    assert!(t > 0, "weight bound must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ti = i64::from(t);
    let mut last = Halfspace::constant(n, t, false);
    for _ in 0..MAX_DRAWS {
        if n == 0 {
            break;
        }
        let weights: Vec<i64> = (0..n).map(|_| rng.random_range(0..=ti)).collect();
        let u = rng.random_range(1..=ti * n as i64);
        let h = Halfspace::new_nonnegative(weights, u, t)
            .expect("weights drawn inside [0, t]")
            .canonicalize();
        if !h.is_constant() {
            return GeneratedTarget { halfspace: h, constant: false };
        }
        last = h;
    }
    GeneratedTarget { halfspace: last, constant: true }
}

/// Per-row seed for benchmark trials, mixed with SplitMix64.
pub fn trial_seed(seed: u64, n: usize, trial: usize) -> u64 {
    let mut z = seed
        ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (trial as u64).wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        assert_eq!(generate_target(3, 1, 42), generate_target(3, 1, 42));
        let h = generate_target(12, 3, 7).halfspace;
        assert!(h.is_nonnegative() && h.is_canonical() && !h.is_constant());
    }

    #[test]
    fn seeds_give_different_targets() {
        let distinct: std::collections::BTreeSet<String> =
            (0..20).map(|s| generate_target(6, 2, s).halfspace.to_string()).collect();
        assert!(distinct.len() > 10);
    }

    #[test]
    fn one_variable() {
        for seed in 0..20 {
            let g = generate_target(1, 1, seed);
            assert!(!g.constant);
            assert_eq!(g.halfspace, Halfspace::new(vec![1], 1, 1).unwrap());
        }
        assert!(generate_target(0, 1, 0).constant);
    }

    #[test]
    fn trial_seeds_differ() {
        assert_ne!(trial_seed(1, 8, 0), trial_seed(1, 8, 1));
        assert_ne!(trial_seed(1, 8, 0), trial_seed(1, 9, 0));
        assert_eq!(trial_seed(5, 8, 2), trial_seed(5, 8, 2));
    }
}
