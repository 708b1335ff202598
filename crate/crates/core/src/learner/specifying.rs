//! Exhaustive check that a query set pins down a target inside `HS_t`.

use alloc::vec;

use crate::assignment::Assignment;
use crate::automaton::equivalent;
use crate::halfspace::Halfspace;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecifyingVerdict {
    Pass,
    /// A function not equivalent to the target that agrees with it on every
    /// query point.
    Fail(Halfspace),
}

impl SpecifyingVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, SpecifyingVerdict::Pass)
    }
}

/// Enumerates every `[w·x >= u]` with `w` in `[0, t]^n` and `u` in
/// `[0, nt + 1]` and looks for one that `queries` cannot tell apart from
/// `target`. Exponential in `n`; meant for small dimensions.
pub fn specifying_set_check(
    queries: &[Assignment],
    target: &Halfspace,
    t: u32,
) -> Result<SpecifyingVerdict> {
    let n = target.dim();
    for q in queries {
        target.check_dim_of(q)?;
    }
    let expected: alloc::vec::Vec<bool> = queries.iter().map(|q| target.eval(q)).collect();
    let ti = i64::from(t);
    let mut w = vec![0i64; n];
    loop {
        for u in 0..=n as i64 * ti + 1 {
            let g = Halfspace::new_nonnegative(w.clone(), u, t)?;
            let agrees = queries.iter().zip(&expected).all(|(q, &v)| g.eval(q) == v);
            if agrees && !equivalent(&g, target)?.is_equivalent() {
                return Ok(SpecifyingVerdict::Fail(g));
            }
        }
        let Some(p) = w.iter().position(|&x| x < ti) else {
            return Ok(SpecifyingVerdict::Pass);
        };
        w[..p].iter_mut().for_each(|x| *x = 0);
        w[p] += 1;
    }
}
