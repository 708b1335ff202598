use hslearn::automaton::equivalent;
use hslearn::learner::{analyze_round1, learn_adaptive, learn_nonadaptive, round1_queries};
use hslearn::{Halfspace, MembershipOracle, SimulatedOracle};
use proptest::prelude::*;

fn target() -> impl Strategy<Value = Halfspace> {
    (6usize..=8, 2u32..=3).prop_flat_map(|(n, t)| {
        let ti = i64::from(t);
        (prop::collection::vec(0..=ti, n), 1..=ti * n as i64)
            .prop_map(move |(w, u)| Halfspace::new(w, u, t).unwrap().canonicalize())
    })
}

fn check(h: &Halfspace, adaptive: bool) -> Result<(), TestCaseError> {
    let mut o = SimulatedOracle::new(h.clone(), None).unwrap();
    let out = if adaptive {
        learn_adaptive(&mut o, h.bound())
    } else {
        learn_nonadaptive(&mut o, h.bound())
    }
    .unwrap();
    prop_assert!(equivalent(&out.hypothesis, h).unwrap().is_equivalent());
    prop_assert!(out.hypothesis.is_nonnegative());
    let rounds = o.stats().rounds;
    if adaptive {
        prop_assert!(rounds <= 2);
    } else {
        prop_assert_eq!(rounds, 1);
    }
    for (a, v) in o.answers().iter() {
        prop_assert_eq!(h.eval(&a), v);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn both_learners_recover_the_target(h in target()) {
        check(&h, true)?;
        check(&h, false)?;
    }

    #[test]
    fn inferred_order_holds_for_the_target(h in target()) {
        let (n, t) = (h.dim(), h.bound());
        let answers = round1_queries(n, t).into_iter().map(|q| (q, h.eval(&q))).collect();
        let s = analyze_round1(n, t, &answers).unwrap();
        if s.constant.is_none() {
            prop_assert_eq!(&s.relevant, &h.relevant_variables());
            for (lo, light) in s.classes.iter().enumerate() {
                for heavy in &s.classes[lo + 1..] {
                    for &x in light {
                        for &y in heavy {
                            prop_assert!(h.weights()[y] > h.weights()[x]);
                        }
                    }
                }
                for &x in light {
                    for &y in light {
                        prop_assert!(h.is_symmetric_exact(x, y));
                    }
                }
            }
        }
    }
}

#[test]
fn every_small_target_is_learned() {
    for (n, t) in [(4usize, 1u32), (4, 2)] {
        let ti = i64::from(t);
        let mut w = vec![0i64; n];
        loop {
            for u in 1..=ti * n as i64 {
                let h = Halfspace::new(w.clone(), u, t).unwrap().canonicalize();
                if h.is_constant() {
                    continue;
                }
                let mut o = SimulatedOracle::new(h.clone(), Some(2)).unwrap();
                let out = learn_adaptive(&mut o, t).unwrap();
                assert!(equivalent(&out.hypothesis, &h).unwrap().is_equivalent(), "{h}");
                let mut o = SimulatedOracle::new(h.clone(), Some(1)).unwrap();
                let out = learn_nonadaptive(&mut o, t).unwrap();
                assert!(equivalent(&out.hypothesis, &h).unwrap().is_equivalent(), "{h}");
            }
            let Some(p) = w.iter().position(|&x| x < ti) else { break };
            w[..p].iter_mut().for_each(|x| *x = 0);
            w[p] += 1;
        }
    }
}

#[test]
fn unit_weight_query_counts_grow_polynomially() {
    let mut previous = 0;
    for n in [8usize, 10, 12, 14, 16] {
        let h = Halfspace::new((0..n as i64).map(|i| i % 2).collect(), 3, 1).unwrap();
        let mut o = SimulatedOracle::new(h.clone(), Some(2)).unwrap();
        let out = learn_adaptive(&mut o, 1).unwrap();
        assert!(equivalent(&out.hypothesis, &h).unwrap().is_equivalent());
        let total = o.stats().total;
        assert!(total >= previous);
        assert!(total < n.pow(4));
        previous = total;
    }
}
