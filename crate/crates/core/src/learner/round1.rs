//! What the first round of answers reveals about the target.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::staircase::round1_queries;
use crate::assignment::Assignment;
use crate::ball::hamming_ball;
use crate::oracle::AnswerIndex;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round1Summary {
    pub n: usize,
    pub t: u32,
    /// `Some(v)` when the target is the constant `v`; every other field is
    /// then empty.
    pub constant: Option<bool>,
    /// Relevant variables, ascending.
    pub relevant: Vec<usize>,
    /// Symmetry classes of the relevant variables, lightest first. Each class
    /// is ascending.
    pub classes: Vec<Vec<usize>>,
    /// Some assignment of Hamming weight 1 is positive.
    pub weight_one_case: bool,
    /// Minterms inside `B(0^n; t)`, filled only in the weight-one case.
    pub discovered_minterms: Vec<Assignment>,
}

impl Round1Summary {
    /// Relevant variables by nondecreasing inferred weight.
    pub fn order(&self) -> Vec<usize> {
        self.classes.iter().flatten().copied().collect()
    }

    /// Index of the class containing `x_i`, if `x_i` is relevant.
    pub fn class_of(&self, i: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&i))
    }
}

struct Lookup {
    answers: HashMap<u64, bool>,
}

impl Lookup {
    fn get(&self, a: &Assignment) -> Option<bool> {
        self.answers.get(&a.rank()).copied()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let up = self.0[cur];
            self.0[cur] = root;
            cur = up;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Reads relevance, the weight order and the special cases off the answers
/// to [`round1_queries`]. Only those answers are used, even if `answers`
/// holds more.
pub fn analyze_round1(n: usize, t: u32, answers: &AnswerIndex) -> Result<Round1Summary> {
    let queries = round1_queries(n, t);
    let mut lookup = Lookup { answers: HashMap::with_capacity(queries.len()) };
    for q in &queries {
        lookup.answers.insert(q.rank(), answers.require(q)?);
    }
    let mut summary = Round1Summary {
        n,
        t,
        constant: None,
        relevant: Vec::new(),
        classes: Vec::new(),
        weight_one_case: false,
        discovered_minterms: Vec::new(),
    };
    if lookup.get(&Assignment::zeros(n)) == Some(true) {
        summary.constant = Some(true);
        return Ok(summary);
    }
    if lookup.get(&Assignment::ones(n)) == Some(false) {
        summary.constant = Some(false);
        return Ok(summary);
    }

    let mut relevant = vec![false; n];
    // heavier[j][k]: some witness shows w_j > w_k.
    let mut heavier = vec![vec![false; n]; n];
    for q in queries.iter().filter(|q| lookup.get(q) == Some(true)) {
        for k in q.ones_indices() {
            if lookup.get(&q.with(k, false)) == Some(false) {
                relevant[k] = true;
            }
        }
    }
    for q in queries.iter().filter(|q| lookup.get(q) == Some(true)) {
        for j in q.ones_indices().filter(|&j| relevant[j]) {
            for k in q.zeros_indices().filter(|&k| relevant[k]) {
                if lookup.get(&q.swapped(j, k)) == Some(false) {
                    heavier[j][k] = true;
                }
            }
        }
    }

    let ball = hamming_ball(&Assignment::zeros(n), (t as usize).min(n));
    summary.weight_one_case = (0..n).any(|i| lookup.get(&Assignment::zeros(n).with(i, true)) == Some(true));
    if summary.weight_one_case {
        for x in &ball {
            let positive = lookup.get(x) == Some(true);
            if positive && x.ones_indices().all(|i| lookup.get(&x.with(i, false)) == Some(false)) {
                summary.discovered_minterms.push(*x);
                for i in x.ones_indices() {
                    relevant[i] = true;
                }
            }
        }
    }

    summary.relevant = (0..n).filter(|&i| relevant[i]).collect();
    summary.classes = order_classes(&summary.relevant, &heavier)?;
    Ok(summary)
}

/// Groups variables with no order witness between them and sorts the groups
/// by the strict relation, checking that it is a total order on groups.
fn order_classes(relevant: &[usize], heavier: &[Vec<bool>]) -> Result<Vec<Vec<usize>>> {
    for &j in relevant {
        for &k in relevant {
            if heavier[j][k] && heavier[k][j] {
                return Err(Error::InconsistentOrder(j.min(k), j.max(k)));
            }
        }
    }
    let n = heavier.len();
    let mut uf = UnionFind((0..n).collect());
    for &j in relevant {
        for &k in relevant {
            if !heavier[j][k] && !heavier[k][j] {
                uf.union(j, k);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_class: HashMap<usize, usize> = HashMap::new();
    for &i in relevant {
        let root = uf.find(i);
        let idx = *root_class.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[idx].push(i);
    }
    let below = |c: &[usize]| -> usize {
        relevant.iter().filter(|&&k| c.iter().any(|&j| heavier[j][k])).count()
    };
    classes.sort_by_cached_key(|c| (below(c), c[0]));
    for (lo, light) in classes.iter().enumerate() {
        for heavy in &classes[lo..] {
            for &x in light {
                for &y in heavy {
                    let inside = core::ptr::eq(light, heavy);
                    if heavier[x][y] || (inside && heavier[y][x]) {
                        return Err(Error::InconsistentOrder(x.min(y), x.max(y)));
                    }
                }
            }
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfspace::Halfspace;

    fn summary_for(h: &Halfspace) -> Round1Summary {
        let answers = round1_queries(h.dim(), h.bound()).into_iter().map(|q| (q, h.eval(&q))).collect();
        analyze_round1(h.dim(), h.bound(), &answers).unwrap()
    }

    fn hs(weights: &[i64], u: i64, t: u32) -> Halfspace {
        Halfspace::new(weights.to_vec(), u, t).unwrap()
    }

    #[test]
    fn irrelevant_variables() {
        // x3 never matters: x1 alone reaches 2 and x3 alone does not.
        let s = summary_for(&hs(&[2, 0, 1], 2, 2));
        assert_eq!(s.constant, None);
        assert_eq!(s.relevant, vec![0]);
        assert_eq!(s.classes, vec![vec![0]]);

        let s = summary_for(&hs(&[2, 0, 1, 1], 3, 2));
        assert_eq!(s.relevant, vec![0, 2, 3]);
        assert_eq!(s.classes, vec![vec![2, 3], vec![0]]);
    }

    #[test]
    fn constants() {
        let s = summary_for(&Halfspace::constant(4, 2, false));
        assert_eq!(s.constant, Some(false));
        assert!(s.relevant.is_empty() && s.classes.is_empty());
        assert_eq!(summary_for(&Halfspace::constant(4, 2, true)).constant, Some(true));
    }

    #[test]
    fn weight_one_minterms() {
        let s = summary_for(&hs(&[1, 1], 1, 1));
        assert!(s.weight_one_case);
        let m: Vec<Assignment> = ["01", "10"].iter().map(|x| x.parse().unwrap()).collect();
        assert_eq!(s.discovered_minterms, m);
        assert_eq!(s.classes, vec![vec![0, 1]]);
    }

    #[test]
    fn missing_answers_are_reported() {
        let answers: AnswerIndex = [(Assignment::zeros(3), false)].into_iter().collect();
        assert!(matches!(analyze_round1(3, 1, &answers), Err(Error::MissingAnswer(_))));
    }

    #[test]
    fn contradictory_answers_are_reported() {
        // 100 vs 010 says w1 > w2, 011 vs 101 says the opposite.
        let positive = ["100", "011", "110", "111"];
        let answers: AnswerIndex = round1_queries(3, 2)
            .into_iter()
            .map(|q| (q, positive.contains(&q.to_bitstring().as_str())))
            .collect();
        assert_eq!(analyze_round1(3, 2, &answers), Err(Error::InconsistentOrder(0, 1)));
    }
}
