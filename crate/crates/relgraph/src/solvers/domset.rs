//! Dominating Set within `n/e` edge edits, through greedy max-coverage.

use std::collections::BTreeSet;

use num::{BigInt, BigRational};

use crate::budget::{Budget, BudgetBound};
use crate::certify::{coverage_bound, Certificate, NegativityHint, Problem, RelAnswer};
use crate::graph::{EditSet, Graph, Instance, Metric};

use super::{certified, SolveError};

/// `k` rounds of greedy maximum coverage over the closed-neighborhood set
/// system `{N[v]}`. Picks are distinct vertices; ties (and exhausted gain)
/// resolve to the lowest index, so the outcome is deterministic. Returns
/// the picks in order together with the covered vertex set.
pub(crate) fn greedy_k_coverage(g: &Graph, k: usize) -> (Vec<usize>, BTreeSet<usize>) {
    let n = g.n();
    let mut covered = vec![false; n];
    let mut chosen = vec![false; n];
    let mut picks = Vec::with_capacity(k);
    for _ in 0..k {
        let mut best: Option<(usize, usize)> = None; // (gain, vertex)
        for v in 0..n {
            if chosen[v] {
                continue;
            }
            let gain = usize::from(!covered[v])
                + g.neighbors(v).filter(|&u| !covered[u]).count();
            let better = match best {
                Some((best_gain, _)) => gain > best_gain,
                None => true,
            };
            if better {
                best = Some((gain, v));
            }
        }
        let (_, v) = best.expect("k <= n leaves an unchosen vertex");
        chosen[v] = true;
        picks.push(v);
        covered[v] = true;
        for u in g.neighbors(v) {
            covered[u] = true;
        }
    }
    let covered = (0..n).filter(|&v| covered[v]).collect();
    (picks, covered)
}

/// Solves the nearby-instance problem for Dominating Set within `n/e` edge
/// edits.
///
/// If the greedy coverage `c` after `k` rounds falls below the exact
/// threshold `(1 - (1 - 1/k)^k)·n`, no size-`k` dominating set exists and
/// the unedited instance is reported negative with a coverage-shortfall
/// hint. Otherwise the uncovered set `X` has `|X| <= (1 - 1/k)^k·n < n/e`,
/// and joining the first greedy pick to all of `X` makes the picks a
/// dominating set.
pub fn rel_domset_edits(inst: &Instance) -> Result<RelAnswer, SolveError> {
    let g = &inst.graph;
    let n = g.n();
    let k = inst
        .k
        .ok_or(SolveError::MissingThreshold(Problem::DominatingSet))?;
    let budget = Budget::new(Metric::EdgeEdits, BudgetBound::NOverE(n as u64));
    let done = |edits: EditSet, cert: Certificate| -> Result<RelAnswer, SolveError> {
        let edited = Instance::new(edits.apply(g).expect("edits fit g"), Some(k))
            .expect("threshold unchanged");
        Ok(certified(RelAnswer::new(edited, edits, cert, budget.clone())))
    };

    if k == 0 {
        return if n == 0 {
            done(EditSet::empty(0), Certificate::VertexSet(BTreeSet::new()))
        } else {
            done(EditSet::empty(n), Certificate::Nil(None))
        };
    }

    let (picks, covered) = greedy_k_coverage(g, k);
    let c = covered.len();
    let bound = coverage_bound(n, k);
    if BigRational::from_integer(BigInt::from(c)) < bound {
        return done(
            EditSet::empty(n),
            Certificate::Nil(Some(NegativityHint::CoverageShortfall {
                covered: c as u64,
                bound,
            })),
        );
    }
    let anchor = picks[0];
    let mut edits = EditSet::empty(n);
    for v in 0..n {
        if !covered.contains(&v) {
            // v is uncovered, hence outside N[anchor]: the edge is new.
            edits.push_add(anchor, v).expect("uncovered vertices are non-neighbors");
        }
    }
    done(edits, Certificate::VertexSet(picks.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{verify_rel_answer, Answer};
    use crate::oracles::OracleLimits;

    fn check(inst: &Instance, a: &RelAnswer) {
        let report = verify_rel_answer(
            Problem::DominatingSet,
            inst,
            a,
            Metric::EdgeEdits,
            Some(&OracleLimits::default()),
        );
        assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn star_with_k1_picks_center() {
        let inst = Instance::new(Graph::star(5), Some(1)).unwrap();
        let a = rel_domset_edits(&inst).unwrap();
        assert_eq!(a.answer, Answer::Positive);
        assert_eq!(a.distance, 0);
        assert_eq!(a.certificate, Certificate::VertexSet(BTreeSet::from([0])));
        check(&inst, &a);
    }

    #[test]
    fn edgeless_with_k1_is_negative() {
        let inst = Instance::new(Graph::new(10), Some(1)).unwrap();
        let a = rel_domset_edits(&inst).unwrap();
        assert_eq!(a.answer, Answer::Negative);
        assert_eq!(a.distance, 0);
        assert!(matches!(
            a.certificate.hint(),
            Some(NegativityHint::CoverageShortfall { covered: 1, .. })
        ));
        check(&inst, &a);
    }

    #[test]
    fn k_equals_n_is_positive_without_edits() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3)]).unwrap();
        let inst = Instance::new(g, Some(6)).unwrap();
        let a = rel_domset_edits(&inst).unwrap();
        assert_eq!(a.answer, Answer::Positive);
        assert_eq!(a.distance, 0);
        check(&inst, &a);
    }

    #[test]
    fn missing_threshold_is_contract_error() {
        let inst = Instance::without_threshold(Graph::new(3));
        assert_eq!(
            rel_domset_edits(&inst),
            Err(SolveError::MissingThreshold(Problem::DominatingSet))
        );
    }

    #[test]
    fn uncovered_remainder_gets_wired_to_first_pick() {
        // Path on 7 with k = 2: greedy picks 1 and 4, covering all but
        // vertex 6, which gets wired to the first pick. Coverage 6 clears
        // the threshold (1 - 1/4)·7.
        let inst = Instance::new(Graph::path(7), Some(2)).unwrap();
        let a = rel_domset_edits(&inst).unwrap();
        assert_eq!(a.answer, Answer::Positive);
        assert_eq!(a.distance, 1);
        assert_eq!(a.edits.adds().collect::<Vec<_>>(), vec![(1, 6)]);
        check(&inst, &a);
    }
}
