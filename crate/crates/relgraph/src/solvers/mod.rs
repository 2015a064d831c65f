//! Polynomial-time solvers for the nearby-instance problem: one operation
//! per supported (problem, metric) pair, each returning a [`RelAnswer`]
//! whose recomputed distance is certified to stay within the pair's budget.

pub mod domset;
pub mod ham;
pub mod indep;
pub mod iso;

use thiserror::Error;

pub use domset::rel_domset_edits;
pub use ham::{rel_ham_edits, rel_ham_maxdeg};
pub use indep::{rel_cliquecover_edits, rel_cliquecover_maxdeg, rel_is_edits, rel_is_maxdeg};
pub use iso::{
    rel_clique_edits, rel_clique_maxdeg, rel_coloring_edits, rel_coloring_maxdeg,
    rel_vertex_cover_edits, rel_vertex_cover_maxdeg, rel_via_isomorphism, IsoMap,
};

use crate::certify::{Problem, RelAnswer};
use crate::graph::{Instance, Metric};
use crate::oracles::{OracleError, OracleLimits};

/// Solver configuration. Without a seed, planted sets and partitions are
/// chosen by lowest vertex index; a seed switches those choices to a
/// deterministic pseudo-random draw for dataset diversity.
#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    pub seed: Option<u64>,
    pub oracle_limits: OracleLimits,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("problem {0} requires a threshold k")]
    MissingThreshold(Problem),
    #[error("no solver implements {problem} under the {metric} metric")]
    Unsupported { problem: Problem, metric: Metric },
    #[error("small-instance fallback needs an exact oracle: {0}")]
    Oracle(#[from] OracleError),
}

/// The (problem, metric) pairs with an implemented solver and its radius.
pub const SUPPORTED: [(Problem, Metric); 13] = [
    (Problem::HamiltonianCycle, Metric::MaxDegree),
    (Problem::HamiltonianCycle, Metric::EdgeEdits),
    (Problem::DominatingSet, Metric::EdgeEdits),
    (Problem::IndependentSet, Metric::MaxDegree),
    (Problem::IndependentSet, Metric::EdgeEdits),
    (Problem::Clique, Metric::MaxDegree),
    (Problem::Clique, Metric::EdgeEdits),
    (Problem::VertexCover, Metric::MaxDegree),
    (Problem::VertexCover, Metric::EdgeEdits),
    (Problem::Coloring, Metric::MaxDegree),
    (Problem::Coloring, Metric::EdgeEdits),
    (Problem::CliqueCover, Metric::MaxDegree),
    (Problem::CliqueCover, Metric::EdgeEdits),
];

pub fn is_supported(problem: Problem, metric: Metric) -> bool {
    SUPPORTED.contains(&(problem, metric))
}

/// Dispatches to the solver for `(problem, metric)`.
pub fn solve(
    problem: Problem,
    metric: Metric,
    inst: &Instance,
    opts: &SolveOptions,
) -> Result<RelAnswer, SolveError> {
    match (problem, metric) {
        // Hamiltonicity takes no threshold; any threshold on the instance
        // is carried through untouched so distances stay finite.
        (Problem::HamiltonianCycle, Metric::MaxDegree) => {
            let mut a = rel_ham_maxdeg(&inst.graph);
            a.edited.k = inst.k;
            Ok(a)
        }
        (Problem::HamiltonianCycle, Metric::EdgeEdits) => {
            let mut a = rel_ham_edits(&inst.graph);
            a.edited.k = inst.k;
            Ok(a)
        }
        (Problem::DominatingSet, Metric::EdgeEdits) => rel_domset_edits(inst),
        (Problem::IndependentSet, Metric::MaxDegree) => rel_is_maxdeg(inst, opts),
        (Problem::IndependentSet, Metric::EdgeEdits) => rel_is_edits(inst, opts),
        (Problem::Clique, Metric::MaxDegree) => rel_clique_maxdeg(inst, opts),
        (Problem::Clique, Metric::EdgeEdits) => rel_clique_edits(inst, opts),
        (Problem::VertexCover, Metric::MaxDegree) => rel_vertex_cover_maxdeg(inst, opts),
        (Problem::VertexCover, Metric::EdgeEdits) => rel_vertex_cover_edits(inst, opts),
        (Problem::Coloring, Metric::MaxDegree) => rel_coloring_maxdeg(inst, opts),
        (Problem::Coloring, Metric::EdgeEdits) => rel_coloring_edits(inst, opts),
        (Problem::CliqueCover, Metric::MaxDegree) => rel_cliquecover_maxdeg(inst, opts),
        (Problem::CliqueCover, Metric::EdgeEdits) => rel_cliquecover_edits(inst, opts),
        (problem, metric) => Err(SolveError::Unsupported { problem, metric }),
    }
}

/// Budget-compliance guard shared by all solvers: the recomputed distance
/// must respect the budget on every input, by construction.
pub(crate) fn certified(answer: RelAnswer) -> RelAnswer {
    assert!(
        answer.budget.admits(answer.distance),
        "solver produced distance {} over budget {}",
        answer.distance,
        answer.budget.bound
    );
    answer
}
