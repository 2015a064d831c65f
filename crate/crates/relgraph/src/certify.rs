//! Problem tags, certificates, machine-checkable negativity hints, and the
//! verifier that audits a full solver output end to end.
//!
//! Verification recomputes everything from scratch (distances, budgets,
//! witness validity) so that it stays independent of solver internals. All
//! functions here are pure.

use std::collections::BTreeSet;

use num::{BigInt, BigRational, BigUint};
use thiserror::Error;

use crate::budget::Budget;
use crate::graph::{symmetric_difference, EditSet, Graph, Instance, Metric};
use crate::oracles::{self, OracleLimits};

/// The seven supported decision/function problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Problem {
    HamiltonianCycle,
    DominatingSet,
    IndependentSet,
    Clique,
    VertexCover,
    Coloring,
    CliqueCover,
}

impl Problem {
    pub const ALL: [Problem; 7] = [
        Problem::HamiltonianCycle,
        Problem::DominatingSet,
        Problem::IndependentSet,
        Problem::Clique,
        Problem::VertexCover,
        Problem::Coloring,
        Problem::CliqueCover,
    ];

    /// Every problem except Hamiltonian Cycle carries an integer threshold.
    pub fn requires_threshold(self) -> bool {
        !matches!(self, Problem::HamiltonianCycle)
    }

    pub fn tag(self) -> &'static str {
        match self {
            Problem::HamiltonianCycle => "ham",
            Problem::DominatingSet => "ds",
            Problem::IndependentSet => "is",
            Problem::Clique => "clique",
            Problem::VertexCover => "vc",
            Problem::Coloring => "coloring",
            Problem::CliqueCover => "cliquecover",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Problem> {
        Problem::ALL.into_iter().find(|p| p.tag() == tag)
    }
}

impl std::fmt::Display for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// A machine-checkable structural reason an instance is negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NegativityHint {
    /// Hamiltonicity: a degree-0 vertex on `n ≥ 2` vertices.
    IsolatedVertex(usize),
    /// Hamiltonicity: removing these `≤ 2` vertices leaves more components
    /// than vertices removed (for the empty set: the graph is disconnected).
    SeparatorPair(Vec<usize>),
    /// Independent Set / Vertex Cover: a partition of `V` into few cliques
    /// bounds the independence number from above.
    CliquePartition(Vec<BTreeSet<usize>>),
    /// Clique Cover: an independent set of size `k + 1` forces more than
    /// `k` cliques, since a clique meets an independent set at most once.
    PlantedIndependentSet(BTreeSet<usize>),
    /// Dominating Set: `k` rounds of greedy max-coverage covered fewer than
    /// `(1 - (1 - 1/k)^k)·n` vertices, which rules out any size-`k`
    /// dominating set by the greedy guarantee.
    CoverageShortfall { covered: u64, bound: BigRational },
}

/// A problem-specific witness, or `Nil` for a negative answer (optionally
/// carrying a [`NegativityHint`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    CycleOrder(Vec<usize>),
    VertexSet(BTreeSet<usize>),
    Partition(Vec<BTreeSet<usize>>),
    Nil(Option<NegativityHint>),
}

impl Certificate {
    pub fn is_nil(&self) -> bool {
        matches!(self, Certificate::Nil(_))
    }

    pub fn hint(&self) -> Option<&NegativityHint> {
        match self {
            Certificate::Nil(h) => h.as_ref(),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Positive,
    Negative,
}

impl Answer {
    pub fn tag(self) -> &'static str {
        match self {
            Answer::Positive => "positive",
            Answer::Negative => "negative",
        }
    }
}

/// A complete solver outcome: the edited instance, the edits that produced
/// it, the answer with its certificate, and the recorded distance/budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelAnswer {
    pub edited: Instance,
    pub edits: EditSet,
    pub answer: Answer,
    pub certificate: Certificate,
    pub distance: u64,
    pub budget: Budget,
}

impl RelAnswer {
    /// Assembles an answer, deriving polarity from the certificate and the
    /// distance from the edit set under the budget's metric.
    pub fn new(
        edited: Instance,
        edits: EditSet,
        certificate: Certificate,
        budget: Budget,
    ) -> RelAnswer {
        let answer = if certificate.is_nil() {
            Answer::Negative
        } else {
            Answer::Positive
        };
        let distance = edits.distance(budget.metric);
        RelAnswer {
            edited,
            edits,
            answer,
            certificate,
            distance,
            budget,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("certificate variant does not match problem {0}")]
    VariantMismatch(Problem),
    #[error("problem {0} requires a threshold k")]
    MissingThreshold(Problem),
    #[error("hint kind is not applicable to problem {0}")]
    HintInapplicable(Problem),
}

fn threshold(p: Problem, inst: &Instance) -> Result<usize, CertifyError> {
    inst.k.ok_or(CertifyError::MissingThreshold(p))
}

/// Whether the parts are nonempty, pairwise disjoint, and cover `0..n`.
pub(crate) fn is_partition(parts: &[BTreeSet<usize>], n: usize) -> bool {
    let mut seen = vec![false; n];
    let mut total = 0usize;
    for part in parts {
        if part.is_empty() {
            return false;
        }
        for &v in part {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
            total += 1;
        }
    }
    total == n
}

pub(crate) fn is_independent(g: &Graph, s: &BTreeSet<usize>) -> bool {
    let vs: Vec<usize> = s.iter().copied().collect();
    vs.iter().all(|&v| v < g.n())
        && vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

fn is_clique(g: &Graph, s: &BTreeSet<usize>) -> bool {
    let vs: Vec<usize> = s.iter().copied().collect();
    vs.iter().all(|&v| v < g.n())
        && vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Checks a certificate against an instance.
///
/// `Nil` reports `true` here; negativity is audited separately through
/// [`verify_hint`] and the oracles. A variant/problem mismatch (including a
/// missing threshold) is a contract error, not a `false`.
pub fn verify_certificate(
    p: Problem,
    inst: &Instance,
    c: &Certificate,
) -> Result<bool, CertifyError> {
    let g = &inst.graph;
    let n = g.n();
    match (p, c) {
        (_, Certificate::Nil(_)) => Ok(true),
        (Problem::HamiltonianCycle, Certificate::CycleOrder(order)) => {
            if order.len() != n {
                return Ok(false);
            }
            let mut seen = vec![false; n];
            for &v in order {
                if v >= n || seen[v] {
                    return Ok(false);
                }
                seen[v] = true;
            }
            match n {
                0 | 1 => Ok(true),
                2 => Ok(false),
                _ => Ok((0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n]))),
            }
        }
        (Problem::HamiltonianCycle, _) => Err(CertifyError::VariantMismatch(p)),
        (Problem::DominatingSet, Certificate::VertexSet(s)) => {
            let k = threshold(p, inst)?;
            if s.len() != k || s.iter().any(|&v| v >= n) {
                return Ok(false);
            }
            let mut dominated = vec![false; n];
            for &v in s {
                dominated[v] = true;
                for u in g.neighbors(v) {
                    dominated[u] = true;
                }
            }
            Ok(dominated.into_iter().all(|d| d))
        }
        (Problem::IndependentSet, Certificate::VertexSet(s)) => {
            let k = threshold(p, inst)?;
            Ok(s.len() == k && is_independent(g, s))
        }
        (Problem::Clique, Certificate::VertexSet(s)) => {
            let k = threshold(p, inst)?;
            Ok(s.len() == k && is_clique(g, s))
        }
        (Problem::VertexCover, Certificate::VertexSet(s)) => {
            let k = threshold(p, inst)?;
            if s.len() != k || s.iter().any(|&v| v >= n) {
                return Ok(false);
            }
            Ok(g.edges().all(|(u, v)| s.contains(&u) || s.contains(&v)))
        }
        (Problem::Coloring, Certificate::Partition(parts)) => {
            let k = threshold(p, inst)?;
            Ok(parts.len() <= k
                && is_partition(parts, n)
                && parts.iter().all(|part| is_independent(g, part)))
        }
        (Problem::CliqueCover, Certificate::Partition(parts)) => {
            let k = threshold(p, inst)?;
            Ok(parts.len() <= k
                && is_partition(parts, n)
                && parts.iter().all(|part| is_clique(g, part)))
        }
        _ => Err(CertifyError::VariantMismatch(p)),
    }
}

/// The exact greedy-coverage shortfall threshold `(1 - (1 - 1/k)^k)·n` as a
/// rational: `n·(k^k - (k-1)^k)/k^k`.
pub fn coverage_bound(n: usize, k: usize) -> BigRational {
    assert!(k >= 1, "coverage bound needs k >= 1");
    let kk = BigUint::from(k).pow(k as u32);
    let k1k = BigUint::from(k - 1).pow(k as u32);
    let num = BigUint::from(n) * (&kk - &k1k);
    BigRational::new(BigInt::from(num), BigInt::from(kk))
}

/// Validates that a hint soundly proves negativity of `inst` for problem `p`.
///
/// Every kind is rechecked against the instance; for the coverage hint the
/// deterministic greedy is replayed from scratch.
pub fn verify_hint(
    p: Problem,
    inst: &Instance,
    hint: &NegativityHint,
) -> Result<bool, CertifyError> {
    let g = &inst.graph;
    let n = g.n();
    match (p, hint) {
        (Problem::HamiltonianCycle, NegativityHint::IsolatedVertex(v)) => {
            Ok(n >= 2 && *v < n && g.degree(*v) == 0)
        }
        (Problem::HamiltonianCycle, NegativityHint::SeparatorPair(vs)) => {
            if vs.len() > 2 || vs.iter().any(|&v| v >= n) {
                return Ok(false);
            }
            let removed: BTreeSet<usize> = vs.iter().copied().collect();
            if removed.len() != vs.len() {
                return Ok(false);
            }
            // A Hamiltonian cycle minus j >= 1 vertices has at most j
            // components; minus 0 vertices it is connected.
            Ok(g.components_without(&removed) > removed.len().max(1))
        }
        (Problem::IndependentSet, NegativityHint::CliquePartition(parts)) => {
            let k = threshold(p, inst)?;
            Ok(k >= 1
                && parts.len() <= k - 1
                && is_partition(parts, n)
                && parts.iter().all(|part| is_clique(g, part)))
        }
        (Problem::VertexCover, NegativityHint::CliquePartition(parts)) => {
            // No vertex cover of size k iff no independent set of size n-k;
            // a partition into at most n-k-1 cliques rules the latter out.
            let k = threshold(p, inst)?;
            if n < k + 1 {
                return Ok(false);
            }
            Ok(parts.len() <= n - k - 1
                && is_partition(parts, n)
                && parts.iter().all(|part| is_clique(g, part)))
        }
        (Problem::CliqueCover, NegativityHint::PlantedIndependentSet(s)) => {
            let k = threshold(p, inst)?;
            Ok(s.len() >= k + 1 && is_independent(g, s))
        }
        (Problem::DominatingSet, NegativityHint::CoverageShortfall { covered, bound }) => {
            let k = threshold(p, inst)?;
            if k == 0 {
                return Err(CertifyError::HintInapplicable(p));
            }
            let (_, reached) = crate::solvers::domset::greedy_k_coverage(g, k);
            let expected = coverage_bound(n, k);
            Ok(reached.len() as u64 == *covered
                && *bound == expected
                && BigRational::from_integer(BigInt::from(*covered)) < expected)
        }
        _ => Err(CertifyError::HintInapplicable(p)),
    }
}

/// One entry of a verification report.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// The outcome of [`verify_rel_answer`]: a pass/fail line per audit step.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn oracle_positive(
    p: Problem,
    inst: &Instance,
    limits: &OracleLimits,
) -> Result<Option<bool>, CertifyError> {
    use oracles as o;
    let g = &inst.graph;
    let res = match p {
        Problem::HamiltonianCycle => o::is_hamiltonian(g, limits).map(Some),
        Problem::DominatingSet => {
            let k = threshold(p, inst)?;
            o::has_dominating_set_of_size(g, k, limits).map(Some)
        }
        Problem::IndependentSet => {
            let k = threshold(p, inst)?;
            o::independence_number(g, limits).map(|a| Some(a >= k))
        }
        Problem::Clique => {
            let k = threshold(p, inst)?;
            o::clique_number(g, limits).map(|w| Some(w >= k))
        }
        Problem::VertexCover => {
            let k = threshold(p, inst)?;
            o::min_vertex_cover(g, limits).map(|c| Some(c.len() <= k))
        }
        Problem::Coloring => {
            let k = threshold(p, inst)?;
            o::chromatic_number(g, limits).map(|c| Some(c <= k))
        }
        Problem::CliqueCover => {
            let k = threshold(p, inst)?;
            o::clique_cover_number(g, limits).map(|c| Some(c <= k))
        }
    };
    Ok(res.unwrap_or(None))
}

/// Audits a solver output against the original instance:
///
/// 1. `distance` — the recorded edits equal the recomputed symmetric
///    difference, the recorded distance is the recomputed one, and it is
///    within budget (with the budget metric matching the requested one);
/// 2. `threshold` — the threshold was not edited;
/// 3. `certificate` — positive answers carry a valid witness;
/// 4. `hint` — a negativity hint, when present, soundly proves negativity;
/// 5. `oracle` — optionally, the exact oracle agrees with the answer on the
///    edited instance (skipped over the cutoff).
pub fn verify_rel_answer(
    p: Problem,
    original: &Instance,
    a: &RelAnswer,
    metric: Metric,
    oracle_limits: Option<&OracleLimits>,
) -> VerifyReport {
    let mut checks = Vec::new();

    // (i) distance, edits consistency, budget
    let distance_check = match symmetric_difference(&original.graph, &a.edited.graph) {
        Ok(diff) => {
            if diff != a.edits {
                Check {
                    name: "distance",
                    passed: false,
                    detail: "recorded edit set differs from recomputed symmetric difference"
                        .into(),
                }
            } else {
                let recomputed = diff.distance(metric);
                if a.budget.metric != metric {
                    Check {
                        name: "distance",
                        passed: false,
                        detail: format!(
                            "budget metric {} does not match requested {}",
                            a.budget.metric, metric
                        ),
                    }
                } else if recomputed != a.distance {
                    Check {
                        name: "distance",
                        passed: false,
                        detail: format!(
                            "recorded distance {} but recomputed {recomputed}",
                            a.distance
                        ),
                    }
                } else if !a.budget.admits(recomputed) {
                    Check {
                        name: "distance",
                        passed: false,
                        detail: format!(
                            "distance {recomputed} exceeds budget {}",
                            a.budget.bound
                        ),
                    }
                } else {
                    Check {
                        name: "distance",
                        passed: true,
                        detail: format!("distance {recomputed} within {}", a.budget.bound),
                    }
                }
            }
        }
        Err(e) => Check {
            name: "distance",
            passed: false,
            detail: format!("edited graph incomparable: {e}"),
        },
    };
    checks.push(distance_check);

    // (ii) threshold unchanged
    checks.push(Check {
        name: "threshold",
        passed: a.edited.k == original.k,
        detail: format!("k: {:?} vs {:?}", original.k, a.edited.k),
    });

    // (iii) positive answers carry a valid certificate
    let cert_check = match a.answer {
        Answer::Positive => {
            if a.certificate.is_nil() {
                Check {
                    name: "certificate",
                    passed: false,
                    detail: "positive answer with Nil certificate".into(),
                }
            } else {
                match verify_certificate(p, &a.edited, &a.certificate) {
                    Ok(true) => Check {
                        name: "certificate",
                        passed: true,
                        detail: "witness valid on edited instance".into(),
                    },
                    Ok(false) => Check {
                        name: "certificate",
                        passed: false,
                        detail: "witness invalid on edited instance".into(),
                    },
                    Err(e) => Check {
                        name: "certificate",
                        passed: false,
                        detail: e.to_string(),
                    },
                }
            }
        }
        Answer::Negative => Check {
            name: "certificate",
            passed: a.certificate.is_nil(),
            detail: if a.certificate.is_nil() {
                "negative answer with Nil certificate".into()
            } else {
                "negative answer carries a non-Nil certificate".into()
            },
        },
    };
    checks.push(cert_check);

    // (iv) hints, when present, must be sound
    let hint_check = match (a.answer, a.certificate.hint()) {
        (Answer::Negative, Some(hint)) => match verify_hint(p, &a.edited, hint) {
            Ok(true) => Check {
                name: "hint",
                passed: true,
                detail: "negativity hint validates".into(),
            },
            Ok(false) => Check {
                name: "hint",
                passed: false,
                detail: "negativity hint fails validation".into(),
            },
            Err(e) => Check {
                name: "hint",
                passed: false,
                detail: e.to_string(),
            },
        },
        _ => Check {
            name: "hint",
            passed: true,
            detail: "no hint to check".into(),
        },
    };
    checks.push(hint_check);

    // (v) optional oracle cross-check on the edited instance
    if let Some(limits) = oracle_limits {
        let check = match oracle_positive(p, &a.edited, limits) {
            Ok(Some(truth)) => {
                let claimed = matches!(a.answer, Answer::Positive);
                Check {
                    name: "oracle",
                    passed: truth == claimed,
                    detail: format!("oracle says {}", if truth { "positive" } else { "negative" }),
                }
            }
            Ok(None) => Check {
                name: "oracle",
                passed: true,
                detail: "skipped: over oracle cutoff".into(),
            },
            Err(e) => Check {
                name: "oracle",
                passed: false,
                detail: e.to_string(),
            },
        };
        checks.push(check);
    }

    VerifyReport { checks }
}
