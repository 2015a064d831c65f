//! Length- and distance-preserving instance isomorphisms, and the solvers
//! they induce: Clique and Coloring ride on the complement map, Vertex
//! Cover on the threshold flip, each with the matching certificate
//! pullback. Both maps are involutions, and both preserve the two metrics
//! exactly, so the inner solver's distance carries over unchanged.

use std::collections::BTreeSet;

use crate::certify::{Certificate, NegativityHint, Problem, RelAnswer};
use crate::graph::Instance;

use super::{rel_cliquecover_edits, rel_cliquecover_maxdeg, rel_is_edits, rel_is_maxdeg};
use super::{SolveError, SolveOptions};

/// An instance isomorphism φ with its output pullback behavior.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoMap {
    /// `(G, k) ↦ (Ḡ, k)`. `G △ H = Ḡ △ H̄`, so both metrics are preserved.
    ComplementGraph,
    /// `(G, k) ↦ (G, n-k)`. The graph part is untouched.
    ThresholdFlip,
}

impl IsoMap {
    /// Applies φ (an involution) to an instance.
    pub fn apply(self, inst: &Instance) -> Result<Instance, SolveError> {
        match self {
            IsoMap::ComplementGraph => Ok(Instance {
                graph: inst.graph.complement(),
                k: inst.k,
            }),
            IsoMap::ThresholdFlip => {
                let k = inst
                    .k
                    .ok_or(SolveError::MissingThreshold(Problem::VertexCover))?;
                Ok(Instance {
                    graph: inst.graph.clone(),
                    k: Some(inst.n() - k),
                })
            }
        }
    }
}

/// Pulls the inner certificate back to the target problem.
///
/// Positive witnesses: the identity for Clique↔Independent Set and
/// Coloring↔Clique Cover (complement map), the set complement for Vertex
/// Cover↔Independent Set (threshold flip). Negative hints survive the
/// threshold flip unchanged (same graph; the verifier reads the bound
/// relative to `n-k`), but are dropped under complementation, where their
/// structural meaning inverts.
fn pull_back_certificate(iso: IsoMap, n: usize, cert: Certificate) -> Certificate {
    match (iso, cert) {
        (IsoMap::ThresholdFlip, Certificate::VertexSet(s)) => {
            Certificate::VertexSet((0..n).filter(|v| !s.contains(v)).collect::<BTreeSet<_>>())
        }
        (IsoMap::ThresholdFlip, Certificate::Nil(hint)) => Certificate::Nil(match hint {
            Some(NegativityHint::CliquePartition(parts)) => {
                Some(NegativityHint::CliquePartition(parts))
            }
            _ => None,
        }),
        (IsoMap::ComplementGraph, Certificate::Nil(_)) => Certificate::Nil(None),
        (_, cert) => cert,
    }
}

/// Solves a problem by mapping the instance through `iso`, running `inner`,
/// and mapping the edited instance and certificate back. The distance is
/// preserved exactly, so the inner budget applies verbatim.
pub fn rel_via_isomorphism<F>(
    iso: IsoMap,
    inst: &Instance,
    inner: F,
) -> Result<RelAnswer, SolveError>
where
    F: FnOnce(&Instance) -> Result<RelAnswer, SolveError>,
{
    let mapped = iso.apply(inst)?;
    let inner_answer = inner(&mapped)?;
    let edited = iso.apply(&inner_answer.edited)?;
    let edits = match iso {
        IsoMap::ComplementGraph => inner_answer.edits.complemented(),
        IsoMap::ThresholdFlip => inner_answer.edits,
    };
    debug_assert_eq!(
        edits.distance(inner_answer.budget.metric),
        inner_answer.distance,
        "isomorphism must preserve the distance"
    );
    let certificate = pull_back_certificate(iso, inst.n(), inner_answer.certificate);
    Ok(super::certified(RelAnswer::new(
        edited,
        edits,
        certificate,
        inner_answer.budget,
    )))
}

pub fn rel_clique_maxdeg(inst: &Instance, opts: &SolveOptions) -> Result<RelAnswer, SolveError> {
    rel_via_isomorphism(IsoMap::ComplementGraph, inst, |i| rel_is_maxdeg(i, opts))
}

pub fn rel_clique_edits(inst: &Instance, opts: &SolveOptions) -> Result<RelAnswer, SolveError> {
    rel_via_isomorphism(IsoMap::ComplementGraph, inst, |i| rel_is_edits(i, opts))
}

pub fn rel_vertex_cover_maxdeg(
    inst: &Instance,
    opts: &SolveOptions,
) -> Result<RelAnswer, SolveError> {
    rel_via_isomorphism(IsoMap::ThresholdFlip, inst, |i| rel_is_maxdeg(i, opts))
}

pub fn rel_vertex_cover_edits(
    inst: &Instance,
    opts: &SolveOptions,
) -> Result<RelAnswer, SolveError> {
    rel_via_isomorphism(IsoMap::ThresholdFlip, inst, |i| rel_is_edits(i, opts))
}

pub fn rel_coloring_maxdeg(inst: &Instance, opts: &SolveOptions) -> Result<RelAnswer, SolveError> {
    rel_via_isomorphism(IsoMap::ComplementGraph, inst, |i| {
        rel_cliquecover_maxdeg(i, opts)
    })
}

pub fn rel_coloring_edits(inst: &Instance, opts: &SolveOptions) -> Result<RelAnswer, SolveError> {
    rel_via_isomorphism(IsoMap::ComplementGraph, inst, |i| {
        rel_cliquecover_edits(i, opts)
    })
}
