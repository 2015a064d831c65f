//! Constructive solution transfer across bounded edit distance: recovering
//! witnesses for the original graph from witnesses of a nearby graph.
//!
//! Premises are cheap to restate, so each operation re-verifies the pair it
//! is given instead of trusting caller-supplied degree or distance bounds;
//! a violated premise is a contract error, never a silent wrong answer.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::certify::{is_independent, is_partition};
use crate::graph::{dist_edits, dist_maxdeg, Distance, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransferError {
    #[error("premise violated: {0}")]
    PremiseViolated(String),
    #[error("partitions have different ground sets")]
    GroundSetMismatch,
    #[error("sequence is not a cycle order: {0}")]
    NotACycle(String),
}

fn premise(msg: impl Into<String>) -> TransferError {
    TransferError::PremiseViolated(msg.into())
}

/// Greedy minimum-degree peeling: an independent set of size at least
/// `⌈n/(Δ(g)+1)⌉`. Each round takes the lowest-index minimum-degree vertex
/// of what remains and discards its closed neighborhood.
pub fn bounded_degree_independent_set(g: &Graph) -> BTreeSet<usize> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut alive_count = n;
    let mut picked = BTreeSet::new();
    while alive_count > 0 {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| g.neighbors(v).filter(|&u| alive[u]).count())
            .expect("alive_count > 0");
        picked.insert(v);
        alive[v] = false;
        alive_count -= 1;
        for u in g.neighbors(v) {
            if alive[u] {
                alive[u] = false;
                alive_count -= 1;
            }
        }
    }
    let floor_bound = n.div_ceil(g.max_degree() + 1);
    assert!(picked.len() >= floor_bound, "peeling bound violated");
    picked
}

/// Greedy coloring along the reverse of a degeneracy order. The class count
/// is at most `degeneracy + 1`, hence at most `⌈√(2m)⌉` on an `m ≥ 1`-edge
/// graph (and at most `Δ + 1` always); edgeless graphs take one class.
pub fn sqrt2m_coloring(g: &Graph) -> Vec<BTreeSet<usize>> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    // Degeneracy order: repeatedly delete a minimum-degree vertex.
    let mut alive = vec![true; n];
    let mut removal = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| g.neighbors(v).filter(|&u| alive[u]).count())
            .expect("vertices remain");
        alive[v] = false;
        removal.push(v);
    }
    let mut color = vec![usize::MAX; n];
    let mut classes: Vec<BTreeSet<usize>> = Vec::new();
    for &v in removal.iter().rev() {
        let used: BTreeSet<usize> = g
            .neighbors(v)
            .filter_map(|u| (color[u] != usize::MAX).then_some(color[u]))
            .collect();
        let c = (0..).find(|c| !used.contains(c)).expect("some color free");
        color[v] = c;
        if c == classes.len() {
            classes.push(BTreeSet::new());
        }
        classes[c].insert(v);
    }
    classes
}

/// The common refinement of two partitions of the same ground set: all
/// nonempty intersections `Pᵢ ∩ Qⱼ`, in `(i, j)` order.
pub fn refine_partition(
    p: &[BTreeSet<usize>],
    q: &[BTreeSet<usize>],
) -> Result<Vec<BTreeSet<usize>>, TransferError> {
    let ground: BTreeSet<usize> = p.iter().flatten().copied().collect();
    let ground_q: BTreeSet<usize> = q.iter().flatten().copied().collect();
    let p_total: usize = p.iter().map(|s| s.len()).sum();
    let q_total: usize = q.iter().map(|s| s.len()).sum();
    if ground != ground_q || p_total != ground.len() || q_total != ground.len() {
        return Err(TransferError::GroundSetMismatch);
    }
    let mut out = Vec::new();
    for pi in p {
        for qj in q {
            let cell: BTreeSet<usize> = pi.intersection(qj).copied().collect();
            if !cell.is_empty() {
                out.push(cell);
            }
        }
    }
    Ok(out)
}

/// Recovers an independent set of `g` of size at least `⌈|s|/(d+1)⌉` from a
/// set `s` that is independent in some graph within max-degree distance `d`
/// of `g` — equivalently, `Δ(g[s]) ≤ d`, which is rechecked.
pub fn transfer_is_maxdeg(
    g: &Graph,
    s: &BTreeSet<usize>,
    d: usize,
) -> Result<BTreeSet<usize>, TransferError> {
    if s.iter().any(|&v| v >= g.n()) {
        return Err(premise("set contains out-of-range vertices"));
    }
    let (induced, labels) = g.induced(s);
    if induced.max_degree() > d {
        return Err(premise(format!(
            "g[s] has maximum degree {} > d = {d}",
            induced.max_degree()
        )));
    }
    let picked = bounded_degree_independent_set(&induced);
    assert!(picked.len() >= s.len().div_ceil(d + 1));
    Ok(picked.into_iter().map(|v| labels[v]).collect())
}

fn check_proper(g: &Graph, p: &[BTreeSet<usize>], who: &str) -> Result<(), TransferError> {
    if !is_partition(p, g.n()) {
        return Err(premise(format!("{who}: not a partition of the vertex set")));
    }
    if !p.iter().all(|part| is_independent(g, part)) {
        return Err(premise(format!("{who}: some part is not independent")));
    }
    Ok(())
}

/// Turns a proper coloring of `h` into one of `g`, where
/// `dist_Δ(g, h) ≤ d`: greedily color `g - E(h)` (max degree at most `d`)
/// with at most `d+1` classes and refine. The result has at most
/// `|p|·(d+1)` parts and is proper for `g`.
pub fn transfer_coloring_maxdeg(
    g: &Graph,
    h: &Graph,
    p: &[BTreeSet<usize>],
    d: usize,
) -> Result<Vec<BTreeSet<usize>>, TransferError> {
    match dist_maxdeg(g, h) {
        Distance::Finite(x) if x <= d as u64 => {}
        other => return Err(premise(format!("dist_maxdeg(g,h) = {other} exceeds d = {d}"))),
    }
    check_proper(h, p, "p on h")?;
    let n = g.n();
    // g deprived of the edges of h.
    let mut stripped = Graph::new(n);
    for (u, v) in g.edges() {
        if !h.has_edge(u, v) {
            stripped.add_edge(u, v).unwrap();
        }
    }
    let mut color = vec![usize::MAX; n];
    let mut classes: Vec<BTreeSet<usize>> = Vec::new();
    for v in 0..n {
        let used: BTreeSet<usize> = stripped
            .neighbors(v)
            .filter_map(|u| (color[u] != usize::MAX).then_some(color[u]))
            .collect();
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        color[v] = c;
        if c == classes.len() {
            classes.push(BTreeSet::new());
        }
        classes[c].insert(v);
    }
    assert!(classes.len() <= d + 1);
    let refined = refine_partition(p, &classes)?;
    debug_assert!(refined.len() <= p.len() * (d + 1));
    Ok(refined)
}

/// Turns a proper coloring `p = {P₁..P_t}` of `h` into one of `g`, where
/// `dist_e(g, h) ≤ big_d`: each `g[Pᵢ]` is recolored with
/// [`sqrt2m_coloring`] (at most `⌈√(2aᵢ)⌉` classes on `aᵢ ≥ 1` inside
/// edges) and the classes are concatenated, for a total of at most
/// `t + √(2·t·big_d)` parts by Cauchy–Schwarz.
pub fn transfer_coloring_edits(
    g: &Graph,
    h: &Graph,
    p: &[BTreeSet<usize>],
    big_d: usize,
) -> Result<Vec<BTreeSet<usize>>, TransferError> {
    match dist_edits(g, h) {
        Distance::Finite(x) if x <= big_d as u64 => {}
        other => {
            return Err(premise(format!(
                "dist_edits(g,h) = {other} exceeds D = {big_d}"
            )))
        }
    }
    check_proper(h, p, "p on h")?;
    let mut out = Vec::new();
    for part in p {
        let (induced, labels) = g.induced(part);
        for class in sqrt2m_coloring(&induced) {
            out.push(class.into_iter().map(|v| labels[v]).collect::<BTreeSet<_>>());
        }
    }
    Ok(out)
}

/// The longest stretch of a claimed Hamiltonian cycle whose edges all lie
/// in `g`; see [`extract_original_path`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractedArc {
    pub vertices: Vec<usize>,
    /// Whether the arc wraps the whole cycle (every edge original), in
    /// which case the closing edge counts too.
    pub closed: bool,
}

impl ExtractedArc {
    pub fn edge_count(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len().saturating_sub(1)
        }
    }
}

/// Given a Hamiltonian cycle of some supergraph of `g` that uses `a` edges
/// outside `E(g)`, returns the longest contiguous arc of the cycle lying
/// entirely in `g`: at least `⌈(n-a)/a⌉` edges when `a ≥ 1` by pigeonhole,
/// the whole cycle when `a = 0`.
pub fn extract_original_path(cycle: &[usize], g: &Graph) -> Result<ExtractedArc, TransferError> {
    let n = g.n();
    if cycle.len() != n {
        return Err(TransferError::NotACycle(format!(
            "length {} != n = {n}",
            cycle.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return Err(TransferError::NotACycle("repeated or invalid vertex".into()));
        }
        seen[v] = true;
    }
    if n == 2 {
        return Err(TransferError::NotACycle("no simple cycle on 2 vertices".into()));
    }
    if n <= 1 {
        return Ok(ExtractedArc {
            vertices: cycle.to_vec(),
            closed: false,
        });
    }
    let original: Vec<bool> = (0..n)
        .map(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
        .collect();
    if original.iter().all(|&b| b) {
        return Ok(ExtractedArc {
            vertices: cycle.to_vec(),
            closed: true,
        });
    }
    // Longest circular run of original edges, scanning forward from just
    // past the first non-original edge.
    let start = original.iter().position(|&b| !b).unwrap();
    let mut best_from = (start + 1) % n;
    let mut best_len = 0usize;
    let mut run_from = (start + 1) % n;
    let mut run_len = 0usize;
    for step in 1..=n {
        let i = (start + step) % n;
        if original[i] {
            if run_len == 0 {
                run_from = i;
            }
            run_len += 1;
            if run_len > best_len {
                best_len = run_len;
                best_from = run_from;
            }
        } else {
            run_len = 0;
        }
    }
    let vertices: Vec<usize> = (0..=best_len).map(|off| cycle[(best_from + off) % n]).collect();
    Ok(ExtractedArc {
        vertices,
        closed: false,
    })
}
