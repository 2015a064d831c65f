//! Exact exponential-time solvers, used as ground truth in tests and as
//! small-instance fallbacks. They exist to verify, not to scale: each is
//! guarded by a configurable vertex-count cutoff and refuses larger inputs.
//!
//! All ties between optimal witnesses break toward the lexicographically
//! smallest one under a fixed enumeration order, so outputs are stable
//! across runs and usable in golden tests.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

/// Vertex-count cutoffs for the oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub hamiltonian: usize,
    pub dominating: usize,
    pub independent: usize,
    pub chromatic: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            hamiltonian: 18,
            dominating: 18,
            independent: 24,
            chromatic: 16,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {n} vertices, over the oracle cutoff {cutoff}")]
    CutoffExceeded { n: usize, cutoff: usize },
}

fn check_cutoff(n: usize, cutoff: usize, hard_max: usize) -> Result<(), OracleError> {
    let cutoff = cutoff.min(hard_max);
    if n > cutoff {
        Err(OracleError::CutoffExceeded { n, cutoff })
    } else {
        Ok(())
    }
}

// Bitmask-imposed ceilings; configured cutoffs are clamped to these.
const HARD_MAX_HAM: usize = 22;
const HARD_MAX_SUBSET: usize = 31;
const HARD_MAX_CHROMATIC: usize = 20;

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | (1 << u)))
        .collect()
}

/// Finds a Hamiltonian cycle by dynamic programming over vertex subsets,
/// returning the lexicographically smallest cycle order starting at vertex 0,
/// or `None` if the graph is not Hamiltonian.
///
/// Graphs on 0 or 1 vertices count as trivially Hamiltonian; a 2-vertex
/// simple graph never is.
pub fn hamiltonian_cycle(
    g: &Graph,
    limits: &OracleLimits,
) -> Result<Option<Vec<usize>>, OracleError> {
    let n = g.n();
    check_cutoff(n, limits.hamiltonian, HARD_MAX_HAM)?;
    match n {
        0 => return Ok(Some(Vec::new())),
        1 => return Ok(Some(vec![0])),
        2 => return Ok(None),
        _ => {}
    }
    let adj = adjacency_masks(g);
    let full: u32 = (1u32 << n) - 1;
    // completable[mask * n + last]: standing at `last` with `mask` visited
    // (0 ∈ mask), the rest can be visited and the cycle closed at 0.
    let mut completable = vec![false; (full as usize + 1) * n];
    for mask in (1..=full).rev() {
        if mask & 1 == 0 {
            continue;
        }
        for last in 0..n {
            if mask & (1 << last) == 0 {
                continue;
            }
            let ok = if mask == full {
                adj[last] & 1 != 0
            } else {
                let nexts = adj[last] & !mask;
                let mut found = false;
                let mut rest = nexts;
                while rest != 0 {
                    let next = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if completable[((mask | (1 << next)) as usize) * n + next] {
                        found = true;
                        break;
                    }
                }
                found
            };
            completable[(mask as usize) * n + last] = ok;
        }
    }
    if !completable[n] {
        // mask = {0}, last = 0
        return Ok(None);
    }
    // Greedy reconstruction picks the smallest viable next vertex, which
    // yields the lexicographically smallest cycle order.
    let mut order = vec![0usize];
    let mut mask: u32 = 1;
    let mut last = 0usize;
    for _ in 1..n {
        let mut nexts = adj[last] & !mask;
        let mut chosen = None;
        while nexts != 0 {
            let next = nexts.trailing_zeros() as usize;
            nexts &= nexts - 1;
            if completable[((mask | (1 << next)) as usize) * n + next] {
                chosen = Some(next);
                break;
            }
        }
        let next = chosen.expect("completable state must extend");
        order.push(next);
        mask |= 1 << next;
        last = next;
    }
    debug_assert!(g.has_edge(last, 0));
    Ok(Some(order))
}

pub fn is_hamiltonian(g: &Graph, limits: &OracleLimits) -> Result<bool, OracleError> {
    Ok(hamiltonian_cycle(g, limits)?.is_some())
}

/// A minimum dominating set, by enumerating vertex subsets in increasing
/// size and lexicographic order within each size.
pub fn min_dominating_set(
    g: &Graph,
    limits: &OracleLimits,
) -> Result<BTreeSet<usize>, OracleError> {
    let n = g.n();
    check_cutoff(n, limits.dominating, HARD_MAX_SUBSET)?;
    if n == 0 {
        return Ok(BTreeSet::new());
    }
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(1u32 << v, |m, u| m | (1 << u)))
        .collect();
    let full: u32 = (1u32 << n) - 1;
    for size in 1..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let union = combo.iter().fold(0u32, |m, &v| m | closed[v]);
            if union == full {
                return Ok(combo.into_iter().collect());
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set always dominates")
}

/// Advances to the next size-`|combo|` subset of `0..n` in lexicographic
/// order; returns `false` past the last one.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let size = combo.len();
    let mut i = size;
    while i > 0 {
        i -= 1;
        if combo[i] < i + n - size {
            combo[i] += 1;
            for j in i + 1..size {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn domination_number(g: &Graph, limits: &OracleLimits) -> Result<usize, OracleError> {
    Ok(min_dominating_set(g, limits)?.len())
}

/// `true` iff `g` has a dominating set of size exactly `k` (equivalently,
/// `γ(g) ≤ k`, since dominating sets are closed under supersets up to `n`).
pub fn has_dominating_set_of_size(
    g: &Graph,
    k: usize,
    limits: &OracleLimits,
) -> Result<bool, OracleError> {
    if k > g.n() {
        return Ok(false);
    }
    if g.n() == 0 {
        return Ok(k == 0);
    }
    if k == 0 {
        return Ok(false);
    }
    Ok(domination_number(g, limits)? <= k)
}

struct MisSolver {
    adj: Vec<u32>,
    n: usize,
}

impl MisSolver {
    fn closed(&self, v: usize) -> u32 {
        self.adj[v] | (1 << v)
    }

    /// Maximum independent set size within the candidate mask. Branch and
    /// bound with the min-degree inclusion reduction.
    fn size(&self, mask: u32) -> usize {
        if mask == 0 {
            return 0;
        }
        // A vertex with at most one candidate neighbor can always be taken.
        let mut best_v = usize::MAX;
        let mut best_deg = usize::MAX;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let deg = (self.adj[v] & mask).count_ones() as usize;
            if deg <= 1 {
                return 1 + self.size(mask & !self.closed(v));
            }
            if best_deg == usize::MAX || deg > best_deg {
                best_deg = deg;
                best_v = v;
            }
        }
        let v = best_v;
        let include = 1 + self.size(mask & !self.closed(v));
        let exclude = self.size(mask & !(1u32 << v));
        include.max(exclude)
    }
}

/// A maximum independent set (lexicographically smallest among the maximum
/// ones), by branch and bound.
pub fn max_independent_set(
    g: &Graph,
    limits: &OracleLimits,
) -> Result<BTreeSet<usize>, OracleError> {
    let n = g.n();
    check_cutoff(n, limits.independent, HARD_MAX_SUBSET)?;
    if n == 0 {
        return Ok(BTreeSet::new());
    }
    let solver = MisSolver {
        adj: adjacency_masks(g),
        n,
    };
    let full: u32 = (1u32 << n) - 1;
    let target = solver.size(full);
    // Greedy prefix extension: vertex v joins the witness iff a maximum
    // independent set through the current choices and v still exists among
    // the vertices after v. This yields the lexicographically smallest
    // maximum independent set.
    let mut chosen = BTreeSet::new();
    let mut remaining = full;
    for v in 0..solver.n {
        if remaining & (1 << v) == 0 {
            continue;
        }
        let above = full & !((1u32 << (v + 1)).wrapping_sub(1));
        let if_included = remaining & !solver.closed(v) & above;
        if chosen.len() + 1 + solver.size(if_included) == target {
            chosen.insert(v);
            remaining &= !solver.closed(v);
        } else {
            remaining &= !(1u32 << v);
        }
    }
    debug_assert_eq!(chosen.len(), target);
    Ok(chosen)
}

pub fn independence_number(g: &Graph, limits: &OracleLimits) -> Result<usize, OracleError> {
    Ok(max_independent_set(g, limits)?.len())
}

/// Maximum clique, through the complement identity: a clique of `g` is an
/// independent set of `ḡ`.
pub fn max_clique(g: &Graph, limits: &OracleLimits) -> Result<BTreeSet<usize>, OracleError> {
    max_independent_set(&g.complement(), limits)
}

pub fn clique_number(g: &Graph, limits: &OracleLimits) -> Result<usize, OracleError> {
    Ok(max_clique(g, limits)?.len())
}

/// Minimum vertex cover, as the complement of a maximum independent set.
pub fn min_vertex_cover(g: &Graph, limits: &OracleLimits) -> Result<BTreeSet<usize>, OracleError> {
    let mis = max_independent_set(g, limits)?;
    Ok((0..g.n()).filter(|v| !mis.contains(v)).collect())
}

/// An optimal proper coloring as a partition of the vertex set into
/// independent sets, by subset dynamic programming over color classes.
pub fn chromatic_partition(
    g: &Graph,
    limits: &OracleLimits,
) -> Result<Vec<BTreeSet<usize>>, OracleError> {
    let n = g.n();
    check_cutoff(n, limits.chromatic, HARD_MAX_CHROMATIC)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj = adjacency_masks(g);
    let full: u32 = (1u32 << n) - 1;
    let size = full as usize + 1;
    let mut independent = vec![false; size];
    independent[0] = true;
    for mask in 1..size as u32 {
        let v = mask.trailing_zeros() as usize;
        independent[mask as usize] =
            independent[(mask & (mask - 1)) as usize] && adj[v] & mask == 0;
    }
    let mut colors = vec![u8::MAX; size];
    let mut choice = vec![0u32; size];
    colors[0] = 0;
    for mask in 1..=full {
        let low = 1u32 << mask.trailing_zeros();
        // Enumerate submasks of `mask` containing its lowest vertex; the
        // first submask attaining the minimum is kept, which fixes the
        // witness deterministically.
        let mut best = u8::MAX;
        let mut best_class = 0u32;
        let mut sub = mask;
        loop {
            if sub & low != 0 && independent[sub as usize] {
                let rest = colors[(mask & !sub) as usize];
                if rest != u8::MAX && rest + 1 < best {
                    best = rest + 1;
                    best_class = sub;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        colors[mask as usize] = best;
        choice[mask as usize] = best_class;
    }
    let mut parts = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let class = choice[mask as usize];
        parts.push(
            (0..n)
                .filter(|&v| class & (1 << v) != 0)
                .collect::<BTreeSet<usize>>(),
        );
        mask &= !class;
    }
    Ok(parts)
}

pub fn chromatic_number(g: &Graph, limits: &OracleLimits) -> Result<usize, OracleError> {
    Ok(chromatic_partition(g, limits)?.len())
}

/// An optimal partition of the vertex set into cliques: a coloring of the
/// complement graph.
pub fn clique_cover_partition(
    g: &Graph,
    limits: &OracleLimits,
) -> Result<Vec<BTreeSet<usize>>, OracleError> {
    chromatic_partition(&g.complement(), limits)
}

pub fn clique_cover_number(g: &Graph, limits: &OracleLimits) -> Result<usize, OracleError> {
    Ok(clique_cover_partition(g, limits)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> OracleLimits {
        OracleLimits::default()
    }

    fn petersen() -> Graph {
        // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn hamiltonian_cycle_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(
            hamiltonian_cycle(&c5, &limits()).unwrap(),
            Some(vec![0, 1, 2, 3, 4])
        );
        let claw = Graph::star(4);
        assert_eq!(hamiltonian_cycle(&claw, &limits()).unwrap(), None);
        assert_eq!(hamiltonian_cycle(&petersen(), &limits()).unwrap(), None);
    }

    #[test]
    fn hamiltonian_small_conventions() {
        assert_eq!(
            hamiltonian_cycle(&Graph::new(0), &limits()).unwrap(),
            Some(vec![])
        );
        assert_eq!(
            hamiltonian_cycle(&Graph::new(1), &limits()).unwrap(),
            Some(vec![0])
        );
        assert_eq!(
            hamiltonian_cycle(&Graph::complete(2), &limits()).unwrap(),
            None
        );
    }

    #[test]
    fn cutoff_refusal() {
        let g = Graph::new(19);
        assert_eq!(
            hamiltonian_cycle(&g, &limits()),
            Err(OracleError::CutoffExceeded { n: 19, cutoff: 18 })
        );
    }

    #[test]
    fn dominating_set_examples() {
        let star = Graph::star(5);
        assert_eq!(min_dominating_set(&star, &limits()).unwrap(), BTreeSet::from([0]));
        let edgeless = Graph::new(5);
        assert_eq!(
            min_dominating_set(&edgeless, &limits()).unwrap().len(),
            5
        );
        let c6 = Graph::cycle(6);
        let ds = min_dominating_set(&c6, &limits()).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds, BTreeSet::from([0, 3]));
    }

    #[test]
    fn independent_set_examples() {
        assert_eq!(independence_number(&Graph::complete(5), &limits()).unwrap(), 1);
        let c5 = Graph::cycle(5);
        let mis = max_independent_set(&c5, &limits()).unwrap();
        assert_eq!(mis, BTreeSet::from([0, 2]));
        assert_eq!(independence_number(&Graph::new(7), &limits()).unwrap(), 7);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_partition(&Graph::complete(4), &limits()).unwrap().len(), 4);
        assert_eq!(chromatic_partition(&Graph::cycle(5), &limits()).unwrap().len(), 3);
        assert_eq!(chromatic_partition(&Graph::path(4), &limits()).unwrap().len(), 2);
        // Parts cover every vertex exactly once.
        let parts = chromatic_partition(&petersen(), &limits()).unwrap();
        assert_eq!(parts.len(), 3);
        let mut seen = BTreeSet::new();
        for part in &parts {
            for &v in part {
                assert!(seen.insert(v));
            }
        }
        assert_eq!(seen.len(), 10);
    }

    #[test]
    fn derived_oracles() {
        assert_eq!(clique_number(&Graph::cycle(5), &limits()).unwrap(), 2);
        assert_eq!(min_vertex_cover(&Graph::complete(4), &limits()).unwrap().len(), 3);
        assert_eq!(clique_cover_number(&Graph::new(6), &limits()).unwrap(), 6);
    }

    #[test]
    fn gallai_identity_small_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.gen_range(1..=10);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let alpha = independence_number(&g, &limits()).unwrap();
            let vc = min_vertex_cover(&g, &limits()).unwrap().len();
            assert_eq!(alpha + vc, n);
            let chi = chromatic_number(&g, &limits()).unwrap();
            let omega = clique_number(&g, &limits()).unwrap();
            assert!(chi >= omega);
        }
    }
}
