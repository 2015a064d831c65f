//! Chained-copy Hamiltonicity gadgets.
//!
//! From a subcubic source graph `H` with two degree-1 terminals `s, t`, the
//! builder chains `copies` blocks in a ring (the exit junction of one block
//! is the entry junction of the next), expands every interior vertex `u`
//! into a clique `C_u`, and joins a connector vertex `x_uv` to both cliques
//! of every interior edge `uv`. Junctions attach to the cliques of the
//! terminals' unique neighbors. The point of the cliques: any few edge
//! deletions leave every `C_u` Hamiltonian by Ore's condition, so an `s`–`t`
//! Hamiltonian path of `H` can be mimicked copy by copy even after
//! deletions; conversely the connectors separate so strongly that a
//! Hamiltonian cycle of one block forces an `s`–`t` Hamiltonian path of `H`.

use std::collections::{BTreeMap, BTreeSet};

use num::rational::Ratio;

use crate::graph::{symmetric_difference, Graph};

use super::{solve_q_fixed_point, vertex_count, GenError, QVariant};

/// What a gadget vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Entry junction of copy `copy` (equally the exit junction of the
    /// previous copy in the ring).
    Junction { copy: usize },
    /// Member of clique `C_source` in copy `copy`.
    CliqueVertex {
        copy: usize,
        source: usize,
        slot: usize,
    },
    /// Connector `x_{uv}` of interior source edge `(u, v)` in copy `copy`.
    Connector { copy: usize, edge: (usize, usize) },
}

/// Layout metadata of a generated gadget; everything needed to recover
/// roles, rebuild the graph, and run reconstruction/extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamGadgetMeta {
    pub q: usize,
    pub beta: Ratio<u64>,
    pub copies: usize,
    pub clique_size: usize,
    /// Deletions tolerated by [`reconstruct_ham_cycle`].
    pub edit_budget: usize,
    pub source: Graph,
    pub s: usize,
    pub t: usize,
    /// Interior (non-terminal) source vertices, sorted.
    interior: Vec<usize>,
    /// Interior source edges (neither endpoint terminal), sorted.
    inner_edges: Vec<(usize, usize)>,
    interior_index: BTreeMap<usize, usize>,
    inner_edge_index: BTreeMap<(usize, usize), usize>,
}

impl HamGadgetMeta {
    fn per_copy(&self) -> usize {
        self.interior.len() * self.clique_size + self.inner_edges.len()
    }

    pub fn n(&self) -> usize {
        self.copies + self.copies * self.per_copy()
    }

    /// The entry junction of copy `i` (`s_i`); the exit junction `t_i` is
    /// `junction((i + 1) % copies)`.
    pub fn junction(&self, copy: usize) -> usize {
        copy % self.copies
    }

    fn block_start(&self, copy: usize) -> usize {
        self.copies + copy * self.per_copy()
    }

    /// Vertices of clique `C_u` in the given copy.
    pub fn clique(&self, copy: usize, source: usize) -> Vec<usize> {
        let j = self.interior_index[&source];
        let start = self.block_start(copy) + j * self.clique_size;
        (start..start + self.clique_size).collect()
    }

    /// The connector vertex of interior source edge `{u, v}` in a copy.
    pub fn connector(&self, copy: usize, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.block_start(copy) + self.interior.len() * self.clique_size + self.inner_edge_index[&key]
    }

    pub fn role(&self, v: usize) -> Role {
        if v < self.copies {
            return Role::Junction { copy: v };
        }
        let rel = v - self.copies;
        let copy = rel / self.per_copy();
        let offset = rel % self.per_copy();
        let clique_span = self.interior.len() * self.clique_size;
        if offset < clique_span {
            Role::CliqueVertex {
                copy,
                source: self.interior[offset / self.clique_size],
                slot: offset % self.clique_size,
            }
        } else {
            Role::Connector {
                copy,
                edge: self.inner_edges[offset - clique_span],
            }
        }
    }

    /// The terminals' unique neighbors `s'` and `t'` in the source.
    pub fn terminal_neighbors(&self) -> (usize, usize) {
        let s_prime = self.source.neighbors(self.s).next().expect("deg(s) = 1");
        let t_prime = self.source.neighbors(self.t).next().expect("deg(t) = 1");
        (s_prime, t_prime)
    }

    /// Regenerates the gadget graph from the layout.
    pub fn rebuild(&self) -> Graph {
        let mut g = Graph::new(self.n());
        let (s_prime, t_prime) = self.terminal_neighbors();
        for copy in 0..self.copies {
            for &u in &self.interior {
                let cv = self.clique(copy, u);
                for (i, &x) in cv.iter().enumerate() {
                    for &y in &cv[i + 1..] {
                        g.add_edge(x, y).unwrap();
                    }
                }
            }
            for &(u, v) in &self.inner_edges {
                let x = self.connector(copy, u, v);
                for side in [u, v] {
                    for y in self.clique(copy, side) {
                        g.add_edge(x, y).unwrap();
                    }
                }
            }
            let entry = self.junction(copy);
            for y in self.clique(copy, s_prime) {
                g.add_edge(entry, y).unwrap();
            }
            let exit = self.junction(copy + 1);
            for y in self.clique(copy, t_prime) {
                g.add_edge(exit, y).unwrap();
            }
        }
        g
    }
}

fn validate_source(h: &Graph, s: usize, t: usize) -> Result<(), GenError> {
    if h.max_degree() > 3 {
        return Err(GenError::NotSubcubic(h.max_degree()));
    }
    if s >= h.n() || t >= h.n() || s == t || h.n() < 3 || h.has_edge(s, t) {
        return Err(GenError::BadEndpoints);
    }
    for v in [s, t] {
        if h.degree(v) != 1 {
            return Err(GenError::BadEndpoint(v));
        }
    }
    Ok(())
}

fn build(
    h: &Graph,
    s: usize,
    t: usize,
    beta: Ratio<u64>,
    q: usize,
    copies: usize,
    clique_size: usize,
    edit_budget: usize,
) -> (Graph, HamGadgetMeta) {
    let interior: Vec<usize> = (0..h.n()).filter(|&v| v != s && v != t).collect();
    let inner_edges: Vec<(usize, usize)> = h
        .edges()
        .filter(|&(u, v)| u != s && u != t && v != s && v != t)
        .collect();
    let interior_index = interior.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let inner_edge_index = inner_edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let meta = HamGadgetMeta {
        q,
        beta,
        copies,
        clique_size,
        edit_budget,
        source: h.clone(),
        s,
        t,
        interior,
        inner_edges,
        interior_index,
        inner_edge_index,
    };
    (meta.rebuild(), meta)
}

/// Generates the many-copy robust gadget: `2q` chained copies with cliques
/// of size `q+2`, where `q` resolves `q = ⌊n^{1/2-β}⌋ + 1`. Up to `q-1`
/// edge deletions are tolerated by reconstruction.
pub fn gen_ham_robust(
    h: &Graph,
    s: usize,
    t: usize,
    beta: Ratio<u64>,
) -> Result<(Graph, HamGadgetMeta), GenError> {
    validate_source(h, s, t)?;
    let q = solve_q_fixed_point(h.n(), h.edge_count(), beta, QVariant::RobustHam)?;
    let out = build(h, s, t, beta, q, 2 * q, q + 2, q.saturating_sub(1));
    debug_assert_eq!(
        out.0.n(),
        vertex_count(QVariant::RobustHam, h.n(), h.edge_count(), q)
    );
    Ok(out)
}

/// Generates the two-copy variant with cliques of size
/// `q = ⌊n^{1-β}⌋ + 3`; its Ore slack tolerates `q-3` deletions.
pub fn gen_barrier(
    h: &Graph,
    s: usize,
    t: usize,
    beta: Ratio<u64>,
) -> Result<(Graph, HamGadgetMeta), GenError> {
    validate_source(h, s, t)?;
    let q = solve_q_fixed_point(h.n(), h.edge_count(), beta, QVariant::Barrier)?;
    let out = build(h, s, t, beta, q, 2, q, q.saturating_sub(3));
    debug_assert_eq!(
        out.0.n(),
        vertex_count(QVariant::Barrier, h.n(), h.edge_count(), q)
    );
    Ok(out)
}

/// Robust construction with `q` pinned directly rather than resolved from
/// `beta`; tolerance stays `q-1` deletions.
pub fn gen_ham_robust_with_q(
    h: &Graph,
    s: usize,
    t: usize,
    q: usize,
) -> Result<(Graph, HamGadgetMeta), GenError> {
    validate_source(h, s, t)?;
    Ok(build(
        h,
        s,
        t,
        Ratio::new(1, 4),
        q,
        2 * q,
        q + 2,
        q.saturating_sub(1),
    ))
}

/// Builds a Hamiltonian cycle of a graph satisfying Ore's condition (every
/// non-adjacent pair has degree sum at least `n`), by the classical
/// rotation method: start from the identity cyclic order and repeatedly
/// exchange a crossing pair, which strictly decreases the number of
/// consecutive non-edges. The condition is checked up front.
pub fn ore_hamiltonian_cycle(g: &Graph) -> Result<Vec<usize>, GenError> {
    let n = g.n();
    if n < 3 {
        return Err(GenError::OreConditionViolated(format!(
            "need at least 3 vertices, got {n}"
        )));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && g.degree(u) + g.degree(v) < n {
                return Err(GenError::OreConditionViolated(format!(
                    "deg({u}) + deg({v}) = {} < {n}",
                    g.degree(u) + g.degree(v)
                )));
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    // Each exchange strictly reduces the non-edge count, so at most C(n,2)
    // rounds happen.
    let mut rounds = 0usize;
    loop {
        rounds += 1;
        assert!(rounds <= n * n + 2, "rotation failed to converge");
        let gap = (0..n).find(|&i| !g.has_edge(order[i], order[(i + 1) % n]));
        let Some(i) = gap else {
            return Ok(order);
        };
        order.rotate_left(i);
        // Non-adjacent u = order[0], w = order[1]: Ore guarantees k with
        // order[k] ~ u and order[k+1] ~ w; reversing 1..=k mends the gap.
        let u = order[0];
        let w = order[1];
        let k = (2..n - 1)
            .find(|&k| g.has_edge(order[k], u) && g.has_edge(order[(k + 1) % n], w))
            .expect("Ore's condition yields a crossing pair");
        order[1..=k].reverse();
    }
}

/// A spanning path of `clique ∪ {absorb?}` inside `g_minus`, starting at a
/// neighbor of `entry` and ending at a neighbor of `exit`: an Ore cycle of
/// the clique remainder, split at a consecutive pair attachable to both
/// ends.
fn span_clique(
    g_minus: &Graph,
    clique: &[usize],
    entry: usize,
    exit: usize,
    absorb: Option<usize>,
) -> Result<Vec<usize>, GenError> {
    let mut members: Vec<usize> = clique.to_vec();
    if let Some(x) = absorb {
        members.push(x);
    }
    let set: BTreeSet<usize> = members.iter().copied().collect();
    let (induced, labels) = g_minus.induced(&set);
    let local_cycle = ore_hamiltonian_cycle(&induced)?;
    let cycle: Vec<usize> = local_cycle.into_iter().map(|v| labels[v]).collect();
    let len = cycle.len();
    for p in 0..len {
        let a = cycle[p];
        let b = cycle[(p + 1) % len];
        // Walk the long way around: from a backwards, or from b forwards.
        if g_minus.has_edge(entry, a) && g_minus.has_edge(exit, b) {
            let path: Vec<usize> = (0..len).map(|off| cycle[(p + len - off) % len]).collect();
            return Ok(path);
        }
        if g_minus.has_edge(entry, b) && g_minus.has_edge(exit, a) {
            let path: Vec<usize> = (0..len).map(|off| cycle[(p + 1 + off) % len]).collect();
            return Ok(path);
        }
    }
    Err(GenError::SpanFailed(format!(
        "no attachable consecutive pair between {entry} and {exit}"
    )))
}

fn validate_source_path(meta: &HamGadgetMeta, p_h: &[usize]) -> Result<(), GenError> {
    let h = &meta.source;
    let bad = |msg: &str| Err(GenError::InvalidSourcePath(msg.to_string()));
    if p_h.len() != h.n() {
        return bad("path must visit every source vertex exactly once");
    }
    let mut seen = vec![false; h.n()];
    for &v in p_h {
        if v >= h.n() || seen[v] {
            return bad("repeated or out-of-range vertex");
        }
        seen[v] = true;
    }
    if p_h[0] != meta.s || p_h[p_h.len() - 1] != meta.t {
        return bad("path must run from s to t");
    }
    for w in p_h.windows(2) {
        if !h.has_edge(w[0], w[1]) {
            return bad("consecutive vertices must be adjacent in the source");
        }
    }
    Ok(())
}

/// Rebuilds a Hamiltonian cycle of `g_minus`, a gadget graph with at most
/// `meta.edit_budget` edges deleted, by mimicking the source's `s`–`t`
/// Hamiltonian path in every copy. While crossing clique `C_u`, the
/// connector of `u`'s third source edge is swallowed into the spanning
/// path at its first opportunity, so every connector is visited once.
pub fn reconstruct_ham_cycle(
    g_minus: &Graph,
    meta: &HamGadgetMeta,
    p_h: &[usize],
) -> Result<Vec<usize>, GenError> {
    let original = meta.rebuild();
    let diff = symmetric_difference(&original, g_minus).map_err(|_| {
        GenError::InvalidCopyPath("edited graph has a different vertex count".to_string())
    })?;
    if diff.adds().count() > 0 {
        return Err(GenError::UnexpectedAdditions);
    }
    let deleted = diff.dels().count();
    if deleted > meta.edit_budget {
        return Err(GenError::TooManyDeletions {
            found: deleted,
            budget: meta.edit_budget,
        });
    }
    validate_source_path(meta, p_h)?;

    let steps = &p_h[1..p_h.len() - 1]; // interior vertices in path order
    let mut visited_connectors: BTreeSet<usize> = BTreeSet::new();
    let mut cycle: Vec<usize> = Vec::with_capacity(meta.n());
    for copy in 0..meta.copies {
        cycle.push(meta.junction(copy));
        for (j, &u) in steps.iter().enumerate() {
            let prev = p_h[j]; // predecessor of u on the path
            let next = p_h[j + 2]; // successor of u on the path
            let entry = if j == 0 {
                meta.junction(copy)
            } else {
                meta.connector(copy, prev, u)
            };
            let exit = if j + 1 == steps.len() {
                meta.junction(copy + 1)
            } else {
                meta.connector(copy, u, next)
            };
            // A subcubic interior vertex has at most one neighbor besides
            // its path predecessor and successor.
            let absorb = meta
                .source
                .neighbors(u)
                .find(|&y| y != prev && y != next)
                .filter(|&y| y != meta.s && y != meta.t)
                .map(|y| meta.connector(copy, u, y))
                .filter(|x| !visited_connectors.contains(x));
            let clique = meta.clique(copy, u);
            let segment = span_clique(g_minus, &clique, entry, exit, absorb)?;
            if let Some(x) = absorb {
                visited_connectors.insert(x);
            }
            cycle.extend(segment);
            if j + 1 != steps.len() {
                visited_connectors.insert(exit);
                cycle.push(exit);
            }
        }
    }
    debug_assert_eq!(cycle.len(), meta.n());
    Ok(cycle)
}

/// Reads an `s`–`t` Hamiltonian path of the source off a Hamiltonian path
/// of one copy (running junction to junction), as the first-visit order of
/// the cliques. The result is checked edge by edge against the source; a
/// failure means the premise (a valid one-copy path) was violated.
pub fn extract_st_path(
    p: &[usize],
    copy: usize,
    meta: &HamGadgetMeta,
) -> Result<Vec<usize>, GenError> {
    let bad = |msg: String| Err(GenError::InvalidCopyPath(msg));
    let expected_len = meta.per_copy() + 2;
    if p.len() != expected_len {
        return bad(format!(
            "copy path must have {expected_len} vertices, got {}",
            p.len()
        ));
    }
    if p[0] != meta.junction(copy) || p[p.len() - 1] != meta.junction(copy + 1) {
        return bad("path must run from the copy's entry junction to its exit".to_string());
    }
    let mut seen = BTreeSet::new();
    let mut clique_order: Vec<usize> = Vec::new();
    let mut seen_sources = BTreeSet::new();
    for &v in &p[1..p.len() - 1] {
        if !seen.insert(v) {
            return bad("repeated vertex".to_string());
        }
        match meta.role(v) {
            Role::CliqueVertex { copy: c, source, .. } if c == copy => {
                if seen_sources.insert(source) {
                    clique_order.push(source);
                }
            }
            Role::Connector { copy: c, .. } if c == copy => {}
            other => {
                return bad(format!("vertex {v} ({other:?}) is not interior to copy {copy}"));
            }
        }
    }
    let mut path = Vec::with_capacity(meta.source.n());
    path.push(meta.s);
    path.extend(clique_order);
    path.push(meta.t);
    if path.len() != meta.source.n() {
        return bad("path does not visit every source clique".to_string());
    }
    for w in path.windows(2) {
        if !meta.source.has_edge(w[0], w[1]) {
            return Err(GenError::InvalidCopyPath(format!(
                "extracted pair ({}, {}) is not a source edge",
                w[0], w[1]
            )));
        }
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{verify_certificate, Certificate};
    use crate::graph::Instance;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Path source: s - a - b - … - t.
    fn path_source(nu: usize) -> (Graph, usize, usize, Vec<usize>) {
        let h = Graph::path(nu);
        let p: Vec<usize> = (0..nu).collect();
        (h, 0, nu - 1, p)
    }

    /// Source with a chord: s-a-b-c-d-t plus the non-path edge a-c.
    fn chord_source() -> (Graph, usize, usize, Vec<usize>) {
        let h =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3)]).unwrap();
        (h, 0, 5, vec![0, 1, 2, 3, 4, 5])
    }

    #[test]
    fn vertex_count_formula_robust() {
        // nu = 4, m = 3, q = 2: n = 2q((nu-2)(q+2) + m - 1) = 4(2*4+2) = 40.
        let (h, s, t, _) = path_source(4);
        let (g, meta) = gen_ham_robust_with_q(&h, s, t, 2).unwrap();
        assert_eq!(g.n(), 40);
        assert_eq!(meta.n(), 40);
    }

    #[test]
    fn structural_degrees() {
        let (h, s, t, _) = chord_source();
        let (g, meta) = gen_ham_robust_with_q(&h, s, t, 2).unwrap();
        let q = meta.q;
        for v in 0..g.n() {
            match meta.role(v) {
                Role::Junction { .. } => assert_eq!(g.degree(v), 2 * (q + 2)),
                Role::Connector { .. } => assert_eq!(g.degree(v), 2 * (q + 2)),
                Role::CliqueVertex { .. } => {}
            }
        }
        assert!(g.is_connected());
    }

    #[test]
    fn roles_are_a_bijection() {
        let (h, s, t, _) = chord_source();
        let (g, meta) = gen_ham_robust_with_q(&h, s, t, 2).unwrap();
        let mut cliques: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut junctions = 0;
        let mut connectors = 0;
        for v in 0..g.n() {
            match meta.role(v) {
                Role::Junction { .. } => junctions += 1,
                Role::Connector { .. } => connectors += 1,
                Role::CliqueVertex { copy, source, .. } => {
                    *cliques.entry((copy, source)).or_default() += 1
                }
            }
        }
        assert_eq!(junctions, meta.copies);
        assert_eq!(connectors, meta.copies * 4); // chord source has m - 2 = 4 inner edges
        assert!(cliques.values().all(|&c| c == meta.clique_size));
        // And the accessors invert role().
        for copy in 0..meta.copies {
            for &u in &[1usize, 2, 3, 4] {
                for (slot, &v) in meta.clique(copy, u).iter().enumerate() {
                    assert_eq!(
                        meta.role(v),
                        Role::CliqueVertex { copy, source: u, slot }
                    );
                }
            }
        }
    }

    #[test]
    fn ore_cycle_on_dense_graphs() {
        let k5 = Graph::complete(5);
        let c = ore_hamiltonian_cycle(&k5).unwrap();
        let inst = Instance::without_threshold(k5);
        assert_eq!(
            verify_certificate(
                crate::certify::Problem::HamiltonianCycle,
                &inst,
                &Certificate::CycleOrder(c)
            ),
            Ok(true)
        );

        // K6 minus a perfect matching: degree sums of non-adjacent pairs
        // are 8 >= 6.
        let mut g = Graph::complete(6);
        for i in 0..3 {
            g.remove_edge(2 * i, 2 * i + 1).unwrap();
        }
        let c = ore_hamiltonian_cycle(&g).unwrap();
        let inst = Instance::without_threshold(g);
        assert_eq!(
            verify_certificate(
                crate::certify::Problem::HamiltonianCycle,
                &inst,
                &Certificate::CycleOrder(c)
            ),
            Ok(true)
        );

        // Star violates the condition.
        assert!(matches!(
            ore_hamiltonian_cycle(&Graph::star(5)),
            Err(GenError::OreConditionViolated(_))
        ));
    }

    #[test]
    fn ore_cycle_on_damaged_cliques() {
        // K_{q+2} minus up to q-1 arbitrary edges stays Hamiltonian.
        let q = 4;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let mut g = Graph::complete(q + 2);
            let mut edges: Vec<(usize, usize)> = g.edges().collect();
            edges.shuffle(&mut rng);
            for &(u, v) in edges.iter().take(q - 1) {
                g.remove_edge(u, v).unwrap();
            }
            let c = ore_hamiltonian_cycle(&g).unwrap();
            let inst = Instance::without_threshold(g);
            assert_eq!(
                verify_certificate(
                    crate::certify::Problem::HamiltonianCycle,
                    &inst,
                    &Certificate::CycleOrder(c)
                ),
                Ok(true)
            );
        }
    }

    fn assert_ham_cycle(g: &Graph, cycle: &[usize]) {
        let inst = Instance::without_threshold(g.clone());
        assert_eq!(
            verify_certificate(
                crate::certify::Problem::HamiltonianCycle,
                &inst,
                &Certificate::CycleOrder(cycle.to_vec())
            ),
            Ok(true),
            "reconstructed cycle invalid"
        );
    }

    #[test]
    fn reconstruct_without_deletions() {
        for (h, s, t, p) in [path_source(4), path_source(5), chord_source()] {
            let (g, meta) = gen_ham_robust_with_q(&h, s, t, 2).unwrap();
            let cycle = reconstruct_ham_cycle(&g, &meta, &p).unwrap();
            assert_ham_cycle(&g, &cycle);
        }
    }

    #[test]
    fn reconstruct_under_random_deletions() {
        let (h, s, t, p) = chord_source();
        let (g, meta) = gen_ham_robust_with_q(&h, s, t, 3).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..60 {
            let mut g_minus = g.clone();
            let mut pool = edges.clone();
            pool.shuffle(&mut rng);
            for &(u, v) in pool.iter().take(meta.edit_budget) {
                g_minus.remove_edge(u, v).unwrap();
            }
            let cycle = reconstruct_ham_cycle(&g_minus, &meta, &p).unwrap();
            assert_ham_cycle(&g_minus, &cycle);
        }
    }

    #[test]
    fn reconstruct_under_connector_targeted_deletions() {
        // Deleting connector-clique edges still leaves an attachment pair.
        let (h, s, t, p) = chord_source();
        let (g, meta) = gen_ham_robust_with_q(&h, s, t, 2).unwrap();
        let x = meta.connector(0, 1, 2);
        let mut g_minus = g.clone();
        let neighbor = g.neighbors(x).next().unwrap();
        g_minus.remove_edge(x, neighbor).unwrap();
        let cycle = reconstruct_ham_cycle(&g_minus, &meta, &p).unwrap();
        assert_ham_cycle(&g_minus, &cycle);
    }

    #[test]
    fn reconstruct_rejects_over_budget() {
        let (h, s, t, p) = path_source(4);
        let (g, meta) = gen_ham_robust_with_q(&h, s, t, 2).unwrap();
        let mut g_minus = g.clone();
        let dels: Vec<(usize, usize)> = g.edges().take(meta.edit_budget + 1).collect();
        for (u, v) in dels {
            g_minus.remove_edge(u, v).unwrap();
        }
        assert!(matches!(
            reconstruct_ham_cycle(&g_minus, &meta, &p),
            Err(GenError::TooManyDeletions { .. })
        ));
    }

    #[test]
    fn extraction_round_trip() {
        let (h, s, t, p) = chord_source();
        let (g, meta) = gen_ham_robust_with_q(&h, s, t, 2).unwrap();
        let cycle = reconstruct_ham_cycle(&g, &meta, &p).unwrap();
        // Slice out copy 0: junction(0) … junction(1).
        let start = cycle.iter().position(|&v| v == meta.junction(0)).unwrap();
        assert_eq!(start, 0);
        let end = cycle.iter().position(|&v| v == meta.junction(1)).unwrap();
        let copy_path: Vec<usize> = cycle[..=end].to_vec();
        let extracted = extract_st_path(&copy_path, 0, &meta).unwrap();
        assert_eq!(extracted, p);
        let (s_prime, t_prime) = meta.terminal_neighbors();
        assert_eq!(extracted[1], s_prime);
        assert_eq!(extracted[extracted.len() - 2], t_prime);
    }

    #[test]
    fn extraction_rejects_teleporting_paths() {
        let (h, s, t, p) = path_source(4);
        let (g, meta) = gen_ham_robust_with_q(&h, s, t, 2).unwrap();
        let cycle = reconstruct_ham_cycle(&g, &meta, &p).unwrap();
        let end = cycle.iter().position(|&v| v == meta.junction(1)).unwrap();
        let mut copy_path: Vec<usize> = cycle[..=end].to_vec();
        // Swap two interior vertices from different cliques to break the
        // clique-contiguity the separator argument enforces.
        let a = 1;
        let b = copy_path.len() - 2;
        copy_path.swap(a, b);
        assert!(extract_st_path(&copy_path, 0, &meta).is_err());
    }
}
