//! Undirected simple graphs on dense labels `0..n`, instances with an
//! optional integer threshold, signed edge-edit sets, and the two edit
//! metrics (maximum degree of the symmetric difference, and its edge count).

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors raised by graph construction and edit application.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} out of range for graph on {n} vertices")]
    OutOfRange { v: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} not present")]
    MissingEdge(usize, usize),
    #[error("vertex counts differ ({0} vs {1}); distance is infinite")]
    VertexCountMismatch(usize, usize),
    #[error("edit set conflicts: pair {{{0}, {1}}} appears as both addition and deletion")]
    ConflictingEdit(usize, usize),
    #[error("threshold {k} exceeds vertex count {n}")]
    ThresholdOutOfRange { k: usize, n: usize },
}

/// A distance value that may be infinite (vertex-set or threshold mismatch).
///
/// Derived `Ord` places every finite value below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// Returns the finite value, panicking on `Infinite`.
    pub fn finite(self) -> u64 {
        match self {
            Distance::Finite(x) => x,
            Distance::Infinite => panic!("distance is infinite"),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(x) => write!(f, "{x}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Which of the two metrics a distance or budget refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    /// Maximum degree of the symmetric-difference graph.
    MaxDegree,
    /// Number of edges of the symmetric-difference graph.
    EdgeEdits,
}

impl Metric {
    pub fn tag(self) -> &'static str {
        match self {
            Metric::MaxDegree => "maxdeg",
            Metric::EdgeEdits => "edits",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Metric> {
        match tag {
            "maxdeg" => Some(Metric::MaxDegree),
            "edits" => Some(Metric::EdgeEdits),
            _ => None,
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// An undirected simple graph with vertex set `{0, .., n-1}`.
///
/// Adjacency is kept symmetric and loop-free by construction; neighbor sets
/// iterate in increasing order, so every derived quantity is deterministic.
/// Values are immutable in normal use: algorithms produce new graphs through
/// [`EditSet::apply`] rather than mutating shared ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::OutOfRange { v: w, n: self.n });
            }
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        if !self.adj[u].contains(&v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> BTreeSet<usize> {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Flips every edge and non-edge; an involution.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    /// Connectivity; graphs on at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Number of connected components after deleting the vertices of `removed`.
    pub fn components_without(&self, removed: &BTreeSet<usize>) -> usize {
        let mut seen = vec![false; self.n];
        for &v in removed {
            if v < self.n {
                seen[v] = true;
            }
        }
        let mut components = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        components
    }

    /// The subgraph induced by `s`, relabeled to `0..s.len()`, together with
    /// the map from new labels back to the originals.
    pub fn induced(&self, s: &BTreeSet<usize>) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = s.iter().copied().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(labels.len());
        for (i, &v) in labels.iter().enumerate() {
            for &w in &self.adj[v] {
                if w > v && s.contains(&w) {
                    g.adj[i].insert(index[w]);
                    g.adj[index[w]].insert(i);
                }
            }
        }
        (g, labels)
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n).complement()
    }

    /// The path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    /// The cycle `0 - 1 - … - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "no simple cycle on fewer than 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    /// The star with center `0` and `n - 1` leaves.
    pub fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (0, v))).unwrap()
    }
}

/// A problem input: a graph plus an optional integer threshold `k ∈ [0, n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: Option<usize>,
}

impl Instance {
    pub fn new(graph: Graph, k: Option<usize>) -> Result<Instance, GraphError> {
        if let Some(k) = k {
            if k > graph.n() {
                return Err(GraphError::ThresholdOutOfRange { k, n: graph.n() });
            }
        }
        Ok(Instance { graph, k })
    }

    pub fn without_threshold(graph: Graph) -> Instance {
        Instance { graph, k: None }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// A signed set of edge edits against a fixed vertex set: `adds` are pairs to
/// insert, `dels` pairs to delete. Applying an edit set to its base graph is
/// exact: additions must be absent and deletions present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditSet {
    base_n: usize,
    adds: BTreeSet<(usize, usize)>,
    dels: BTreeSet<(usize, usize)>,
}

impl EditSet {
    pub fn empty(base_n: usize) -> EditSet {
        EditSet {
            base_n,
            adds: BTreeSet::new(),
            dels: BTreeSet::new(),
        }
    }

    pub fn new<A, D>(base_n: usize, adds: A, dels: D) -> Result<EditSet, GraphError>
    where
        A: IntoIterator<Item = (usize, usize)>,
        D: IntoIterator<Item = (usize, usize)>,
    {
        let mut e = EditSet::empty(base_n);
        for (u, v) in adds {
            e.push_add(u, v)?;
        }
        for (u, v) in dels {
            e.push_del(u, v)?;
        }
        Ok(e)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(usize, usize), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= self.base_n {
                return Err(GraphError::OutOfRange { v: w, n: self.base_n });
            }
        }
        Ok(ordered(u, v))
    }

    pub fn push_add(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let p = self.check_pair(u, v)?;
        if self.dels.contains(&p) {
            return Err(GraphError::ConflictingEdit(p.0, p.1));
        }
        if !self.adds.insert(p) {
            return Err(GraphError::DuplicateEdge(p.0, p.1));
        }
        Ok(())
    }

    pub fn push_del(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let p = self.check_pair(u, v)?;
        if self.adds.contains(&p) {
            return Err(GraphError::ConflictingEdit(p.0, p.1));
        }
        if !self.dels.insert(p) {
            return Err(GraphError::DuplicateEdge(p.0, p.1));
        }
        Ok(())
    }

    pub fn base_n(&self) -> usize {
        self.base_n
    }

    pub fn adds(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adds.iter().copied()
    }

    pub fn dels(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.dels.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.adds.is_empty() && self.dels.is_empty()
    }

    /// Total number of edited edges, i.e. `|E(G △ H)|`.
    pub fn edit_count(&self) -> u64 {
        (self.adds.len() + self.dels.len()) as u64
    }

    /// Maximum degree of the symmetric-difference graph described by the edits.
    pub fn edit_max_degree(&self) -> u64 {
        let mut deg = vec![0u64; self.base_n];
        for &(u, v) in self.adds.iter().chain(self.dels.iter()) {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// Distance under the given metric, as described by this edit set.
    pub fn distance(&self, metric: Metric) -> u64 {
        match metric {
            Metric::MaxDegree => self.edit_max_degree(),
            Metric::EdgeEdits => self.edit_count(),
        }
    }

    /// Applies the edits to `g`, producing the edited graph.
    pub fn apply(&self, g: &Graph) -> Result<Graph, GraphError> {
        if g.n() != self.base_n {
            return Err(GraphError::VertexCountMismatch(g.n(), self.base_n));
        }
        let mut h = g.clone();
        for &(u, v) in &self.dels {
            h.remove_edge(u, v)?;
        }
        for &(u, v) in &self.adds {
            h.add_edge(u, v)?;
        }
        Ok(h)
    }

    /// The same pair set read against the complement graphs: `Ḡ △ H̄ = G △ H`
    /// with additions and deletions exchanged.
    pub fn complemented(&self) -> EditSet {
        EditSet {
            base_n: self.base_n,
            adds: self.dels.clone(),
            dels: self.adds.clone(),
        }
    }
}

/// The edit set turning `g` into `h`: `adds = E(h) ∖ E(g)`, `dels = E(g) ∖ E(h)`.
pub fn symmetric_difference(g: &Graph, h: &Graph) -> Result<EditSet, GraphError> {
    if g.n() != h.n() {
        return Err(GraphError::VertexCountMismatch(g.n(), h.n()));
    }
    let mut e = EditSet::empty(g.n());
    for (u, v) in h.edges() {
        if !g.has_edge(u, v) {
            e.adds.insert((u, v));
        }
    }
    for (u, v) in g.edges() {
        if !h.has_edge(u, v) {
            e.dels.insert((u, v));
        }
    }
    Ok(e)
}

/// `|E(G △ H)|`, infinite when the vertex sets differ.
pub fn dist_edits(g: &Graph, h: &Graph) -> Distance {
    match symmetric_difference(g, h) {
        Ok(e) => Distance::Finite(e.edit_count()),
        Err(_) => Distance::Infinite,
    }
}

/// `Δ(G △ H)`, infinite when the vertex sets differ.
pub fn dist_maxdeg(g: &Graph, h: &Graph) -> Distance {
    match symmetric_difference(g, h) {
        Ok(e) => Distance::Finite(e.edit_max_degree()),
        Err(_) => Distance::Infinite,
    }
}

/// Instance distance: infinite when the thresholds differ (or only one is
/// present), otherwise the graph distance of the chosen metric.
pub fn dist_instance(a: &Instance, b: &Instance, metric: Metric) -> Distance {
    if a.k != b.k {
        return Distance::Infinite;
    }
    match metric {
        Metric::MaxDegree => dist_maxdeg(&a.graph, &b.graph),
        Metric::EdgeEdits => dist_edits(&a.graph, &b.graph),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_difference_identity_and_single_edge() {
        let k3 = Graph::complete(3);
        let e = symmetric_difference(&k3, &k3).unwrap();
        assert!(e.is_empty());

        let mut k3_minus = k3.clone();
        k3_minus.remove_edge(0, 1).unwrap();
        let e = symmetric_difference(&k3, &k3_minus).unwrap();
        assert_eq!(e.dels().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(e.adds().count(), 0);
        assert_eq!(e.apply(&k3).unwrap(), k3_minus);
    }

    #[test]
    fn symmetric_difference_rejects_mismatched_counts() {
        let g = Graph::new(3);
        let h = Graph::new(4);
        assert_eq!(
            symmetric_difference(&g, &h),
            Err(GraphError::VertexCountMismatch(3, 4))
        );
        assert_eq!(dist_edits(&g, &h), Distance::Infinite);
        assert_eq!(dist_maxdeg(&g, &h), Distance::Infinite);
    }

    #[test]
    fn dist_edits_k4_vs_c4() {
        let k4 = Graph::complete(4);
        let c4 = Graph::cycle(4);
        assert_eq!(dist_edits(&k4, &c4), Distance::Finite(2));
        assert_eq!(dist_edits(&k4, &k4), Distance::Finite(0));
    }

    #[test]
    fn dist_maxdeg_examples() {
        let k4 = Graph::complete(4);
        let mut k4_minus_pm = k4.clone();
        k4_minus_pm.remove_edge(0, 1).unwrap();
        k4_minus_pm.remove_edge(2, 3).unwrap();
        assert_eq!(dist_maxdeg(&k4, &k4_minus_pm), Distance::Finite(1));

        let star = Graph::star(6);
        let empty = Graph::new(6);
        assert_eq!(dist_maxdeg(&star, &empty), Distance::Finite(5));
        assert_eq!(dist_maxdeg(&star, &star), Distance::Finite(0));
    }

    #[test]
    fn dist_instance_threshold_rules() {
        let g = Graph::complete(4);
        let c4 = Graph::cycle(4);
        let a = Instance::new(g.clone(), Some(3)).unwrap();
        let b = Instance::new(g.clone(), Some(3)).unwrap();
        let c = Instance::new(g.clone(), Some(4)).unwrap();
        assert_eq!(dist_instance(&a, &b, Metric::EdgeEdits), Distance::Finite(0));
        assert_eq!(dist_instance(&a, &c, Metric::EdgeEdits), Distance::Infinite);
        let d = Instance::new(c4, Some(2)).unwrap();
        let e = Instance::new(g, Some(2)).unwrap();
        assert_eq!(dist_instance(&e, &d, Metric::EdgeEdits), Distance::Finite(2));
    }

    #[test]
    fn complement_involution_and_k4() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.complement(), Graph::new(4));
        let c5 = Graph::cycle(5);
        assert_eq!(c5.complement().complement(), c5);
    }

    #[test]
    fn c5_is_self_complementary() {
        // Exhaustive permutation check of the isomorphism.
        let c5 = Graph::cycle(5);
        let cc = c5.complement();
        let mut perm = [0usize, 1, 2, 3, 4];
        let mut found = false;
        permute(&mut perm, 0, &mut |p| {
            let ok = c5
                .edges()
                .all(|(u, v)| cc.has_edge(p[u], p[v]))
                && c5.edge_count() == cc.edge_count();
            found |= ok;
        });
        assert!(found, "C5 should be isomorphic to its complement");
    }

    fn permute(p: &mut [usize; 5], i: usize, f: &mut impl FnMut(&[usize; 5])) {
        if i == p.len() {
            f(p);
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            permute(p, i + 1, f);
            p.swap(i, j);
        }
    }

    #[test]
    fn edit_set_invariants() {
        let mut e = EditSet::empty(4);
        e.push_add(0, 1).unwrap();
        assert_eq!(e.push_del(1, 0), Err(GraphError::ConflictingEdit(0, 1)));
        assert_eq!(e.push_add(2, 2), Err(GraphError::SelfLoop(2)));
        e.push_del(2, 3).unwrap();
        let g = Graph::from_edges(4, [(2, 3), (1, 2)]).unwrap();
        let h = e.apply(&g).unwrap();
        assert!(h.has_edge(0, 1) && !h.has_edge(2, 3) && h.has_edge(1, 2));
        // Deleting an absent edge is an application error.
        let g2 = Graph::new(4);
        assert!(e.apply(&g2).is_err());
    }

    #[test]
    fn instance_threshold_bounds() {
        let g = Graph::new(3);
        assert!(Instance::new(g.clone(), Some(3)).is_ok());
        assert_eq!(
            Instance::new(g, Some(4)),
            Err(GraphError::ThresholdOutOfRange { k: 4, n: 3 })
        );
    }

    #[test]
    fn components_without_counts() {
        let mut g = Graph::path(5);
        assert_eq!(g.components_without(&BTreeSet::new()), 1);
        assert_eq!(g.components_without(&BTreeSet::from([2])), 2);
        g.remove_edge(1, 2).unwrap();
        assert_eq!(g.components_without(&BTreeSet::new()), 2);
    }
}
