//! Hamiltonian Cycle under both metrics.
//!
//! `rel_ham_maxdeg` stays within max-degree 1 of the input: it reduces to a
//! maximum-matching computation and threads the matched pairs into a cycle
//! with at most one added edge per vertex. `rel_ham_edits` stays within
//! `n/3` edge edits: it grows a path greedily, lengthens it through
//! crossing-pair rotations while possible, and otherwise either threads the
//! few leftover vertices into a cycle or isolates a low-degree endpoint to
//! force a clearly negative instance.

use petgraph::algo::matching::maximum_matching;
use petgraph::graph::UnGraph;

use crate::budget::{Budget, BudgetBound};
use crate::certify::{Certificate, NegativityHint, RelAnswer};
use crate::graph::{EditSet, Graph, Instance, Metric};

use super::certified;

fn maxdeg_budget() -> Budget {
    Budget::new(Metric::MaxDegree, BudgetBound::Exactly(1))
}

fn edits_budget(n: usize) -> Budget {
    Budget::new(Metric::EdgeEdits, BudgetBound::NOver { n: n as u64, d: 3 })
}

fn answer(g: &Graph, edits: EditSet, cert: Certificate, budget: Budget) -> RelAnswer {
    let edited = edits.apply(g).expect("edits constructed against g");
    certified(RelAnswer::new(
        Instance::without_threshold(edited),
        edits,
        cert,
        budget,
    ))
}

fn unedited(g: &Graph, cert: Certificate, budget: Budget) -> RelAnswer {
    answer(g, EditSet::empty(g.n()), cert, budget)
}

/// A maximum matching of `g` as sorted `(min, max)` pairs in increasing
/// order of the smaller endpoint.
fn matching_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut pg = UnGraph::<(), ()>::new_undirected();
    let nodes: Vec<_> = (0..g.n()).map(|_| pg.add_node(())).collect();
    for (u, v) in g.edges() {
        pg.add_edge(nodes[u], nodes[v], ());
    }
    let matching = maximum_matching(&pg);
    let mut pairs: Vec<(usize, usize)> = matching
        .edges()
        .map(|(a, b)| {
            let (a, b) = (a.index(), b.index());
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    pairs
}

/// Solves the nearby-instance problem for Hamiltonian Cycle within
/// max-degree distance 1.
///
/// Branches: a disconnected graph is already negative; a graph without a
/// matching of `⌊n/2⌋` edges is already negative (a Hamiltonian cycle
/// contains one); otherwise the matched pairs `uᵢvᵢ` are chained by adding
/// the missing link edges `vᵢuᵢ₊₁` and one closing edge, so the added edges
/// form a matching and the edited graph carries the cycle
/// `(u)u₁v₁u₂v₂…uₚvₚ`.
pub fn rel_ham_maxdeg(g: &Graph) -> RelAnswer {
    let n = g.n();
    let budget = maxdeg_budget();
    match n {
        0 => return unedited(g, Certificate::CycleOrder(vec![]), budget),
        1 => return unedited(g, Certificate::CycleOrder(vec![0]), budget),
        _ => {}
    }
    if !g.is_connected() {
        return unedited(
            g,
            Certificate::Nil(Some(NegativityHint::SeparatorPair(vec![]))),
            budget,
        );
    }
    if n == 2 {
        // No simple graph on two vertices has a Hamiltonian cycle.
        return unedited(g, Certificate::Nil(None), budget);
    }
    let mut pairs = matching_pairs(g);
    if pairs.len() < n / 2 {
        return unedited(g, Certificate::Nil(None), budget);
    }

    let mut order: Vec<usize> = Vec::with_capacity(n);
    if n % 2 == 1 {
        let mut in_matching = vec![false; n];
        for &(a, b) in &pairs {
            in_matching[a] = true;
            in_matching[b] = true;
        }
        let unmatched = (0..n).find(|&v| !in_matching[v]).expect("odd leftover");
        // The graph is connected and n >= 3, so the unmatched vertex has a
        // neighbor, necessarily matched; its pair leads the chain, oriented
        // so that the chain starts at that neighbor.
        let anchor = g
            .neighbors(unmatched)
            .next()
            .expect("connected graph leaves no isolated vertex");
        let idx = pairs
            .iter()
            .position(|&(a, b)| a == anchor || b == anchor)
            .expect("anchor is matched");
        let lead = pairs.remove(idx);
        let lead = if lead.0 == anchor {
            lead
        } else {
            (lead.1, lead.0)
        };
        pairs.insert(0, lead);
        order.push(unmatched);
    }
    for &(a, b) in &pairs {
        order.push(a);
        order.push(b);
    }

    // Only every other cycle edge can be missing: pair-internal edges are
    // matching edges and the chain entry edge exists by anchor choice.
    let mut edits = EditSet::empty(n);
    for i in 0..n {
        let (u, v) = (order[i], order[(i + 1) % n]);
        if !g.has_edge(u, v) {
            edits.push_add(u, v).expect("cycle visits each vertex once");
        }
    }
    debug_assert!(edits.edit_max_degree() <= 1);
    answer(g, edits, Certificate::CycleOrder(order), budget)
}

/// Grows `path` maximally at both ends, always taking the smallest
/// neighbor outside the path.
fn extend_maximally(g: &Graph, path: &mut Vec<usize>, on_path: &mut [bool]) {
    loop {
        let tail = *path.last().expect("path is never empty");
        if let Some(v) = g.neighbors(tail).find(|&v| !on_path[v]) {
            path.push(v);
            on_path[v] = true;
            continue;
        }
        let head = path[0];
        if let Some(v) = g.neighbors(head).find(|&v| !on_path[v]) {
            path.insert(0, v);
            on_path[v] = true;
            continue;
        }
        break;
    }
}

/// Solves the nearby-instance problem for Hamiltonian Cycle within `n/3`
/// edge edits.
pub fn rel_ham_edits(g: &Graph) -> RelAnswer {
    let n = g.n();
    let budget = edits_budget(n);
    match n {
        0 => return unedited(g, Certificate::CycleOrder(vec![]), budget),
        1 => return unedited(g, Certificate::CycleOrder(vec![0]), budget),
        2 => {
            let hint = if g.is_connected() {
                None
            } else {
                Some(NegativityHint::SeparatorPair(vec![]))
            };
            return unedited(g, Certificate::Nil(hint), budget);
        }
        _ => {}
    }
    if !g.is_connected() {
        return unedited(
            g,
            Certificate::Nil(Some(NegativityHint::SeparatorPair(vec![]))),
            budget,
        );
    }

    let mut on_path = vec![false; n];
    let mut path = vec![0usize];
    on_path[0] = true;
    extend_maximally(g, &mut path, &mut on_path);

    // Each iteration either returns or lengthens the path, so this loop
    // runs at most n times.
    let mut guard = 0usize;
    loop {
        guard += 1;
        assert!(guard <= n + 1, "path growth failed to terminate");
        let h = path.len();

        if h == n {
            let mut edits = EditSet::empty(n);
            if !g.has_edge(path[0], path[n - 1]) {
                edits.push_add(path[0], path[n - 1]).unwrap();
            }
            return answer(g, edits, Certificate::CycleOrder(path), budget);
        }

        // Crossing pair: edges v₁v_{i+1} and v_iv_h turn the path into a
        // cycle on its vertex set; connectivity then yields a longer path.
        let crossing = if h >= 3 {
            (1..h).find(|&i| g.has_edge(path[0], path[i]) && g.has_edge(path[i - 1], path[h - 1]))
        } else {
            None
        };
        if let Some(i) = crossing {
            let mut cycle: Vec<usize> = path[..i].to_vec();
            cycle.extend(path[i..].iter().rev());
            // Some cycle vertex has a neighbor outside: the graph is
            // connected and h < n.
            let (pos, outside) = cycle
                .iter()
                .enumerate()
                .find_map(|(pos, &v)| {
                    g.neighbors(v).find(|&u| !on_path[u]).map(|u| (pos, u))
                })
                .expect("connected graph with h < n has an outside neighbor");
            let mut longer = Vec::with_capacity(h + 1);
            longer.push(outside);
            longer.extend(cycle[pos..].iter().copied());
            longer.extend(cycle[..pos].iter().copied());
            on_path[outside] = true;
            path = longer;
            extend_maximally(g, &mut path, &mut on_path);
            continue;
        }

        if 3 * h >= 2 * n + 3 {
            // Completion: thread the n-h leftover vertices between the path
            // ends; at most n-h+1 added edges, which is within n/3 here.
            let leftovers: Vec<usize> = (0..n).filter(|&v| !on_path[v]).collect();
            let mut cycle = path.clone();
            cycle.extend(leftovers.iter().copied());
            let mut edits = EditSet::empty(n);
            // Only the n-h+1 threading positions can need new edges; the
            // first h-1 cycle edges are path edges.
            for i in h - 1..n {
                let (u, v) = (cycle[i], cycle[(i + 1) % n]);
                if !g.has_edge(u, v) {
                    edits.push_add(u, v).unwrap();
                }
            }
            return answer(g, edits, Certificate::CycleOrder(cycle), budget);
        }

        // Negative: without a crossing, deg(v₁) + deg(v_h) <= h-1, so one
        // endpoint has degree at most ⌊(h-1)/2⌋ <= n/3; isolating it leaves
        // an isolated vertex, which no edit-free reading can make
        // Hamiltonian.
        let (head, tail) = (path[0], path[h - 1]);
        let victim = if g.degree(head) <= g.degree(tail) {
            head
        } else {
            tail
        };
        let mut edits = EditSet::empty(n);
        for u in g.neighbors(victim) {
            edits.push_del(victim, u).unwrap();
        }
        return answer(
            g,
            edits,
            Certificate::Nil(Some(NegativityHint::IsolatedVertex(victim))),
            budget,
        );
    }
}
