//! Clique blow-up for Dominating Set: each source vertex becomes a clique
//! of size `q`, cliques of adjacent vertices are fully joined, and the
//! threshold carries over. Since `q = 2⌊n^{1-β}⌋ + 1`, any `⌊n^{1-β}⌋`
//! deletions leave an untouched representative in every clique, which is
//! what [`lift_dominating_set`] picks.

use std::collections::BTreeSet;

use num::rational::Ratio;

use crate::graph::{symmetric_difference, Graph, Instance};

use super::{floor_pow, solve_q_fixed_point, GenError, QVariant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupMeta {
    pub q: usize,
    /// Absent when the clique size was pinned directly.
    pub beta: Option<Ratio<u64>>,
    /// Deletions tolerated by [`lift_dominating_set`]: `(q-1)/2`, or the
    /// exact `⌊n^{1-β}⌋` when beta is known.
    pub edit_budget: usize,
    pub source: Graph,
}

impl BlowupMeta {
    pub fn n(&self) -> usize {
        self.q * self.source.n()
    }

    /// The clique replacing source vertex `v`.
    pub fn clique(&self, v: usize) -> std::ops::Range<usize> {
        v * self.q..(v + 1) * self.q
    }

    /// The source vertex whose clique contains `x`.
    pub fn source_of(&self, x: usize) -> usize {
        x / self.q
    }

    pub fn rebuild(&self) -> Graph {
        let nu = self.source.n();
        let mut g = Graph::new(self.n());
        for v in 0..nu {
            let cv: Vec<usize> = self.clique(v).collect();
            for (i, &x) in cv.iter().enumerate() {
                for &y in &cv[i + 1..] {
                    g.add_edge(x, y).unwrap();
                }
            }
        }
        for (u, v) in self.source.edges() {
            for x in self.clique(u) {
                for y in self.clique(v) {
                    g.add_edge(x, y).unwrap();
                }
            }
        }
        g
    }
}

/// Blow-up with the clique size pinned directly (used by small-scale
/// robustness tests); tolerance is `(q-1)/2` deletions.
pub fn gen_domset_blowup_with_q(
    h: &Graph,
    k: usize,
    q: usize,
) -> Result<(Instance, BlowupMeta), GenError> {
    if h.n() == 0 {
        return Err(GenError::EmptySource);
    }
    if k > h.n() {
        return Err(GenError::ThresholdTooLarge { k, nu: h.n() });
    }
    assert!(q >= 1);
    let meta = BlowupMeta {
        q,
        beta: None,
        edit_budget: (q - 1) / 2,
        source: h.clone(),
    };
    let inst = Instance::new(meta.rebuild(), Some(k)).expect("k <= nu <= q*nu");
    Ok((inst, meta))
}

/// Blow-up with `q` resolved from `q = 2⌊n^{1-β}⌋ + 1`; the instance keeps
/// the source threshold.
pub fn gen_domset_blowup(
    h: &Graph,
    k: usize,
    beta: Ratio<u64>,
) -> Result<(Instance, BlowupMeta), GenError> {
    if h.n() == 0 {
        return Err(GenError::EmptySource);
    }
    let q = solve_q_fixed_point(h.n(), h.edge_count(), beta, QVariant::Blowup)?;
    let (inst, mut meta) = gen_domset_blowup_with_q(h, k, q)?;
    let n = inst.n();
    let budget = floor_pow(n, *beta.denom() - *beta.numer(), *beta.denom());
    debug_assert!(2 * budget + 1 <= q);
    meta.beta = Some(beta);
    meta.edit_budget = budget;
    Ok((inst, meta))
}

/// Lifts a dominating set of the source to the edited blow-up: for each
/// chosen source vertex, the smallest clique representative not incident
/// to any deleted edge. Sound whenever at most `meta.edit_budget` edges
/// were deleted, since `q ≥ 2·budget + 1` leaves an untouched vertex per
/// clique.
pub fn lift_dominating_set(
    s_h: &BTreeSet<usize>,
    g_prime: &Graph,
    meta: &BlowupMeta,
) -> Result<BTreeSet<usize>, GenError> {
    let h = &meta.source;
    // Premise: s_h dominates the source.
    let mut dominated = vec![false; h.n()];
    for &v in s_h {
        if v >= h.n() {
            return Err(GenError::NotDominating);
        }
        dominated[v] = true;
        for u in h.neighbors(v) {
            dominated[u] = true;
        }
    }
    if !dominated.into_iter().all(|d| d) {
        return Err(GenError::NotDominating);
    }
    // Premise: only deletions, within tolerance.
    let original = meta.rebuild();
    let diff = symmetric_difference(&original, g_prime)
        .map_err(|_| GenError::InvalidCopyPath("vertex count mismatch".to_string()))?;
    if diff.adds().count() > 0 {
        return Err(GenError::UnexpectedAdditions);
    }
    let dels: Vec<(usize, usize)> = diff.dels().collect();
    if dels.len() > meta.edit_budget {
        return Err(GenError::TooManyDeletions {
            found: dels.len(),
            budget: meta.edit_budget,
        });
    }
    let mut touched = vec![false; original.n()];
    for (x, y) in dels {
        touched[x] = true;
        touched[y] = true;
    }
    let mut lifted = BTreeSet::new();
    for &v in s_h {
        let x = meta
            .clique(v)
            .find(|&x| !touched[x])
            .ok_or(GenError::NoUntouchedVertex(v))?;
        lifted.insert(x);
    }
    Ok(lifted)
}
