//! Gadget-level integration: the two-copy variant end to end, and
//! extraction soundness against oracle-found copy paths (independent of
//! the reconstruction machinery).

use num::rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use relgraph::certify::{verify_certificate, Certificate, Problem};
use relgraph::generators::{
    extract_st_path, gen_barrier, reconstruct_ham_cycle, HamGadgetMeta, Role,
};
use relgraph::graph::{Graph, Instance};
use relgraph::oracles::{self, OracleLimits};

fn p4_source() -> (Graph, usize, usize, Vec<usize>) {
    (Graph::path(4), 0, 3, vec![0, 1, 2, 3])
}

#[test]
fn barrier_on_p4_resolves_q5_n24() {
    // 1 - beta = 3/10 on the 4-path: q = 5 is the fixed point, giving
    // n = 2((nu-2)q + m - 1) = 2(2*5 + 2) = 24.
    let (h, s, t, _) = p4_source();
    let (g, meta) = gen_barrier(&h, s, t, Ratio::new(7, 10)).unwrap();
    assert_eq!(meta.q, 5);
    assert_eq!(g.n(), 24);
    assert_eq!(meta.copies, 2);
    assert_eq!(meta.clique_size, 5);
    assert_eq!(meta.edit_budget, 2);
}

#[test]
fn barrier_reconstruction_within_tolerance() {
    let (h, s, t, p) = p4_source();
    let (g, meta) = gen_barrier(&h, s, t, Ratio::new(7, 10)).unwrap();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..100 {
        let mut g_minus = g.clone();
        let mut pool = edges.clone();
        pool.shuffle(&mut rng);
        for &(u, v) in pool.iter().take(meta.edit_budget) {
            g_minus.remove_edge(u, v).unwrap();
        }
        let cycle = reconstruct_ham_cycle(&g_minus, &meta, &p).unwrap();
        let inst = Instance::without_threshold(g_minus);
        assert_eq!(
            verify_certificate(
                Problem::HamiltonianCycle,
                &inst,
                &Certificate::CycleOrder(cycle)
            ),
            Ok(true)
        );
    }
}

/// The vertex set of one copy: its two junctions plus its cliques and
/// connectors.
fn copy_vertices(meta: &HamGadgetMeta, copy: usize) -> Vec<usize> {
    let mut vs = vec![meta.junction(copy), meta.junction(copy + 1)];
    for v in 0..meta.n() {
        match meta.role(v) {
            Role::CliqueVertex { copy: c, .. } | Role::Connector { copy: c, .. } if c == copy => {
                vs.push(v)
            }
            _ => {}
        }
    }
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// An oracle-found junction-to-junction Hamiltonian path of one copy is
/// found by wiring an auxiliary vertex to both junctions and asking the
/// cycle oracle; extraction of that path must yield an edge-valid s-t
/// Hamiltonian path of the source.
#[test]
fn extraction_is_sound_on_oracle_found_paths() {
    let (h, s, t, p_expected) = p4_source();
    let (g, meta) = relgraph::generators::gen_ham_robust_with_q(&h, s, t, 2).unwrap();
    let copy = 0usize;
    let vs = copy_vertices(&meta, copy);
    let index_of = |v: usize| vs.binary_search(&v).unwrap();
    // Local graph plus one auxiliary vertex joined to the two junctions.
    let mut local = Graph::new(vs.len() + 1);
    for (i, &u) in vs.iter().enumerate() {
        for &w in &vs[i + 1..] {
            if g.has_edge(u, w) {
                local.add_edge(index_of(u), index_of(w)).unwrap();
            }
        }
    }
    let aux = vs.len();
    local.add_edge(aux, index_of(meta.junction(copy))).unwrap();
    local.add_edge(aux, index_of(meta.junction(copy + 1))).unwrap();

    let limits = OracleLimits {
        hamiltonian: 20,
        ..OracleLimits::default()
    };
    let cycle = oracles::hamiltonian_cycle(&local, &limits)
        .unwrap()
        .expect("copy admits a junction-to-junction Hamiltonian path");
    // Rotate the cycle so the auxiliary vertex leads, drop it, and orient
    // the remainder from the entry junction.
    let pos = cycle.iter().position(|&v| v == aux).unwrap();
    let mut path: Vec<usize> = cycle[pos + 1..]
        .iter()
        .chain(cycle[..pos].iter())
        .map(|&v| vs[v])
        .collect();
    if path[0] != meta.junction(copy) {
        path.reverse();
    }
    let extracted = extract_st_path(&path, copy, &meta).unwrap();
    assert_eq!(extracted[0], 0);
    assert_eq!(*extracted.last().unwrap(), 3);
    for w in extracted.windows(2) {
        assert!(h.has_edge(w[0], w[1]));
    }
    // P4 has a unique s-t Hamiltonian path.
    assert_eq!(extracted, p_expected);
}
