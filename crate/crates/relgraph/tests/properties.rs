//! Cross-module invariants: metric laws, I/O round-trips, hint soundness
//! against the exact oracles, and the transfer bounds.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use relgraph::certify::{self, NegativityHint, Problem};
use relgraph::graph::{
    dist_edits, dist_instance, dist_maxdeg, symmetric_difference, Distance, Graph, Instance,
    Metric,
};
use relgraph::oracles::{self, OracleLimits};
use relgraph::transfer;
use relgraph::{parse_graph, write_graph};

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[test]
fn symmetric_difference_round_trips_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..1000 {
        let g = gnp(&mut rng, 8, 0.5);
        let h = gnp(&mut rng, 8, 0.5);
        let e = symmetric_difference(&g, &h).unwrap();
        assert_eq!(e.apply(&g).unwrap(), h);
        // A = B △ C implies A △ B = C.
        let back = symmetric_difference(&h, &g).unwrap();
        assert_eq!(back.apply(&h).unwrap(), g);
    }
}

#[test]
fn metric_relations_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..500 {
        let n = rng.gen_range(1..=20);
        let g = gnp(&mut rng, n, 0.4);
        let h = gnp(&mut rng, n, 0.4);
        let de = dist_edits(&g, &h).finite();
        let dd = dist_maxdeg(&g, &h).finite();
        assert!(dd <= de);
        // Handshake with slack: de <= n*dd/2 + n.
        assert!(2 * de <= (n as u64) * dd + 2 * (n as u64));
        // Identity and symmetry for both metrics.
        assert_eq!(dist_edits(&g, &g), Distance::Finite(0));
        assert_eq!(dist_maxdeg(&h, &h), Distance::Finite(0));
        assert_eq!(dist_edits(&g, &h), dist_edits(&h, &g));
        assert_eq!(dist_maxdeg(&g, &h), dist_maxdeg(&h, &g));
    }
}

#[test]
fn edit_distance_triangle_inequality() {
    // Triangle inequality holds for the edit metric; it is deliberately not
    // asserted for the max-degree metric.
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for _ in 0..500 {
        let n = rng.gen_range(1..=14);
        let a = gnp(&mut rng, n, 0.5);
        let b = gnp(&mut rng, n, 0.5);
        let c = gnp(&mut rng, n, 0.5);
        let ab = dist_edits(&a, &b).finite();
        let bc = dist_edits(&b, &c).finite();
        let ac = dist_edits(&a, &c).finite();
        assert!(ac <= ab + bc);
    }
}

#[test]
fn complement_preserves_both_distances() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for _ in 0..300 {
        let n = rng.gen_range(1..=18);
        let g = gnp(&mut rng, n, 0.5);
        let h = gnp(&mut rng, n, 0.5);
        assert_eq!(dist_edits(&g, &h), dist_edits(&g.complement(), &h.complement()));
        assert_eq!(
            dist_maxdeg(&g, &h),
            dist_maxdeg(&g.complement(), &h.complement())
        );
    }
}

#[test]
fn instance_distance_requires_equal_thresholds() {
    let g = Graph::cycle(6);
    let a = Instance::new(g.clone(), Some(2)).unwrap();
    let b = Instance::new(g.clone(), Some(3)).unwrap();
    let c = Instance::new(g, None).unwrap();
    assert_eq!(dist_instance(&a, &b, Metric::EdgeEdits), Distance::Infinite);
    assert_eq!(dist_instance(&a, &c, Metric::EdgeEdits), Distance::Infinite);
    assert_eq!(dist_instance(&a, &a, Metric::MaxDegree), Distance::Finite(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn write_then_parse_any_graph(n in 0usize..=50, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gnp(&mut rng, n, 0.3);
        let text = write_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }
}

#[test]
fn oracle_outputs_pass_verification() {
    let limits = OracleLimits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for _ in 0..150 {
        let n = rng.gen_range(1..=10);
        let g = gnp(&mut rng, n, 0.4);
        if let Some(cycle) = oracles::hamiltonian_cycle(&g, &limits).unwrap() {
            let inst = Instance::without_threshold(g.clone());
            assert_eq!(
                certify::verify_certificate(
                    Problem::HamiltonianCycle,
                    &inst,
                    &certify::Certificate::CycleOrder(cycle)
                ),
                Ok(true)
            );
        }
        let ds = oracles::min_dominating_set(&g, &limits).unwrap();
        let inst = Instance::new(g.clone(), Some(ds.len())).unwrap();
        assert_eq!(
            certify::verify_certificate(
                Problem::DominatingSet,
                &inst,
                &certify::Certificate::VertexSet(ds)
            ),
            Ok(true)
        );
        let mis = oracles::max_independent_set(&g, &limits).unwrap();
        let inst = Instance::new(g.clone(), Some(mis.len())).unwrap();
        assert_eq!(
            certify::verify_certificate(
                Problem::IndependentSet,
                &inst,
                &certify::Certificate::VertexSet(mis)
            ),
            Ok(true)
        );
        let parts = oracles::chromatic_partition(&g, &limits).unwrap();
        let inst = Instance::new(g.clone(), Some(parts.len())).unwrap();
        assert_eq!(
            certify::verify_certificate(
                Problem::Coloring,
                &inst,
                &certify::Certificate::Partition(parts)
            ),
            Ok(true)
        );
    }
}

/// Every hint that validates must describe a genuinely negative instance,
/// checked against the exact oracles for each hint kind in turn.
#[test]
fn validated_hints_imply_oracle_negativity() {
    let limits = OracleLimits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let mut exercised = [0usize; 5];
    for round in 0..400 {
        let n = rng.gen_range(2..=10);
        let p = [0.15, 0.35, 0.6][round % 3];
        let g = gnp(&mut rng, n, p);

        // IsolatedVertex / SeparatorPair for Hamiltonicity.
        let inst = Instance::without_threshold(g.clone());
        for v in 0..n {
            let hint = NegativityHint::IsolatedVertex(v);
            if certify::verify_hint(Problem::HamiltonianCycle, &inst, &hint).unwrap() {
                exercised[0] += 1;
                assert!(!oracles::is_hamiltonian(&g, &limits).unwrap());
            }
        }
        let mut separators: Vec<Vec<usize>> = vec![vec![]];
        separators.push(vec![rng.gen_range(0..n)]);
        if n >= 2 {
            separators.push(vec![0, n - 1]);
        }
        for vs in separators {
            let hint = NegativityHint::SeparatorPair(vs);
            if certify::verify_hint(Problem::HamiltonianCycle, &inst, &hint).unwrap() {
                exercised[1] += 1;
                assert!(!oracles::is_hamiltonian(&g, &limits).unwrap());
            }
        }

        // CliquePartition for Independent Set: an optimal clique cover with
        // k set one above its size validates.
        let cover = oracles::clique_cover_partition(&g, &limits).unwrap();
        if cover.len() + 1 <= n {
            let k = cover.len() + 1;
            let inst = Instance::new(g.clone(), Some(k)).unwrap();
            let hint = NegativityHint::CliquePartition(cover.clone());
            if certify::verify_hint(Problem::IndependentSet, &inst, &hint).unwrap() {
                exercised[2] += 1;
                assert!(oracles::independence_number(&g, &limits).unwrap() < k);
            }
        }

        // PlantedIndependentSet for Clique Cover.
        let mis = oracles::max_independent_set(&g, &limits).unwrap();
        if mis.len() >= 2 {
            let k = mis.len() - 1;
            let inst = Instance::new(g.clone(), Some(k)).unwrap();
            let hint = NegativityHint::PlantedIndependentSet(mis.clone());
            assert_eq!(
                certify::verify_hint(Problem::CliqueCover, &inst, &hint),
                Ok(true)
            );
            exercised[3] += 1;
            assert!(oracles::clique_cover_number(&g, &limits).unwrap() > k);
        }

        // CoverageShortfall for Dominating Set, payload straight from the
        // solver's negative branch.
        let k = rng.gen_range(1..=n);
        let inst = Instance::new(g.clone(), Some(k)).unwrap();
        if let certify::Certificate::Nil(Some(hint @ NegativityHint::CoverageShortfall { .. })) =
            relgraph::solvers::rel_domset_edits(&inst).unwrap().certificate
        {
            assert_eq!(
                certify::verify_hint(Problem::DominatingSet, &inst, &hint),
                Ok(true)
            );
            exercised[4] += 1;
            assert!(!oracles::has_dominating_set_of_size(&g, k, &limits).unwrap());
        }
    }
    assert!(
        exercised.iter().all(|&c| c > 0),
        "every hint kind must be exercised: {exercised:?}"
    );
}

#[test]
fn transfer_is_bound_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=30);
        let g = gnp(&mut rng, n, 0.3);
        let d = rng.gen_range(0..=5usize);
        // Any vertex set whose induced max degree happens to be <= d.
        let size = rng.gen_range(1..=n);
        let s: BTreeSet<usize> = (0..size).collect();
        let (induced, _) = g.induced(&s);
        if induced.max_degree() > d {
            continue;
        }
        let out = transfer::transfer_is_maxdeg(&g, &s, d).unwrap();
        assert!(out.len() >= s.len().div_ceil(d + 1));
        assert!(out.iter().all(|&u| s.contains(&u)));
        let (check, _) = g.induced(&out);
        assert_eq!(check.max_degree(), 0, "result must be independent in g");
    }
}

#[test]
fn transfer_coloring_bounds_randomized() {
    let limits = OracleLimits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    for _ in 0..200 {
        let n = rng.gen_range(2..=12);
        let h = gnp(&mut rng, n, 0.4);
        // Perturb within max-degree 3: delete/add a few edges around one hub.
        let mut g = h.clone();
        for _ in 0..3 {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v {
                continue;
            }
            if g.has_edge(u, v) {
                let _ = g.remove_edge(u, v);
            } else {
                let _ = g.add_edge(u, v);
            }
        }
        let d = match dist_maxdeg(&g, &h) {
            Distance::Finite(d) => d as usize,
            Distance::Infinite => unreachable!(),
        };
        let p = oracles::chromatic_partition(&h, &limits).unwrap();
        if p.is_empty() {
            continue;
        }
        let out = transfer::transfer_coloring_maxdeg(&g, &h, &p, d).unwrap();
        assert!(out.len() <= p.len() * (d + 1));
        assert!(out.iter().all(|part| {
            let (ind, _) = g.induced(part);
            ind.max_degree() == 0
        }));

        // Edits variant against the recomputed per-part edge counts.
        let de = dist_edits(&g, &h).finite() as usize;
        let out = transfer::transfer_coloring_edits(&g, &h, &p, de).unwrap();
        let t = p.len();
        let total_inside: usize = p
            .iter()
            .map(|part| g.induced(part).0.edge_count())
            .sum();
        let mut bound = t;
        let mut r = 0;
        while r * r < 2 * t * total_inside {
            r += 1;
        }
        bound += r;
        assert!(out.len() <= bound, "{} > {bound}", out.len());
    }
}

#[test]
fn sqrt2m_never_exceeds_either_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for _ in 0..1000 {
        let n = rng.gen_range(0..=16);
        let g = gnp(&mut rng, n, 0.4);
        let parts = transfer::sqrt2m_coloring(&g);
        let m = g.edge_count();
        if m >= 1 {
            let mut r = 0;
            while r * r < 2 * m {
                r += 1;
            }
            assert!(parts.len() <= r);
        } else {
            assert_eq!(parts.len(), usize::from(n > 0));
        }
        assert!(parts.len() <= g.max_degree() + 1 || n == 0);
    }
}
