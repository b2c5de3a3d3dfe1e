//! Property tests for the combinatorial core, plus randomized invariants
//! that need an independent brute-force side.

use proptest::prelude::*;
use rand::Rng;

use almost_chordal::chordal::{self, is_chordal, max_weight_is_chordal};
use almost_chordal::dp;
use almost_chordal::fillin::{decomposition_from_modulator, exact_fillin, minimal_triangulation, FillinOutcome};
use almost_chordal::gen;
use almost_chordal::graph::{EdgeSet, EditMode, Graph, WeightMap};
use almost_chordal::oracle;

/// Strategy: a graph on 2..=10 vertices with arbitrary edges.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..=10).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(mask.iter())
                .filter(|(_, &b)| b)
                .map(|(&p, _)| p)
                .collect();
            Graph::from_edges(n, &edges)
        })
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph()) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_partitions_pairs(g in arb_graph()) {
        let co = g.complement();
        let n = g.n();
        prop_assert_eq!(g.m() + co.m(), n * (n - 1) / 2);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    prop_assert_eq!(g.has_edge(u, v), !co.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn modulator_add_then_delete_restores(g in arb_graph()) {
        let non_edges = EdgeSet::from_pairs(g.non_edges()).unwrap();
        let added = g.apply_modulator(&non_edges, EditMode::Add).unwrap();
        let back = added.apply_modulator(&non_edges, EditMode::Delete).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn symmetric_difference_is_an_involution(g in arb_graph()) {
        let pairs = EdgeSet::from_pairs([(0usize, 1usize)]).unwrap();
        let once = g.apply_modulator(&pairs, EditMode::SymmetricDifference).unwrap();
        let twice = once.apply_modulator(&pairs, EditMode::SymmetricDifference).unwrap();
        prop_assert_eq!(twice, g);
    }

    #[test]
    fn degeneracy_ordering_witnesses_its_value(g in arb_graph()) {
        let (order, d) = g.degeneracy_ordering();
        let mut rank = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let max_later = order
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&u| rank[u] > rank[v]).count())
            .max()
            .unwrap_or(0);
        prop_assert_eq!(max_later, d);
    }

    #[test]
    fn cliques_match_brute_force(g in arb_graph()) {
        let got: std::collections::BTreeSet<Vec<usize>> = g.enumerate_cliques().into_iter().collect();
        for mask in 0u32..(1 << g.n()) {
            let vs: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            prop_assert_eq!(g.is_clique(&vs), got.contains(&vs));
        }
    }
}

#[test]
fn degeneracy_is_minimum_over_orderings() {
    // no ordering achieves a smaller maximum later-degree (n <= 7)
    let mut r = gen::rng(0xDE6);
    for _ in 0..10 {
        let g = gen::random_graph(6, 0.5, &mut r);
        let (_, d) = g.degeneracy_ordering();
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut best = usize::MAX;
        loop {
            let mut rank = vec![0; g.n()];
            for (i, &v) in perm.iter().enumerate() {
                rank[v] = i;
            }
            let worst = perm
                .iter()
                .map(|&v| g.neighbors(v).iter().filter(|&&u| rank[u] > rank[v]).count())
                .max()
                .unwrap_or(0);
            best = best.min(worst);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert_eq!(best, d, "{:?}", g);
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[test]
fn peo_generated_graphs_accepted_cycles_rejected() {
    let mut r = gen::rng(0x9E0);
    for _ in 0..40 {
        let n = 2 + r.gen_range(0..13);
        let g = gen::random_chordal(n, 0.5, &mut r);
        assert!(is_chordal(&g).is_chordal());
    }
    for n in 4..=30 {
        assert!(!is_chordal(&Graph::cycle(n)).is_chordal(), "C{} accepted", n);
    }
}

#[test]
fn chordal_wis_matches_brute_force_on_200_graphs() {
    let mut r = gen::rng(0x315);
    for i in 0..200 {
        let n = 4 + (i % 11); // 4..=14
        let g = gen::random_chordal(n, 0.5, &mut r);
        let w = gen::random_weights(g.n(), 1, 10, &mut r);
        let (value, set) = max_weight_is_chordal(&g, &w).unwrap();
        assert!(g.is_independent_set(&set));
        assert_eq!(w.sum(&set), value);
        let (expect, _) = oracle::max_wis(&g, &w).unwrap();
        assert_eq!(value, expect, "{:?}", g);
    }
}

#[test]
fn clique_tree_bags_are_exactly_the_maximal_cliques() {
    let mut r = gen::rng(0xC11);
    for _ in 0..40 {
        let n = 3 + r.gen_range(0..10);
        let g = gen::random_chordal(n, 0.5, &mut r);
        let td = chordal::clique_tree(&g).unwrap();
        assert!(td.bags.len() <= n.max(1));
        // brute-force maximal cliques
        let mut cliques: Vec<Vec<usize>> = (0u32..(1 << n))
            .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<usize>>())
            .filter(|vs| !vs.is_empty() && g.is_clique(vs))
            .collect();
        let maximal: std::collections::BTreeSet<Vec<usize>> = cliques
            .iter()
            .filter(|c| {
                !cliques
                    .iter()
                    .any(|other| other.len() > c.len() && c.iter().all(|v| other.contains(v)))
            })
            .cloned()
            .collect();
        cliques.clear();
        let got: std::collections::BTreeSet<Vec<usize>> = td.bags.iter().cloned().collect();
        assert_eq!(got, maximal, "{:?}", g);
    }
}

#[test]
fn find_at_agrees_with_brute_force() {
    let mut r = gen::rng(0xA7);
    for _ in 0..60 {
        let n = 4 + r.gen_range(0..9); // 4..=12
        let g = gen::random_graph(n, 0.35, &mut r);
        let ours = almost_chordal::at::find_at(&g, None).is_some();
        let brute = oracle::has_asteroidal_triple(&g).unwrap();
        assert_eq!(ours, brute, "{:?}", g);
    }
}

#[test]
fn nice_decomposition_node_count_is_quadratic() {
    let mut r = gen::rng(0x90D);
    for _ in 0..20 {
        let n = 4 + r.gen_range(0..9);
        let g = gen::random_with_fillin_at_most(n, 3, 0.5, &mut r);
        let (nice, _) = almost_chordal::fillin::kalmost_nice_decomposition(&g, 3)
            .unwrap()
            .unwrap();
        assert!(nice.len() <= 4 * n * n + 2, "{} nodes for n={}", nice.len(), n);
    }
}

#[test]
fn objective_is_decomposition_independent() {
    // the same instance solved over decompositions from different
    // modulators gives identical values
    let mut r = gen::rng(0xD1F);
    for _ in 0..10 {
        let g = gen::random_with_fillin_at_most(9, 3, 0.5, &mut r);
        let w = gen::random_weights(g.n(), 1, 10, &mut r);
        let exact = match exact_fillin(&g, 3) {
            FillinOutcome::Modulator(m) => m,
            FillinOutcome::ExceedsBudget => unreachable!("generator bounds fill-in"),
        };
        let heuristic = minimal_triangulation(&g);
        let nice_a = decomposition_from_modulator(&g, &exact).unwrap();
        let nice_b = decomposition_from_modulator(&g, &heuristic).unwrap();
        for d in 1..=2 {
            let a = dp::solve_d_colorable(&g, &w, d, &nice_a).unwrap();
            let b = dp::solve_d_colorable(&g, &w, d, &nice_b).unwrap();
            assert_eq!(a.value, b.value);
        }
        let a = dp::solve_d_degenerate(&g, &w, 1, &nice_a).unwrap();
        let b = dp::solve_d_degenerate(&g, &w, 1, &nice_b).unwrap();
        assert_eq!(a.value, b.value);
    }
}

#[test]
fn minimized_witnesses_are_minimal() {
    let mut r = gen::rng(0x317);
    let mut found = 0;
    for _ in 0..80 {
        let n = 7 + r.gen_range(0..5);
        let g = gen::random_graph(n, 0.3, &mut r);
        let Some(t) = almost_chordal::at::find_at(&g, None) else {
            continue;
        };
        found += 1;
        let w = almost_chordal::at::minimize_at_witness(&g, t).unwrap();
        for &u in &w.vertices {
            if w.terminals.contains(&u) {
                continue;
            }
            let rest: std::collections::BTreeSet<usize> =
                w.vertices.iter().copied().filter(|&v| v != u).collect();
            assert!(
                !almost_chordal::at::is_at_within(&g, &rest, w.terminals),
                "witness not minimal on {:?}",
                g
            );
        }
    }
    assert!(found >= 10, "AT-bearing graphs too rare: {}", found);
}
