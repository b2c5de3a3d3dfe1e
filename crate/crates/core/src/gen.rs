//! Seeded random-instance generators for the test harness. Everything is
//! deterministic given the seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{EdgeSet, EditMode, Graph, WeightMap};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdos-Renyi graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Random chordal graph built from a random perfect elimination ordering:
/// each vertex attaches to a vertex-plus-subset of that vertex's later
/// neighborhood, which keeps every later neighborhood a clique.
pub fn random_chordal(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut later: Vec<Vec<usize>> = vec![Vec::new(); n]; // later neighbors per vertex
    for i in (0..n).rev() {
        let v = order[i];
        if i + 1 >= n || !rng.gen_bool(0.92) {
            continue; // occasionally leave a vertex isolated-ish
        }
        let j = rng.gen_range(i + 1..n);
        let anchor = order[j];
        let mut nbrs = vec![anchor];
        for &u in later[anchor].clone().iter() {
            if rng.gen_bool(p) {
                nbrs.push(u);
            }
        }
        later[v] = nbrs;
    }
    let mut edges = Vec::new();
    for v in 0..n {
        for &u in &later[v] {
            edges.push((v.min(u), v.max(u)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges)
}

/// Random graph with fill-in at most `k`: take a random chordal graph and
/// delete up to `k` of its edges (adding them back re-triangulates).
pub fn random_with_fillin_at_most(n: usize, k: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let chordal = random_chordal(n, p, rng);
    delete_random_edges(&chordal, k, rng)
}

/// Random interval graph from `n` random intervals.
pub fn random_interval(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let span = 4 * n.max(1);
    let intervals: Vec<(usize, usize)> = (0..n)
        .map(|_| {
            let a = rng.gen_range(0..span);
            let len = rng.gen_range(0..span / 2);
            (a, a + len)
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (a1, b1) = intervals[u];
            let (a2, b2) = intervals[v];
            if a1.max(a2) <= b1.min(b2) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Random split graph: clique side of `nk` vertices, independent side of
/// `ni`, random cross edges.
pub fn random_split(nk: usize, ni: usize, p_cross: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..nk {
        for v in u + 1..nk {
            edges.push((u, v));
        }
    }
    for u in 0..nk {
        for v in nk..nk + ni {
            if rng.gen_bool(p_cross) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(nk + ni, &edges)
}

/// Deletes up to `k` random edges (without replacement).
pub fn delete_random_edges(g: &Graph, k: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = g.edges();
    edges.shuffle(rng);
    let delete: Vec<(usize, usize)> = edges.into_iter().take(k).collect();
    if delete.is_empty() {
        return g.clone();
    }
    g.apply_modulator(&EdgeSet::from_pairs(delete).unwrap(), EditMode::Delete)
        .unwrap()
}

/// Deletes up to `k` random edges chosen among those inside `part`.
pub fn delete_random_edges_within(g: &Graph, part: &[usize], k: usize, rng: &mut ChaCha8Rng) -> Graph {
    let inset: std::collections::BTreeSet<usize> = part.iter().copied().collect();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| inset.contains(&u) && inset.contains(&v))
        .collect();
    edges.shuffle(rng);
    let delete: Vec<(usize, usize)> = edges.into_iter().take(k).collect();
    if delete.is_empty() {
        return g.clone();
    }
    g.apply_modulator(&EdgeSet::from_pairs(delete).unwrap(), EditMode::Delete)
        .unwrap()
}

pub fn random_weights(n: usize, lo: i64, hi: i64, rng: &mut ChaCha8Rng) -> WeightMap {
    WeightMap::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::is_chordal;

    #[test]
    fn chordal_generator_is_chordal() {
        let mut r = rng(7);
        for n in [1usize, 2, 5, 8, 12, 14] {
            for _ in 0..20 {
                let g = random_chordal(n, 0.5, &mut r);
                assert!(is_chordal(&g).is_chordal(), "{:?}", g);
            }
        }
    }

    #[test]
    fn fillin_bounded_generator() {
        let mut r = rng(11);
        for _ in 0..30 {
            let g = random_with_fillin_at_most(10, 3, 0.5, &mut r);
            assert!(matches!(
                crate::fillin::exact_fillin(&g, 3),
                crate::fillin::FillinOutcome::Modulator(_)
            ));
        }
    }

    #[test]
    fn interval_generator_chordal_and_at_free() {
        let mut r = rng(13);
        for _ in 0..20 {
            let g = random_interval(9, &mut r);
            assert!(is_chordal(&g).is_chordal());
            assert!(!crate::oracle::has_asteroidal_triple(&g).unwrap());
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let g1 = random_graph(10, 0.4, &mut rng(42));
        let g2 = random_graph(10, 0.4, &mut rng(42));
        assert_eq!(g1, g2);
    }
}
