//! Turing kernel for weighted clique on graphs within k added edges of
//! chordal: after triangulating, any heavy clique lives inside a maximal
//! clique of the triangulation, and there it decomposes into a forced part
//! outside the modulator endpoints plus a small queried part inside them.

use crate::chordal::{is_chordal, maximal_cliques_chordal, Chordality};
use crate::error::Result;
use crate::fillin::{approx_fillin, ApproxOutcome};
use crate::graph::{EditMode, Graph, WeightMap};

#[derive(Clone, Debug)]
pub struct WCliqueQuery {
    /// labels of the queried induced subgraph
    pub vertices: Vec<usize>,
    pub threshold: i64,
    pub answer: bool,
}

#[derive(Clone, Debug)]
pub struct TuringKernelRun {
    /// `None` when the fill-in budget is exceeded.
    pub answer: Option<bool>,
    pub modulator: Vec<(usize, usize)>,
    /// labels of the modulator endpoints
    pub x: Vec<usize>,
    pub queries: Vec<WCliqueQuery>,
}

/// Decides whether `g` has a clique of weight at least `threshold` using
/// an oracle for small weighted-clique instances; every query graph has at
/// most `16k^2` vertices.
pub fn turing_kernel_wclique(
    g: &Graph,
    w: &WeightMap,
    threshold: i64,
    k: usize,
    oracle: &mut dyn FnMut(&Graph, &WeightMap, i64) -> Result<bool>,
) -> Result<TuringKernelRun> {
    w.validate_positive(g)?;
    let modulator = match approx_fillin(g, k) {
        ApproxOutcome::Modulator(m) => m,
        ApproxOutcome::NotInClass => {
            return Ok(TuringKernelRun {
                answer: None,
                modulator: vec![],
                x: vec![],
                queries: vec![],
            });
        }
    };
    if g.n() == 0 {
        return Ok(TuringKernelRun {
            answer: Some(threshold <= 0),
            modulator: vec![],
            x: vec![],
            queries: vec![],
        });
    }
    let x = modulator.pairs.endpoints();
    let filled = g.apply_modulator(&modulator.pairs, EditMode::Add)?;
    let elim = match is_chordal(&filled) {
        Chordality::Chordal(e) => e,
        Chordality::ChordlessCycle(_) => unreachable!("triangulation is chordal"),
    };
    let cliques = maximal_cliques_chordal(&filled, &elim);

    let mut queries = Vec::new();
    let mut any = false;
    for c in &cliques {
        let inside: Vec<usize> = c.iter().copied().filter(|v| x.contains(v)).collect();
        let outside_weight: i64 = c.iter().filter(|v| !x.contains(v)).map(|&v| w.get(v)).sum();
        let w_i = (threshold - outside_weight).max(0);
        let sub = g.induced_subgraph(&inside)?;
        let sub_w = w.restrict(&inside);
        let answer = oracle(&sub, &sub_w, w_i)?;
        any = any || answer;
        queries.push(WCliqueQuery {
            vertices: inside.iter().map(|&v| g.label(v)).collect(),
            threshold: w_i,
            answer,
        });
    }
    Ok(TuringKernelRun {
        answer: Some(any),
        modulator: modulator
            .pairs
            .iter()
            .map(|(u, v)| (g.label(u).min(g.label(v)), g.label(u).max(g.label(v))))
            .collect(),
        x: x.iter().map(|&v| g.label(v)).collect(),
        queries,
    })
}

/// The default desk-scale oracle: exhaustive weighted clique.
pub fn brute_wclique_oracle(g: &Graph, w: &WeightMap, threshold: i64) -> Result<bool> {
    crate::oracle::wclique_at_least(g, w, threshold)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn run(g: &Graph, w: &WeightMap, threshold: i64, k: usize) -> TuringKernelRun {
        turing_kernel_wclique(g, w, threshold, k, &mut brute_wclique_oracle).unwrap()
    }

    #[test]
    fn chordal_case_queries_empty_subgraphs() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
        let w = WeightMap::unit(4);
        let out = run(&g, &w, 3, 0);
        assert_eq!(out.answer, Some(true));
        assert!(out.queries.iter().all(|q| q.vertices.is_empty()));
        let out = run(&g, &w, 4, 0);
        assert_eq!(out.answer, Some(false));
    }

    #[test]
    fn c4_with_threshold_two() {
        let g = Graph::cycle(4);
        let w = WeightMap::unit(4);
        assert_eq!(run(&g, &w, 2, 1).answer, Some(true));
        assert_eq!(run(&g, &w, 3, 1).answer, Some(false));
    }

    #[test]
    fn matches_brute_force_and_respects_size_bound() {
        let mut r = crate::gen::rng(171);
        for _ in 0..15 {
            let g = crate::gen::random_with_fillin_at_most(9, 3, 0.5, &mut r);
            let w = crate::gen::random_weights(g.n(), 1, 10, &mut r);
            let (expect, _) = crate::oracle::max_wclique(&g, &w).unwrap();
            for threshold in [expect - 1, expect, expect + 1] {
                let out = run(&g, &w, threshold, 3);
                assert_eq!(out.answer, Some(expect >= threshold), "t={} g={:?}", threshold, g);
                for q in &out.queries {
                    assert!(q.vertices.len() <= 16 * 3 * 3);
                    assert!(q.vertices.len() <= out.x.len());
                }
            }
        }
    }
}
