//! Classic problems expressed through the subgraph solvers: independent
//! set and bipartite subgraph directly, vertex cover / odd cycle
//! transversal / feedback vertex set as weight complements.

use crate::decomp::NiceTreeDecomposition;
use crate::dp::{solve_d_colorable, solve_d_degenerate, Solution};
use crate::error::Result;
use crate::graph::{Graph, WeightMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicProblem {
    /// maximum-weight independent set
    Wis,
    /// minimum-weight vertex cover
    Wvc,
    /// minimum-weight odd cycle transversal
    Oct,
    /// maximum-weight induced bipartite subgraph
    BipartiteSubgraph,
    /// minimum-weight feedback vertex set
    Wfvs,
    /// maximum-weight induced forest
    InducedForest,
}

impl ClassicProblem {
    pub fn parse(name: &str) -> Option<ClassicProblem> {
        Some(match name {
            "wis" => ClassicProblem::Wis,
            "wvc" => ClassicProblem::Wvc,
            "oct" => ClassicProblem::Oct,
            "bipartite-subgraph" => ClassicProblem::BipartiteSubgraph,
            "wfvs" => ClassicProblem::Wfvs,
            "induced-forest" => ClassicProblem::InducedForest,
            _ => return None,
        })
    }
}

fn complement_solution(g: &Graph, w: &WeightMap, inner: Solution) -> Solution {
    let witness: Vec<usize> = g.vertices().filter(|v| !inner.witness.contains(v)).collect();
    Solution {
        value: w.total() - inner.value,
        witness,
        assignment: None,
    }
}

fn assert_forest(g: &Graph, vs: &[usize]) {
    let sub = g.induced_subgraph(vs).expect("witness inside graph");
    let comps = sub.connected_components().len();
    assert!(sub.m() + comps == sub.n(), "induced subgraph is not a forest");
}

pub fn solve_classic(
    problem: ClassicProblem,
    g: &Graph,
    w: &WeightMap,
    nice: &NiceTreeDecomposition,
) -> Result<Solution> {
    match problem {
        ClassicProblem::Wis => solve_d_colorable(g, w, 1, nice),
        ClassicProblem::BipartiteSubgraph => solve_d_colorable(g, w, 2, nice),
        ClassicProblem::Wvc => {
            let inner = solve_d_colorable(g, w, 1, nice)?;
            Ok(complement_solution(g, w, inner))
        }
        ClassicProblem::Oct => {
            let inner = solve_d_colorable(g, w, 2, nice)?;
            Ok(complement_solution(g, w, inner))
        }
        ClassicProblem::InducedForest => {
            let sol = solve_d_degenerate(g, w, 1, nice)?;
            assert_forest(g, &sol.witness);
            Ok(sol)
        }
        ClassicProblem::Wfvs => {
            let inner = solve_d_degenerate(g, w, 1, nice)?;
            assert_forest(g, &inner.witness);
            Ok(complement_solution(g, w, inner))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fillin::kalmost_nice_decomposition;
    use crate::graph::Graph;

    fn solve(p: ClassicProblem, g: &Graph, w: &WeightMap, k: usize) -> Solution {
        let (nice, _) = kalmost_nice_decomposition(g, k).unwrap().expect("within budget");
        solve_classic(p, g, w, &nice).unwrap()
    }

    #[test]
    fn wvc_on_c4() {
        assert_eq!(solve(ClassicProblem::Wvc, &Graph::cycle(4), &WeightMap::unit(4), 1).value, 2);
    }

    #[test]
    fn oct_on_c5() {
        assert_eq!(solve(ClassicProblem::Oct, &Graph::cycle(5), &WeightMap::unit(5), 2).value, 1);
    }

    #[test]
    fn wfvs_on_k4() {
        assert_eq!(solve(ClassicProblem::Wfvs, &Graph::complete(4), &WeightMap::unit(4), 0).value, 2);
    }

    #[test]
    fn forest_equals_degenerate_one() {
        let mut r = crate::gen::rng(111);
        for _ in 0..8 {
            let g = crate::gen::random_with_fillin_at_most(8, 2, 0.5, &mut r);
            let w = crate::gen::random_weights(g.n(), 1, 10, &mut r);
            let (nice, _) = kalmost_nice_decomposition(&g, 2).unwrap().unwrap();
            let a = solve_classic(ClassicProblem::InducedForest, &g, &w, &nice).unwrap();
            let b = solve_d_degenerate(&g, &w, 1, &nice).unwrap();
            assert_eq!(a.value, b.value);
        }
    }
}
