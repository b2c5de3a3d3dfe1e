//! Maximum-weight induced subgraph admitting a homomorphism into a fixed
//! pattern graph H. Candidate subsets are enumerated with |V(H)| parts:
//! an H-colorable graph is |V(H)|-colorable.

use crate::decomp::NiceTreeDecomposition;
use crate::dp::mapped::solve_mapped;
use crate::dp::{Assignment, Solution};
use crate::error::Result;
use crate::graph::{Graph, WeightMap};

pub fn solve_h_colorable(g: &Graph, w: &WeightMap, h: &Graph, nice: &NiceTreeDecomposition) -> Result<Solution> {
    let entry = solve_mapped(g, w, nice, h.n().max(1), h.n(), &|a, b| h.has_edge(a, b))?;
    debug_assert!(crate::oracle::homomorphic_to(g, &entry.witness, h));
    Ok(Solution {
        value: entry.value,
        witness: entry.witness,
        assignment: Some(Assignment::Homomorphism(entry.mapping)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fillin::kalmost_nice_decomposition;
    use crate::graph::Graph;

    #[test]
    fn k1_pattern_is_independent_set() {
        let g = Graph::cycle(4);
        let w = WeightMap::unit(4);
        let (nice, _) = kalmost_nice_decomposition(&g, 1).unwrap().unwrap();
        let sol = solve_h_colorable(&g, &w, &Graph::edgeless(1), &nice).unwrap();
        assert_eq!(sol.value, 2);
    }

    #[test]
    fn identity_homomorphism_on_c4() {
        let g = Graph::cycle(4);
        let w = WeightMap::unit(4);
        let (nice, _) = kalmost_nice_decomposition(&g, 1).unwrap().unwrap();
        let sol = solve_h_colorable(&g, &w, &Graph::cycle(4), &nice).unwrap();
        assert_eq!(sol.value, 4);
    }

    #[test]
    fn complete_pattern_equals_d_colorable() {
        let mut r = crate::gen::rng(33);
        for _ in 0..10 {
            let g = crate::gen::random_with_fillin_at_most(8, 2, 0.5, &mut r);
            let w = crate::gen::random_weights(g.n(), 1, 10, &mut r);
            let (nice, _) = kalmost_nice_decomposition(&g, 2).unwrap().unwrap();
            for d in 1..=3 {
                let a = solve_h_colorable(&g, &w, &Graph::complete(d), &nice).unwrap();
                let b = crate::dp::solve_d_colorable(&g, &w, d, &nice).unwrap();
                assert_eq!(a.value, b.value);
            }
        }
    }

    #[test]
    fn homomorphism_edges_are_preserved() {
        let mut r = crate::gen::rng(35);
        let g = crate::gen::random_with_fillin_at_most(9, 2, 0.4, &mut r);
        let w = WeightMap::unit(g.n());
        let h = Graph::cycle(4);
        let (nice, _) = kalmost_nice_decomposition(&g, 2).unwrap().unwrap();
        let sol = solve_h_colorable(&g, &w, &h, &nice).unwrap();
        let Some(Assignment::Homomorphism(m)) = &sol.assignment else {
            panic!("missing homomorphism");
        };
        for (u, v) in g.edges() {
            if sol.witness.contains(&u) && sol.witness.contains(&v) {
                assert!(h.has_edge(m[&u], m[&v]));
            }
        }
    }
}
