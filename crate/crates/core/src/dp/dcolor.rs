//! Maximum-weight induced d-colorable subgraph.

use crate::decomp::NiceTreeDecomposition;
use crate::dp::mapped::solve_mapped;
use crate::dp::{Assignment, Solution};
use crate::error::{Error, Result};
use crate::graph::{Graph, WeightMap};

/// Maximum weight of an induced subgraph that admits a proper d-coloring,
/// with the witness set and one of its colorings.
pub fn solve_d_colorable(g: &Graph, w: &WeightMap, d: usize, nice: &NiceTreeDecomposition) -> Result<Solution> {
    if d == 0 {
        return Err(Error::BadConfig("d must be at least 1".into()));
    }
    let entry = solve_mapped(g, w, nice, d, d, &|a, b| a != b)?;
    debug_assert!(crate::oracle::colorable_with(g, &entry.witness, d));
    Ok(Solution {
        value: entry.value,
        witness: entry.witness,
        assignment: Some(Assignment::Coloring(entry.mapping)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fillin::kalmost_nice_decomposition;
    use crate::graph::Graph;

    fn solve(g: &Graph, w: &WeightMap, d: usize, k: usize) -> Solution {
        let (nice, _) = kalmost_nice_decomposition(g, k).unwrap().expect("within budget");
        solve_d_colorable(g, w, d, &nice).unwrap()
    }

    #[test]
    fn c5_examples() {
        let g = Graph::cycle(5);
        let w = WeightMap::unit(5);
        assert_eq!(solve(&g, &w, 1, 2).value, 2);
        assert_eq!(solve(&g, &w, 2, 2).value, 4);
        assert_eq!(solve(&g, &w, 3, 2).value, 5);
    }

    #[test]
    fn witness_coloring_is_proper() {
        let g = Graph::cycle(6);
        let w = WeightMap::new(vec![3, 1, 4, 1, 5, 9]);
        let sol = solve(&g, &w, 2, 3);
        assert_eq!(sol.value, 23); // the whole even cycle is bipartite
        let Some(Assignment::Coloring(c)) = &sol.assignment else {
            panic!("missing coloring");
        };
        for (u, v) in g.edges() {
            if sol.witness.contains(&u) && sol.witness.contains(&v) {
                assert_ne!(c[&u], c[&v]);
            }
        }
    }

    #[test]
    fn matches_oracle_on_random_graphs() {
        let mut r = crate::gen::rng(101);
        for _ in 0..25 {
            let g = crate::gen::random_with_fillin_at_most(9, 3, 0.5, &mut r);
            let w = crate::gen::random_weights(g.n(), 1, 10, &mut r);
            let (nice, _) = kalmost_nice_decomposition(&g, 3).unwrap().unwrap();
            for d in 1..=3 {
                let sol = solve_d_colorable(&g, &w, d, &nice).unwrap();
                let (expect, _) = crate::oracle::max_d_colorable(&g, &w, d).unwrap();
                assert_eq!(sol.value, expect, "d={} g={:?}", d, g);
                assert_eq!(w.sum(&sol.witness), sol.value);
            }
        }
    }
}
