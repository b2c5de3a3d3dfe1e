//! Candidate subsets of a bag: the supersets of all projections of
//! d-colorable induced subgraphs onto the bag, enumerated as unions of at
//! most d independent sets drawn from the bag.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Family of candidate subsets for one bag, together with the size bound
/// every member respects.
#[derive(Clone, Debug)]
pub struct CandidateFamily {
    pub sets: Vec<Vec<usize>>,
    pub bound: usize,
    pub deficiency: usize,
}

fn isqrt(x: usize) -> usize {
    if x == 0 {
        return 0;
    }
    let mut r = (x as f64).sqrt() as usize;
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    while r * r > x {
        r -= 1;
    }
    r
}

/// Cap on the size of any d-colorable subset of a bag with deficiency k:
/// floor((3d + sqrt(d^2 + 8dk)) / 2).
pub fn candidate_bound(d: usize, k: usize) -> usize {
    (3 * d + isqrt(d * d + 8 * d * k)) / 2
}

/// Enumerates every union of at most `d` independent sets of `g[bag]`.
/// The complement of the bag has one clique per such independent set, and
/// a bag with deficiency k keeps that complement sparse, so the family
/// stays small. Every returned set induces a d-colorable subgraph (its
/// parts two-color it), and every projection of a d-colorable induced
/// subgraph of `g` onto the bag appears: its color classes are independent
/// inside the bag.
pub fn enumerate_bag_candidates(g: &Graph, bag: &[usize], d: usize) -> CandidateFamily {
    let bag_sorted = Graph::sorted_unique(bag);
    let sub = g.induced_subgraph(&bag_sorted).expect("bag inside graph");
    let comp = sub.complement();
    let deficiency = comp.m();
    let cliques = comp.enumerate_cliques(); // independent sets of g[bag]
    let cliques_host: Vec<Vec<usize>> = cliques
        .iter()
        .map(|c| c.iter().map(|&i| bag_sorted[i]).collect())
        .collect();

    let mut level: BTreeSet<Vec<usize>> = BTreeSet::new();
    level.insert(Vec::new());
    for _ in 0..d {
        let mut next = BTreeSet::new();
        for u in &level {
            for c in &cliques_host {
                let merged: BTreeSet<usize> = u.iter().chain(c.iter()).copied().collect();
                next.insert(merged.into_iter().collect());
            }
        }
        level = next;
    }
    CandidateFamily {
        sets: level.into_iter().collect(),
        bound: candidate_bound(d, deficiency),
        deficiency,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn bound_values() {
        assert_eq!(candidate_bound(1, 0), 2);
        assert_eq!(candidate_bound(1, 1), 3);
        assert_eq!(candidate_bound(2, 0), 4);
    }

    #[test]
    fn triangle_bag_one_color() {
        let g = Graph::complete(3);
        let fam = enumerate_bag_candidates(&g, &[0, 1, 2], 1);
        assert_eq!(fam.sets, vec![vec![], vec![0], vec![1], vec![2]]);
        assert_eq!(fam.deficiency, 0);
    }

    #[test]
    fn path_bag_families() {
        let g = Graph::path(3);
        let fam1 = enumerate_bag_candidates(&g, &[0, 1, 2], 1);
        assert_eq!(fam1.sets, vec![vec![], vec![0], vec![0, 2], vec![1], vec![2]]);
        let fam2 = enumerate_bag_candidates(&g, &[0, 1, 2], 2);
        // the whole path is 2-colorable, so every subset qualifies
        assert_eq!(fam2.sets.len(), 8);
    }

    #[test]
    fn members_are_d_colorable_and_bounded() {
        let mut r = crate::gen::rng(23);
        for _ in 0..25 {
            let g = crate::gen::random_graph(9, 0.45, &mut r);
            let bag: Vec<usize> = (0..7).collect();
            for d in 1..=3 {
                let fam = enumerate_bag_candidates(&g, &bag, d);
                for s in &fam.sets {
                    assert!(s.len() <= fam.bound, "candidate {:?} exceeds bound {}", s, fam.bound);
                    assert!(crate::oracle::colorable_with(&g, s, d));
                }
            }
        }
    }

    #[test]
    fn projections_of_d_colorable_subgraphs_appear() {
        let mut r = crate::gen::rng(29);
        for _ in 0..10 {
            let g = crate::gen::random_graph(8, 0.5, &mut r);
            let bag: Vec<usize> = vec![0, 2, 3, 5, 6];
            for d in 1..=2 {
                let fam = enumerate_bag_candidates(&g, &bag, d);
                for mask in 0u32..(1 << g.n()) {
                    let vs: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
                    if !crate::oracle::colorable_with(&g, &vs, d) {
                        continue;
                    }
                    let proj: Vec<usize> = vs.iter().copied().filter(|v| bag.contains(v)).collect();
                    assert!(fam.sets.contains(&proj), "projection {:?} missing for d={}", proj, d);
                }
            }
        }
    }
}
