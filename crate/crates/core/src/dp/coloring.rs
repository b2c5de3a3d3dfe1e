//! Deciding ell-colorability over a nice k-almost chordal decomposition.
//!
//! Bag states are partitions of the bag into independent sets. Only the
//! endpoints of the bag's missing pairs can share a block: every other bag
//! vertex is adjacent to the whole rest of the bag, so it is forced into a
//! singleton. Partitions of the endpoint set are generated by restricted
//! growth strings and filtered for independence, which keeps each table at
//! a number of states bounded in the bag deficiency alone.

use std::collections::BTreeMap;

use crate::decomp::{NiceTreeDecomposition, NodeKind};
use crate::error::Result;
use crate::graph::Graph;

/// A partition of the bag into independent sets: blocks sorted internally
/// and by first element.
pub type BagPartition = Vec<Vec<usize>>;

#[derive(Clone, Debug)]
pub struct ColoringAnswer {
    pub colorable: bool,
    /// A proper coloring (vertex -> color in 0..ell) when colorable.
    pub coloring: Option<BTreeMap<usize, usize>>,
    /// Largest number of partition states any single bag contributed.
    pub max_states_per_bag: usize,
}

fn normalize(mut blocks: BagPartition) -> BagPartition {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.retain(|b| !b.is_empty());
    blocks.sort();
    blocks
}

/// All partitions of `bag` into independent sets in which every vertex
/// outside `loose` (the endpoints of the bag's missing pairs) forms a
/// singleton block.
pub fn bag_partitions(g: &Graph, bag: &[usize], deficiency: &[(usize, usize)]) -> Vec<BagPartition> {
    let mut loose: Vec<usize> = deficiency.iter().flat_map(|&(a, b)| [a, b]).collect();
    loose.sort_unstable();
    loose.dedup();
    let forced: Vec<usize> = bag.iter().copied().filter(|v| !loose.contains(v)).collect();

    // restricted growth strings over the loose vertices
    let mut out = Vec::new();
    let mut rgs = vec![0usize; loose.len()];
    loop {
        let blocks_count = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks: BagPartition = vec![Vec::new(); blocks_count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(loose[i]);
        }
        if blocks.iter().all(|b| g.is_independent_set(b)) {
            let mut full = blocks;
            for &v in &forced {
                full.push(vec![v]);
            }
            out.push(normalize(full));
        }
        // next restricted growth string
        let mut i = loose.len();
        loop {
            if i == 0 {
                out.sort();
                out.dedup();
                return out;
            }
            i -= 1;
            let cap = rgs[..i].iter().copied().max().map_or(0, |m| m + 1);
            if rgs[i] < cap {
                rgs[i] += 1;
                for r in rgs[i + 1..].iter_mut() {
                    *r = 0;
                }
                break;
            }
            // carry
        }
    }
}

fn remove_vertex(p: &BagPartition, v: usize) -> BagPartition {
    let mut out = Vec::new();
    for b in p {
        let nb: Vec<usize> = b.iter().copied().filter(|&u| u != v).collect();
        if !nb.is_empty() {
            out.push(nb);
        }
    }
    normalize(out)
}

type Payload = BTreeMap<usize, usize>; // vertex -> color over the processed part
type Table = BTreeMap<BagPartition, Payload>; // feasible states only

/// Renumbers a child payload so block colors follow the parent partition's
/// block order and private classes (colors not seen on the bag) come after.
fn canonical_colors(partition: &BagPartition, payload: &Payload) -> Payload {
    let blocks = partition.len();
    let mut rename: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, block) in partition.iter().enumerate() {
        rename.insert(payload[&block[0]], i);
    }
    let mut next = blocks;
    let mut out = BTreeMap::new();
    // deterministic order of private classes: by smallest vertex
    for (&v, &c) in payload {
        let nc = match rename.get(&c) {
            Some(&i) => i,
            None => {
                rename.insert(c, next);
                next += 1;
                next - 1
            }
        };
        out.insert(v, nc);
    }
    out
}

/// Decides whether `g` is ell-colorable, with a witness coloring.
pub fn solve_coloring(g: &Graph, ell: usize, nice: &NiceTreeDecomposition) -> Result<ColoringAnswer> {
    nice.validate_nice(g)?;
    let order = nice.bottom_up();
    let mut tables: Vec<Option<Table>> = vec![None; nice.len()];
    let mut max_states = 0usize;

    for &idx in &order {
        let node = nice.node(idx);
        let states = bag_partitions(g, &node.bag, &node.deficiency);
        max_states = max_states.max(states.len());
        let mut table: Table = BTreeMap::new();

        match node.kind {
            NodeKind::Leaf => {
                table.insert(vec![], BTreeMap::new());
            }
            NodeKind::Introduce(v) => {
                let child = tables[node.children[0]].as_ref().expect("child done");
                for state in &states {
                    if state.len() > ell {
                        continue;
                    }
                    let child_state = remove_vertex(state, v);
                    let Some(payload) = child.get(&child_state) else {
                        continue;
                    };
                    // color v: its block's color if shared, else the first
                    // color unused by other blocks
                    let vb = state.iter().position(|b| b.contains(&v)).expect("v in its block");
                    let mut payload = canonical_colors(&child_state, payload);
                    let color = if state[vb].len() > 1 {
                        let mate = state[vb].iter().copied().find(|&u| u != v).unwrap();
                        payload[&mate]
                    } else {
                        let used: Vec<usize> = state
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != vb)
                            .map(|(_, b)| payload[&b[0]])
                            .collect();
                        (0..ell).find(|c| !used.contains(c)).expect("block count is at most ell")
                    };
                    payload.insert(v, color);
                    table.insert(state.clone(), payload);
                }
            }
            NodeKind::Forget(v) => {
                let child = tables[node.children[0]].as_ref().expect("child done");
                for (child_state, payload) in child {
                    let state = remove_vertex(child_state, v);
                    table.entry(state).or_insert_with(|| payload.clone());
                }
            }
            NodeKind::Join => {
                let left = tables[node.children[0]].as_ref().expect("child done");
                let right = tables[node.children[1]].as_ref().expect("child done");
                for (state, pl) in left {
                    let Some(pr) = right.get(state) else { continue };
                    let a = canonical_colors(state, pl);
                    let b = canonical_colors(state, pr);
                    // block colors now agree; private classes of both sides
                    // reuse the palette above the block colors
                    let mut merged = a;
                    for (&v, &c) in &b {
                        merged.insert(v, c);
                    }
                    if merged.values().any(|&c| c >= ell) {
                        continue;
                    }
                    table.insert(state.clone(), merged);
                }
            }
        }
        for &c in &node.children {
            tables[c] = None;
        }
        tables[idx] = Some(table);
    }

    let root = tables[nice.root].as_ref().expect("root done");
    match root.get(&vec![]) {
        Some(payload) => {
            debug_assert!(payload.len() == g.n());
            Ok(ColoringAnswer {
                colorable: true,
                coloring: Some(payload.clone()),
                max_states_per_bag: max_states,
            })
        }
        None => Ok(ColoringAnswer {
            colorable: false,
            coloring: None,
            max_states_per_bag: max_states,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fillin::kalmost_nice_decomposition;
    use crate::graph::Graph;

    fn colorable(g: &Graph, ell: usize, k: usize) -> bool {
        let (nice, _) = kalmost_nice_decomposition(g, k).unwrap().expect("within budget");
        let ans = solve_coloring(g, ell, &nice).unwrap();
        if let Some(c) = &ans.coloring {
            for (u, v) in g.edges() {
                assert_ne!(c[&u], c[&v], "improper witness coloring");
            }
            assert!(c.values().all(|&x| x < ell));
        }
        ans.colorable
    }

    #[test]
    fn odd_cycle_needs_three() {
        let c5 = Graph::cycle(5);
        assert!(colorable(&c5, 3, 2));
        assert!(!colorable(&c5, 2, 2));
    }

    #[test]
    fn complete_graph_needs_n() {
        let k4 = Graph::complete(4);
        assert!(colorable(&k4, 4, 0));
        assert!(!colorable(&k4, 3, 0));
    }

    #[test]
    fn matches_chromatic_oracle() {
        let mut r = crate::gen::rng(55);
        for _ in 0..20 {
            let g = crate::gen::random_with_fillin_at_most(9, 3, 0.5, &mut r);
            let chi = crate::oracle::chromatic_number(&g).unwrap();
            let (nice, _) = kalmost_nice_decomposition(&g, 3).unwrap().unwrap();
            for ell in 1..=5 {
                let ans = solve_coloring(&g, ell, &nice).unwrap();
                assert_eq!(ans.colorable, ell >= chi, "ell={} chi={} g={:?}", ell, chi, g);
            }
        }
    }

    #[test]
    fn partition_enumeration_respects_independence() {
        let g = Graph::path(4); // bag of all four vertices
        let bag = vec![0, 1, 2, 3];
        let (_, deficiency) = crate::fillin::bag_deficiency(&g, &bag);
        let parts = bag_partitions(&g, &bag, &deficiency);
        for p in &parts {
            for b in p {
                assert!(g.is_independent_set(b));
            }
        }
        // vertices 0 and 1 are adjacent, never share a block
        assert!(parts.iter().all(|p| p.iter().all(|b| !(b.contains(&0) && b.contains(&1)))));
    }
}
