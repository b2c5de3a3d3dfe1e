//! Shared engine for the maximum-weight induced subgraph problems whose
//! partial solutions are a bag subset together with a vertex mapping into a
//! fixed palette (colors, or vertices of a pattern graph).
//!
//! Table layout per node: every candidate subset S of the bag paired with
//! every mapping of S that is valid on G[S]; infeasible states carry an
//! explicit marker. The answer sits at the root's empty state.

use std::collections::BTreeMap;

use crate::decomp::{NiceTreeDecomposition, NodeKind};
use crate::dp::candidates::enumerate_bag_candidates;
use crate::dp::{better_max, Cost};
use crate::error::Result;
use crate::graph::{Graph, WeightMap};

#[derive(Clone, Debug)]
pub(crate) struct Entry {
    pub value: i64,
    pub witness: Vec<usize>,
    pub mapping: BTreeMap<usize, usize>,
}

type StateKey = (Vec<usize>, Vec<usize>);
type Table = BTreeMap<StateKey, Cost<Entry>>;

/// Is the mapping `colors` valid on the subgraph induced by `s`? Every
/// edge's endpoint pair must be allowed by the palette relation.
fn valid_on(g: &Graph, s: &[usize], colors: &[usize], pair_ok: &dyn Fn(usize, usize) -> bool) -> bool {
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if g.has_edge(s[i], s[j]) && !pair_ok(colors[i], colors[j]) {
                return false;
            }
        }
    }
    true
}

fn mappings_of(len: usize, palette: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; len];
    if palette == 0 {
        return if len == 0 { vec![vec![]] } else { vec![] };
    }
    loop {
        out.push(cur.clone());
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            cur[i] += 1;
            if cur[i] < palette {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

fn relax(table: &mut Table, key: StateKey, cand: Entry) {
    match table.get_mut(&key) {
        Some(Cost::Feasible(e)) => {
            if better_max(cand.value, &cand.witness, &(e.value, e.witness.clone())) {
                *e = cand;
            }
        }
        Some(slot @ Cost::Infeasible) => *slot = Cost::Feasible(cand),
        None => {
            table.insert(key, Cost::Feasible(cand));
        }
    }
}

fn lookup(table: &Table, key: &StateKey) -> Option<Entry> {
    match table.get(key) {
        Some(Cost::Feasible(e)) => Some(e.clone()),
        _ => None,
    }
}

/// Runs the DP; `palette` is the number of mapping targets and `pair_ok`
/// says which target pairs may sit on an edge. Candidate subsets are
/// enumerated with `d_candidates` parts per bag.
pub(crate) fn solve_mapped(
    g: &Graph,
    w: &WeightMap,
    nice: &NiceTreeDecomposition,
    d_candidates: usize,
    palette: usize,
    pair_ok: &dyn Fn(usize, usize) -> bool,
) -> Result<Entry> {
    nice.validate_nice(g)?;
    w.validate_positive(g)?;

    let order = nice.bottom_up();
    let mut tables: Vec<Option<Table>> = vec![None; nice.len()];

    for &idx in &order {
        let node = nice.node(idx);
        let bag = &node.bag;
        let mut table: Table = BTreeMap::new();
        // enumerate all candidate states of this node, marking them
        // infeasible until a transition fills them
        let family = enumerate_bag_candidates(g, bag, d_candidates);
        for s in &family.sets {
            for colors in mappings_of(s.len(), palette) {
                if valid_on(g, s, &colors, pair_ok) {
                    table.insert((s.clone(), colors), Cost::Infeasible);
                }
            }
        }

        match node.kind {
            NodeKind::Leaf => {
                relax(
                    &mut table,
                    (vec![], vec![]),
                    Entry {
                        value: 0,
                        witness: vec![],
                        mapping: BTreeMap::new(),
                    },
                );
            }
            NodeKind::Introduce(v) => {
                let child = tables[node.children[0]].as_ref().expect("child done");
                let keys: Vec<StateKey> = table.keys().cloned().collect();
                for (s, colors) in keys {
                    match s.iter().position(|&u| u == v) {
                        None => {
                            if let Some(e) = lookup(child, &(s.clone(), colors.clone())) {
                                relax(&mut table, (s, colors), e);
                            }
                        }
                        Some(pos) => {
                            let mut s_child = s.clone();
                            s_child.remove(pos);
                            let mut c_child = colors.clone();
                            let cv = c_child.remove(pos);
                            if let Some(e) = lookup(child, &(s_child, c_child)) {
                                let mut witness = e.witness.clone();
                                witness.push(v);
                                witness.sort_unstable();
                                let mut mapping = e.mapping.clone();
                                mapping.insert(v, cv);
                                relax(
                                    &mut table,
                                    (s, colors),
                                    Entry {
                                        value: e.value + w.get(v),
                                        witness,
                                        mapping,
                                    },
                                );
                            }
                        }
                    }
                }
            }
            NodeKind::Forget(fv) => {
                let child = tables[node.children[0]].as_ref().expect("child done");
                let keys: Vec<StateKey> = table.keys().cloned().collect();
                for (s, colors) in keys {
                    if let Some(e) = lookup(child, &(s.clone(), colors.clone())) {
                        relax(&mut table, (s.clone(), colors.clone()), e);
                    }
                    // keep the forgotten vertex in the child state
                    let pos = s.iter().position(|&u| u > fv).unwrap_or(s.len());
                    let mut s_child = s.clone();
                    s_child.insert(pos, fv);
                    for cv in 0..palette {
                        let mut c_child = colors.clone();
                        c_child.insert(pos, cv);
                        if let Some(e) = lookup(child, &(s_child.clone(), c_child)) {
                            relax(&mut table, (s.clone(), colors.clone()), e);
                        }
                    }
                }
            }
            NodeKind::Join => {
                let left = tables[node.children[0]].as_ref().expect("child done");
                let right = tables[node.children[1]].as_ref().expect("child done");
                let keys: Vec<StateKey> = table.keys().cloned().collect();
                for key in keys {
                    let (Some(a), Some(b)) = (lookup(left, &key), lookup(right, &key)) else {
                        continue;
                    };
                    let shared: i64 = key.0.iter().map(|&v| w.get(v)).sum();
                    let mut witness: Vec<usize> = a.witness.iter().chain(b.witness.iter()).copied().collect();
                    witness.sort_unstable();
                    witness.dedup();
                    let mut mapping = a.mapping.clone();
                    for (k, v) in &b.mapping {
                        mapping.insert(*k, *v);
                    }
                    relax(
                        &mut table,
                        key,
                        Entry {
                            value: a.value + b.value - shared,
                            witness,
                            mapping,
                        },
                    );
                }
            }
        }
        for &c in &node.children {
            tables[c] = None;
        }
        tables[idx] = Some(table);
    }

    let root = tables[nice.root].as_ref().expect("root done");
    let entry = lookup(root, &(vec![], vec![])).expect("empty set is always feasible");
    Ok(entry)
}
