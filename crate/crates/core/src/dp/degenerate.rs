//! Maximum-weight induced subgraph of degeneracy at most d.
//!
//! A state is the bag intersection S together with an ordering of S and
//! the vector of residual degrees each S-vertex has toward the rest of the
//! partial solution. Two partial solutions joined over a shared bag stay
//! compatible exactly when the summed residual degrees, corrected by the
//! degrees inside S itself, stay at most d; orderings interleave
//! segment-wise. Introduced vertices only ever neighbor bag vertices, so
//! their residual degree is read off the ordering directly.

use std::collections::BTreeMap;

use crate::decomp::{NiceTreeDecomposition, NodeKind};
use crate::dp::{better_max, Assignment, Solution};
use crate::error::{Error, Result};
use crate::graph::{Graph, WeightMap};

type StateKey = (Vec<usize>, Vec<u8>); // ordering of S, residual degrees

#[derive(Clone, Debug)]
struct Entry {
    value: i64,
    witness: Vec<usize>,
    /// ordering of the whole partial solution, extending the state ordering
    ordering: Vec<usize>,
}

type Table = BTreeMap<StateKey, Entry>;

fn relax(table: &mut Table, key: StateKey, cand: Entry) {
    match table.get_mut(&key) {
        Some(e) => {
            if better_max(cand.value, &cand.witness, &(e.value, e.witness.clone())) {
                *e = cand;
            }
        }
        None => {
            table.insert(key, cand);
        }
    }
}

/// Later-degree of each position inside the induced ordering on S only.
fn within_degrees(g: &Graph, pi: &[usize]) -> Vec<u8> {
    (0..pi.len())
        .map(|i| pi[i + 1..].iter().filter(|&&u| g.has_edge(pi[i], u)).count() as u8)
        .collect()
}

/// Splits `ordering` into |pi|+1 segments of non-S vertices around the
/// S-vertices, which appear in `pi` order.
fn segments(ordering: &[usize], pi: &[usize]) -> Vec<Vec<usize>> {
    let mut segs = vec![Vec::new()];
    let mut next = 0usize;
    for &v in ordering {
        if next < pi.len() && v == pi[next] {
            next += 1;
            segs.push(Vec::new());
        } else {
            segs.last_mut().unwrap().push(v);
        }
    }
    debug_assert_eq!(next, pi.len());
    segs
}

pub fn solve_d_degenerate(g: &Graph, w: &WeightMap, d: usize, nice: &NiceTreeDecomposition) -> Result<Solution> {
    nice.validate_nice(g)?;
    w.validate_positive(g)?;
    if d > u8::MAX as usize {
        return Err(Error::BadConfig("degeneracy bound too large".into()));
    }
    let dd = d as u8;

    let order = nice.bottom_up();
    let mut tables: Vec<Option<Table>> = vec![None; nice.len()];

    for &idx in &order {
        let node = nice.node(idx);
        let mut table: Table = BTreeMap::new();
        match node.kind {
            NodeKind::Leaf => {
                table.insert(
                    (vec![], vec![]),
                    Entry {
                        value: 0,
                        witness: vec![],
                        ordering: vec![],
                    },
                );
            }
            NodeKind::Introduce(v) => {
                let child = tables[node.children[0]].take().expect("child done");
                for ((pi, delta), e) in child {
                    // v stays outside the solution
                    relax(&mut table, (pi.clone(), delta.clone()), e.clone());
                    // v enters at every position of the ordering
                    for at in 0..=pi.len() {
                        let dv = pi[at..].iter().filter(|&&u| g.has_edge(u, v)).count();
                        if dv > d {
                            continue;
                        }
                        let mut ok = true;
                        let mut ndelta = Vec::with_capacity(delta.len() + 1);
                        for j in 0..at {
                            let bump = if g.has_edge(pi[j], v) { 1 } else { 0 };
                            if delta[j] + bump > dd {
                                ok = false;
                                break;
                            }
                            ndelta.push(delta[j] + bump);
                        }
                        if !ok {
                            continue;
                        }
                        ndelta.push(dv as u8);
                        ndelta.extend_from_slice(&delta[at..]);
                        let mut npi = pi.clone();
                        npi.insert(at, v);
                        let mut witness = e.witness.clone();
                        witness.push(v);
                        witness.sort_unstable();
                        let mut ordering = e.ordering.clone();
                        let opos = if at == pi.len() {
                            ordering.len()
                        } else {
                            ordering.iter().position(|&u| u == pi[at]).unwrap()
                        };
                        ordering.insert(opos, v);
                        relax(
                            &mut table,
                            (npi, ndelta),
                            Entry {
                                value: e.value + w.get(v),
                                witness,
                                ordering,
                            },
                        );
                    }
                }
            }
            NodeKind::Forget(fv) => {
                let child = tables[node.children[0]].take().expect("child done");
                for ((pi, delta), e) in child {
                    match pi.iter().position(|&u| u == fv) {
                        None => relax(&mut table, (pi, delta), e),
                        Some(p) => {
                            let mut npi = pi.clone();
                            npi.remove(p);
                            let mut ndelta = delta.clone();
                            ndelta.remove(p);
                            relax(&mut table, (npi, ndelta), e);
                        }
                    }
                }
            }
            NodeKind::Join => {
                let left = tables[node.children[0]].take().expect("child done");
                let right = tables[node.children[1]].take().expect("child done");
                let mut right_by_pi: BTreeMap<Vec<usize>, Vec<(Vec<u8>, Entry)>> = BTreeMap::new();
                for ((pi, delta), e) in right {
                    right_by_pi.entry(pi).or_default().push((delta, e));
                }
                for ((pi, d1), e1) in left {
                    let Some(rs) = right_by_pi.get(&pi) else { continue };
                    let ds = within_degrees(g, &pi);
                    for (d2, e2) in rs {
                        let mut ok = true;
                        let mut nd = Vec::with_capacity(pi.len());
                        for j in 0..pi.len() {
                            let sum = d1[j] as i32 + d2[j] as i32 - ds[j] as i32;
                            if sum > dd as i32 {
                                ok = false;
                                break;
                            }
                            nd.push(sum as u8);
                        }
                        if !ok {
                            continue;
                        }
                        let shared: i64 = pi.iter().map(|&v| w.get(v)).sum();
                        let mut witness: Vec<usize> = e1.witness.iter().chain(e2.witness.iter()).copied().collect();
                        witness.sort_unstable();
                        witness.dedup();
                        // interleave the two orderings around the shared S
                        let s1 = segments(&e1.ordering, &pi);
                        let s2 = segments(&e2.ordering, &pi);
                        let mut ordering = Vec::with_capacity(witness.len());
                        for i in 0..s1.len() {
                            ordering.extend_from_slice(&s1[i]);
                            ordering.extend_from_slice(&s2[i]);
                            if i < pi.len() {
                                ordering.push(pi[i]);
                            }
                        }
                        relax(
                            &mut table,
                            (pi.clone(), nd),
                            Entry {
                                value: e1.value + e2.value - shared,
                                witness,
                                ordering,
                            },
                        );
                    }
                }
            }
        }
        tables[idx] = Some(table);
    }

    let root = tables[nice.root].as_ref().expect("root done");
    let entry = root.get(&(vec![], vec![])).expect("empty solution always feasible");
    debug_assert!(crate::oracle::degeneracy_of_subset(g, &entry.witness) <= d);
    Ok(Solution {
        value: entry.value,
        witness: entry.witness.clone(),
        assignment: Some(Assignment::Ordering(entry.ordering.clone())),
    })
}
