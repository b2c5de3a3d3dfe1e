//! Independent-set kernel for graphs within k added edges of a split
//! graph. Reaches at most 2k^2(k+2) vertices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::fillin::{Modulator, TargetClass};
use crate::graph::{EdgeSet, Graph};
use crate::kernel::{
    delete_by_labels, labels_of, neighbor_labels, KernelInstance, SplitPartition, TraceOp, Verdict,
};

/// Minimum symmetric-difference edit set to a split graph, via the degree
/// sequence: sort degrees descending, split at the largest m with
/// d_m >= m - 1, complete the top part and empty the bottom part.
/// Also returns the clique side realizing the minimum.
pub fn split_edit_with_partition(g: &Graph) -> (EdgeSet, Vec<usize>) {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut m_star = 0;
    for m in 1..=n {
        if g.degree(by_degree[m - 1]) >= m - 1 {
            m_star = m;
        }
    }
    let clique: Vec<usize> = {
        let mut c = by_degree[..m_star].to_vec();
        c.sort_unstable();
        c
    };
    let cset: BTreeSet<usize> = clique.iter().copied().collect();
    let mut edit = EdgeSet::new();
    for i in 0..clique.len() {
        for j in i + 1..clique.len() {
            if !g.has_edge(clique[i], clique[j]) {
                edit.insert(clique[i], clique[j]).unwrap();
            }
        }
    }
    for (u, v) in g.edges() {
        if !cset.contains(&u) && !cset.contains(&v) {
            edit.insert(u, v).unwrap();
        }
    }
    (edit, clique)
}

/// Minimum edit set only.
pub fn split_edit(g: &Graph) -> EdgeSet {
    split_edit_with_partition(g).0
}

/// Turns a vertex cover into a split modulator: the non-edges inside the
/// cover. Rejects a non-cover, naming an uncovered edge.
pub fn vc_to_split_modulator(g: &Graph, vc: &[usize]) -> Result<Modulator> {
    let cover: BTreeSet<usize> = vc.iter().copied().collect();
    for (u, v) in g.edges() {
        if !cover.contains(&u) && !cover.contains(&v) {
            return Err(Error::NotVertexCover(vc.to_vec(), u, v));
        }
    }
    let mut pairs = EdgeSet::new();
    let sorted: Vec<usize> = cover.iter().copied().collect();
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            if !g.has_edge(sorted[i], sorted[j]) {
                pairs.insert(sorted[i], sorted[j]).unwrap();
            }
        }
    }
    Ok(Modulator {
        pairs,
        target: TargetClass::Split,
    })
}

struct State {
    g: Graph,
    ell: i64,
    x: BTreeSet<usize>,
    y: BTreeSet<usize>,
    i: BTreeSet<usize>,
    trace: Vec<TraceOp>,
}

/// Reduces an independent-set instance on a graph that is at most `k`
/// added edges from split. Returns the reduced instance, or a verdict
/// that the graph is out of class.
pub fn split_is_kernel(g: &Graph, ell: i64, k: usize) -> KernelInstance {
    let (edit, clique_side) = split_edit_with_partition(g);
    let mut trace = vec![TraceOp::SplitEdit {
        added: edit
            .iter()
            .filter(|&(u, v)| !g.has_edge(u, v))
            .map(|(u, v)| (g.label(u), g.label(v)))
            .collect(),
        deleted: edit
            .iter()
            .filter(|&(u, v)| g.has_edge(u, v))
            .map(|(u, v)| (g.label(u), g.label(v)))
            .collect(),
        clique_side: labels_of(g, &clique_side),
    }];
    if edit.len() > k {
        trace.push(TraceOp::StopEditBudget { edit_size: edit.len() });
        return KernelInstance::verdict_only(Verdict::NotInClass, ell, trace);
    }

    // everything below works in labels
    let deleted: Vec<(usize, usize)> = edit
        .iter()
        .filter(|&(u, v)| g.has_edge(u, v))
        .map(|(u, v)| (g.label(u).min(g.label(v)), g.label(u).max(g.label(v))))
        .collect();
    let added: Vec<(usize, usize)> = edit
        .iter()
        .filter(|&(u, v)| !g.has_edge(u, v))
        .map(|(u, v)| (g.label(u).min(g.label(v)), g.label(u).max(g.label(v))))
        .collect();
    let clique_labels: BTreeSet<usize> = clique_side.iter().map(|&v| g.label(v)).collect();
    let x: BTreeSet<usize> = added.iter().flat_map(|&(a, b)| [a, b]).collect();
    let y: BTreeSet<usize> = clique_labels.difference(&x).copied().collect();
    let i: BTreeSet<usize> = g
        .vertices()
        .map(|v| g.label(v))
        .filter(|l| !clique_labels.contains(l))
        .collect();
    let mut st = State {
        g: g.clone(),
        ell,
        x,
        y,
        i,
        trace,
    };

    // resolve the deleted edges one by one
    for (u, v) in deleted {
        if !st.i.contains(&u) || !st.i.contains(&v) {
            continue; // an endpoint already left the independent side
        }
        let non_u: Vec<usize> = st.y.iter().copied().filter(|&t| !adjacent(&st.g, u, t)).collect();
        let non_v: Vec<usize> = st.y.iter().copied().filter(|&t| !adjacent(&st.g, v, t)).collect();
        if non_u.len() >= k + 2 && non_v.len() >= k + 2 {
            st.trace.push(TraceOp::StopDoubleNonNeighbor { edge: (u, v) });
            return KernelInstance::verdict_only(Verdict::NotInClass, st.ell, st.trace);
        }
        let (moved, losses) = if (non_u.len(), u) <= (non_v.len(), v) {
            (u, non_u)
        } else {
            (v, non_v)
        };
        st.i.remove(&moved);
        st.x.insert(moved);
        for &t in &losses {
            st.y.remove(&t);
            st.x.insert(t);
        }
        st.trace.push(TraceOp::ResolveDeletedEdge {
            edge: (u, v),
            moved,
            clique_losses: losses,
        });
    }

    let split_state = SplitPartition {
        x: st.x.iter().copied().collect(),
        y: st.y.iter().copied().collect(),
        i: st.i.iter().copied().collect(),
        deleted_edges: vec![],
    };

    // clique-side vertices with independent-side neighbors are deleted
    let trimmed: Vec<usize> = st
        .y
        .iter()
        .copied()
        .filter(|&t| neighbor_labels(&st.g, t).iter().any(|l| st.i.contains(l)))
        .collect();
    if !trimmed.is_empty() {
        st.g = delete_by_labels(&st.g, &trimmed);
        for t in &trimmed {
            st.y.remove(t);
        }
        st.trace.push(TraceOp::TrimCliqueNeighbors { deleted: trimmed });
    }

    // collapse what is left of the clique side into the independent side
    if !st.y.is_empty() {
        let kept = *st.y.iter().next().unwrap();
        let dropped: Vec<usize> = st.y.iter().copied().filter(|&t| t != kept).collect();
        if !dropped.is_empty() {
            st.g = delete_by_labels(&st.g, &dropped);
        }
        st.y.clear();
        st.i.insert(kept);
        st.trace.push(TraceOp::CollapseClique {
            kept,
            deleted: dropped,
        });
    }

    // modulator endpoints seeing many independent vertices are deletable
    loop {
        let candidate = st
            .x
            .iter()
            .copied()
            .find(|&u| neighbor_labels(&st.g, u).iter().filter(|l| st.i.contains(l)).count() >= 2 * k);
        match candidate {
            Some(u) => {
                st.g = delete_by_labels(&st.g, &[u]);
                st.x.remove(&u);
                st.trace.push(TraceOp::DropHighDegree { deleted: u });
            }
            None => break,
        }
    }

    // isolated vertices join any optimal solution
    loop {
        let iso = st
            .g
            .vertices()
            .find(|&v| st.g.degree(v) == 0)
            .map(|v| st.g.label(v));
        match iso {
            Some(u) => {
                st.g = delete_by_labels(&st.g, &[u]);
                st.x.remove(&u);
                st.i.remove(&u);
                st.ell -= 1;
                st.trace.push(TraceOp::DropIsolated { deleted: u });
            }
            None => break,
        }
    }

    KernelInstance {
        verdict: Verdict::Reduced,
        graph: Some(st.g),
        weights: None,
        threshold: st.ell,
        trace: st.trace,
        split_state: Some(split_state),
        product_members: None,
    }
}

fn adjacent(g: &Graph, la: usize, lb: usize) -> bool {
    let a = g.index_of_label(la).expect("label present");
    let b = g.index_of_label(lb).expect("label present");
    g.has_edge(a, b)
}

/// Mechanically replays a recorded split-kernel trace on a fresh copy of
/// the input instance.
pub fn replay_split(g: &Graph, ell: i64, trace: &[TraceOp]) -> KernelInstance {
    let mut cur = g.clone();
    let mut cur_ell = ell;
    let mut verdict = Verdict::Reduced;
    for op in trace {
        match op {
            TraceOp::SplitEdit { .. } => {}
            TraceOp::ResolveDeletedEdge { .. } => {}
            TraceOp::TrimCliqueNeighbors { deleted } => {
                cur = delete_by_labels(&cur, deleted);
            }
            TraceOp::CollapseClique { deleted, .. } => {
                if !deleted.is_empty() {
                    cur = delete_by_labels(&cur, deleted);
                }
            }
            TraceOp::DropHighDegree { deleted } => {
                cur = delete_by_labels(&cur, &[*deleted]);
            }
            TraceOp::DropIsolated { deleted } => {
                cur = delete_by_labels(&cur, &[*deleted]);
                cur_ell -= 1;
            }
            TraceOp::StopEditBudget { .. } | TraceOp::StopDoubleNonNeighbor { .. } => {
                verdict = Verdict::NotInClass;
            }
            _ => {}
        }
    }
    if verdict == Verdict::NotInClass {
        KernelInstance::verdict_only(verdict, cur_ell, trace.to_vec())
    } else {
        KernelInstance {
            verdict,
            graph: Some(cur),
            weights: None,
            threshold: cur_ell,
            trace: trace.to_vec(),
            split_state: None,
            product_members: None,
        }
    }
}
