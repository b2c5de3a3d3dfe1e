//! Asteroidal-triple machinery: finding ATs, shrinking witnesses to
//! inclusion-minimal form, classifying witness shapes, and the search for
//! touching ATs used by the interval kernelization pipeline.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, EditMode, Graph};

/// Shape of a minimal asteroidal witness. The two parametric families are
/// indexed by their base-path length: `F3(r)` has `r + 4` vertices (a path
/// of r vertices, a hub adjacent to the whole path, three pendant
/// terminals), `F4(r)` has `r + 5` (a path of r vertices, two adjacent hubs
/// covering the path, terminals of degree two). `F1` is the subdivided
/// claw, `F2` the whipping top, `F5` the 6-cycle with alternating
/// terminals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessShape {
    F1,
    F2,
    F3(usize),
    F4(usize),
    F5,
    Unclassified,
}

impl std::fmt::Display for WitnessShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WitnessShape::F1 => write!(f, "F1"),
            WitnessShape::F2 => write!(f, "F2"),
            WitnessShape::F3(r) => write!(f, "F3({})", r),
            WitnessShape::F4(r) => write!(f, "F4({})", r),
            WitnessShape::F5 => write!(f, "F5"),
            WitnessShape::Unclassified => write!(f, "unclassified"),
        }
    }
}

/// A vertex-minimal induced subgraph in which the terminals form an
/// asteroidal triple. Vertices are host-graph indices.
#[derive(Clone, Debug)]
pub struct AtWitness {
    pub terminals: [usize; 3],
    pub vertices: Vec<usize>,
    pub shape: WitnessShape,
}

fn closed_neighborhood(g: &Graph, v: usize) -> BTreeSet<usize> {
    let mut s: BTreeSet<usize> = g.neighbors(v).iter().copied().collect();
    s.insert(v);
    s
}

/// Are `s` and `t` connected inside `within` minus the closed neighborhood
/// of `x`?
fn connected_avoiding(g: &Graph, within: &BTreeSet<usize>, s: usize, t: usize, x: usize) -> bool {
    let forbidden = closed_neighborhood(g, x);
    if forbidden.contains(&s) || forbidden.contains(&t) {
        return false;
    }
    let mut seen = BTreeSet::new();
    let mut stack = vec![s];
    seen.insert(s);
    while let Some(v) = stack.pop() {
        if v == t {
            return true;
        }
        for &u in g.neighbors(v) {
            if within.contains(&u) && !forbidden.contains(&u) && seen.insert(u) {
                stack.push(u);
            }
        }
    }
    false
}

/// Asteroidal-triple test restricted to the induced subgraph on `within`.
pub fn is_at_within(g: &Graph, within: &BTreeSet<usize>, t: [usize; 3]) -> bool {
    let [a, b, c] = t;
    if !(within.contains(&a) && within.contains(&b) && within.contains(&c)) {
        return false;
    }
    if g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c) {
        return false;
    }
    connected_avoiding(g, within, a, b, c)
        && connected_avoiding(g, within, a, c, b)
        && connected_avoiding(g, within, b, c, a)
}

pub fn is_at(g: &Graph, t: [usize; 3]) -> bool {
    let within: BTreeSet<usize> = g.vertices().collect();
    is_at_within(g, &within, t)
}

/// First asteroidal triple in lexicographic order, drawn from `restrict`
/// when given.
pub fn find_at(g: &Graph, restrict: Option<&[usize]>) -> Option<[usize; 3]> {
    let pool: Vec<usize> = match restrict {
        Some(r) => Graph::sorted_unique(r),
        None => g.vertices().collect(),
    };
    let within: BTreeSet<usize> = g.vertices().collect();
    for i in 0..pool.len() {
        for j in i + 1..pool.len() {
            if g.has_edge(pool[i], pool[j]) {
                continue;
            }
            for k in j + 1..pool.len() {
                let t = [pool[i], pool[j], pool[k]];
                if is_at_within(g, &within, t) {
                    return Some(t);
                }
            }
        }
    }
    None
}

/// Shrinks the vertex set `allowed` to an inclusion-minimal set on which
/// `t` is still an asteroidal triple. Ties between deletable vertices are
/// broken by lowest index, rescanning after each deletion.
fn minimize_within(g: &Graph, allowed: &BTreeSet<usize>, t: [usize; 3]) -> BTreeSet<usize> {
    let mut w = allowed.clone();
    loop {
        let mut shrunk = false;
        let candidates: Vec<usize> = w.iter().copied().filter(|v| !t.contains(v)).collect();
        for v in candidates {
            let mut trial = w.clone();
            trial.remove(&v);
            if is_at_within(g, &trial, t) {
                w = trial;
                shrunk = true;
                break;
            }
        }
        if !shrunk {
            return w;
        }
    }
}

/// Vertex-minimal induced witness for the triple `t`, classified.
pub fn minimize_at_witness(g: &Graph, t: [usize; 3]) -> Result<AtWitness> {
    let within: BTreeSet<usize> = g.vertices().collect();
    if !is_at_within(g, &within, t) {
        return Err(Error::NotAsteroidalTriple(t));
    }
    let w = minimize_within(g, &within, t);
    let vertices: Vec<usize> = w.iter().copied().collect();
    let shape = classify_in_host(g, &vertices, t);
    Ok(AtWitness {
        terminals: t,
        vertices,
        shape,
    })
}

/// Classifies the witness induced on `vertices` of `g` with terminals `t`.
fn classify_in_host(g: &Graph, vertices: &[usize], t: [usize; 3]) -> WitnessShape {
    let f = g.induced_subgraph(vertices).expect("witness vertices in host");
    let map = |v: usize| vertices.iter().position(|&u| u == v).expect("terminal in witness");
    classify_witness(&f, [map(t[0]), map(t[1]), map(t[2])])
}

/// Edge list of the whipping top on vertices 0..7: diamond 0,1,2,3
/// (0 and 1 the adjacent hubs, 2 and 3 its poles), terminals 4 (on 0 and
/// 2), 5 (on 0 and 3), and 6 (pendant on 1).
const WHIPPING_TOP_EDGES: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 2),
    (1, 3),
    (0, 4),
    (2, 4),
    (0, 5),
    (3, 5),
    (1, 6),
];
const WHIPPING_TOP_TERMINALS: [usize; 3] = [4, 5, 6];

/// Shape classification by isomorphism against the witness templates, with
/// terminals mapping to terminals. Returns `Unclassified` when nothing
/// matches (for instance a chordless cycle longer than six).
pub fn classify_witness(f: &Graph, t: [usize; 3]) -> WitnessShape {
    let n = f.n();
    let tset: BTreeSet<usize> = t.iter().copied().collect();
    if tset.len() != 3 || t.iter().any(|&v| v >= n) {
        return WitnessShape::Unclassified;
    }
    if f.has_edge(t[0], t[1]) || f.has_edge(t[0], t[2]) || f.has_edge(t[1], t[2]) {
        return WitnessShape::Unclassified;
    }
    // F5: the 6-cycle, terminals alternating
    if n == 6 && f.m() == 6 && (0..6).all(|v| f.degree(v) == 2) && f.is_connected() {
        return WitnessShape::F5;
    }
    if n == 7 && matches_long_claw(f, &tset) {
        return WitnessShape::F1;
    }
    if n == 7 && matches_whipping_top(f, t) {
        return WitnessShape::F2;
    }
    if n >= 6 {
        if let Some(r) = matches_fan_family(f, t) {
            return WitnessShape::F3(r);
        }
    }
    if n >= 6 {
        if let Some(r) = matches_double_hub_family(f, t) {
            return WitnessShape::F4(r);
        }
    }
    WitnessShape::Unclassified
}

/// Subdivided claw: center of degree three, three middle vertices, three
/// pendant terminals.
fn matches_long_claw(f: &Graph, t: &BTreeSet<usize>) -> bool {
    if f.m() != 6 {
        return false;
    }
    let centers: Vec<usize> = f.vertices().filter(|&v| f.degree(v) == 3).collect();
    if centers.len() != 1 {
        return false;
    }
    let c = centers[0];
    for &mid in f.neighbors(c) {
        if f.degree(mid) != 2 {
            return false;
        }
        let leaf: Vec<usize> = f.neighbors(mid).iter().copied().filter(|&u| u != c).collect();
        if leaf.len() != 1 || f.degree(leaf[0]) != 1 || !t.contains(&leaf[0]) {
            return false;
        }
    }
    true
}

fn matches_whipping_top(f: &Graph, t: [usize; 3]) -> bool {
    if f.m() != WHIPPING_TOP_EDGES.len() {
        return false;
    }
    let template = Graph::from_edges(7, &WHIPPING_TOP_EDGES);
    isomorphic_with_terminals(f, t, &template, WHIPPING_TOP_TERMINALS)
}

/// F3(r): base path x1..xr, hub adjacent to the whole base, pendant
/// terminals on the two base ends and on the hub.
fn matches_fan_family(f: &Graph, t: [usize; 3]) -> Option<usize> {
    let n = f.n();
    if n < 6 {
        return None;
    }
    let r = n - 4;
    if f.m() != 2 * r + 2 {
        return None;
    }
    if t.iter().any(|&z| f.degree(z) != 1) {
        return None;
    }
    // the hub is the terminal-neighbor adjacent to every base vertex
    for (zi, &z2) in t.iter().enumerate() {
        let hub = f.neighbors(z2)[0];
        let others: Vec<usize> = (0..3).filter(|&i| i != zi).map(|i| t[i]).collect();
        let (z1, z3) = (others[0], others[1]);
        let base: Vec<usize> = f
            .vertices()
            .filter(|&v| v != hub && !t.contains(&v))
            .collect();
        if base.len() != r {
            continue;
        }
        if !base.iter().all(|&b| f.has_edge(hub, b)) {
            continue;
        }
        if f.degree(hub) != r + 1 {
            continue;
        }
        let e1 = f.neighbors(z1)[0];
        let e3 = f.neighbors(z3)[0];
        if e1 == e3 || !base.contains(&e1) || !base.contains(&e3) {
            continue;
        }
        if is_path_between(f, &base, e1, e3, hub) {
            return Some(r);
        }
    }
    None
}

/// F4(r): base path x1..xr, two adjacent hubs each adjacent to the whole
/// base, a terminal on the hub pair and one on each (end, hub) pair.
fn matches_double_hub_family(f: &Graph, t: [usize; 3]) -> Option<usize> {
    let n = f.n();
    if n < 6 {
        return None;
    }
    let r = n - 5;
    if f.m() != 3 * r + 6 {
        return None;
    }
    if t.iter().any(|&z| f.degree(z) != 2) {
        return None;
    }
    for (zi, &z2) in t.iter().enumerate() {
        let hubs = f.neighbors(z2).to_vec();
        if hubs.len() != 2 || !f.has_edge(hubs[0], hubs[1]) {
            continue;
        }
        let others: Vec<usize> = (0..3).filter(|&i| i != zi).map(|i| t[i]).collect();
        let base: Vec<usize> = f
            .vertices()
            .filter(|&v| !hubs.contains(&v) && !t.contains(&v))
            .collect();
        if base.len() != r {
            continue;
        }
        if !base.iter().all(|&b| f.has_edge(hubs[0], b) && f.has_edge(hubs[1], b)) {
            continue;
        }
        // each deep terminal sits on one hub and one base end
        for (h1, h3) in [(hubs[0], hubs[1]), (hubs[1], hubs[0])] {
            let (z1, z3) = (others[0], others[1]);
            let n1 = f.neighbors(z1).to_vec();
            let n3 = f.neighbors(z3).to_vec();
            if !n1.contains(&h1) || !n3.contains(&h3) {
                continue;
            }
            let e1: Vec<usize> = n1.iter().copied().filter(|&u| u != h1).collect();
            let e3: Vec<usize> = n3.iter().copied().filter(|&u| u != h3).collect();
            if e1.len() != 1 || e3.len() != 1 {
                continue;
            }
            let (e1, e3) = (e1[0], e3[0]);
            if !base.contains(&e1) || !base.contains(&e3) {
                continue;
            }
            if r == 1 {
                if e1 == e3 {
                    return Some(1);
                }
            } else if e1 != e3 && is_path_between_two_hubs(f, &base, e1, e3, h1, h3) {
                return Some(r);
            }
        }
    }
    None
}

/// Does `base` induce a path from `a` to `b` in `f`, ignoring `hub` edges?
fn is_path_between(f: &Graph, base: &[usize], a: usize, b: usize, hub: usize) -> bool {
    induced_path(f, base, a, b, &[hub])
}

fn is_path_between_two_hubs(f: &Graph, base: &[usize], a: usize, b: usize, h1: usize, h2: usize) -> bool {
    induced_path(f, base, a, b, &[h1, h2])
}

fn induced_path(f: &Graph, base: &[usize], a: usize, b: usize, hubs: &[usize]) -> bool {
    // degrees within the base must be a path with endpoints a and b
    if base.len() == 1 {
        return a == b && base[0] == a;
    }
    let inset: BTreeSet<usize> = base.iter().copied().collect();
    let _ = hubs;
    let mut ends = 0;
    for &v in base {
        let deg = f.neighbors(v).iter().filter(|u| inset.contains(u)).count();
        match deg {
            1 => {
                if v != a && v != b {
                    return false;
                }
                ends += 1;
            }
            2 => {
                if v == a || v == b {
                    return false;
                }
            }
            _ => return false,
        }
    }
    if ends != 2 || a == b {
        return false;
    }
    // connected: walk from a
    let mut seen = BTreeSet::new();
    let mut stack = vec![a];
    seen.insert(a);
    while let Some(v) = stack.pop() {
        for &u in f.neighbors(v) {
            if inset.contains(&u) && seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen.len() == base.len()
}

/// Exact isomorphism test on small graphs with a terminal constraint.
fn isomorphic_with_terminals(f: &Graph, ft: [usize; 3], template: &Graph, tt: [usize; 3]) -> bool {
    let n = f.n();
    if n != template.n() || f.m() != template.m() {
        return false;
    }
    let mut fdeg: Vec<usize> = f.vertices().map(|v| f.degree(v)).collect();
    let mut tdeg: Vec<usize> = template.vertices().map(|v| template.degree(v)).collect();
    fdeg.sort_unstable();
    tdeg.sort_unstable();
    if fdeg != tdeg {
        return false;
    }
    // map template vertices to f vertices, terminals to terminals
    let ft_set: BTreeSet<usize> = ft.iter().copied().collect();
    let tt_set: BTreeSet<usize> = tt.iter().copied().collect();
    let mut assign: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    fn rec(
        template: &Graph,
        f: &Graph,
        tt_set: &BTreeSet<usize>,
        ft_set: &BTreeSet<usize>,
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        let n = template.n();
        if v == n {
            return true;
        }
        for img in 0..n {
            if used[img] {
                continue;
            }
            if tt_set.contains(&v) != ft_set.contains(&img) {
                continue;
            }
            if template.degree(v) != f.degree(img) {
                continue;
            }
            let ok = (0..v).all(|u| template.has_edge(u, v) == f.has_edge(assign[u].unwrap(), img));
            if ok {
                assign[v] = Some(img);
                used[img] = true;
                if rec(template, f, tt_set, ft_set, assign, used, v + 1) {
                    return true;
                }
                assign[v] = None;
                used[img] = false;
            }
        }
        false
    }
    rec(template, f, &tt_set, &ft_set, &mut assign, &mut used, 0)
}

/// Shape restriction for the touching-AT search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeFilter {
    OnlyLongClaw,
    AnyShape,
}

/// Searches for an X-touching asteroidal triple of `g`: a triple `T` that
/// is an AT of `g` minus the edges inside `x`, with a minimal witness `F`
/// satisfying `|V(F) ∩ X| <= 1` or `V(F) ∩ X ⊆ T`.
///
/// Candidate triples are enumerated in increasing total-distance order.
/// For each triple the witness is minimized inside hosts that exclude the
/// rest of `x`, which makes every returned witness touching by
/// construction and keeps the search complete: a minimal witness embedded
/// in an induced subgraph stays a witness of the whole graph.
pub fn find_x_touching_at(g: &Graph, x: &[usize], filter: ShapeFilter) -> Option<([usize; 3], AtWitness)> {
    let xset: BTreeSet<usize> = x.iter().copied().collect();
    let inner_edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| xset.contains(&u) && xset.contains(&v))
        .collect();
    let gprime = if inner_edges.is_empty() {
        g.clone()
    } else {
        g.apply_modulator(&EdgeSet::from_pairs(inner_edges).unwrap(), EditMode::Delete)
            .unwrap()
    };
    if filter == ShapeFilter::OnlyLongClaw {
        return find_touching_long_claw(&gprime, &xset);
    }

    let n = gprime.n();
    let dist: Vec<Vec<usize>> = (0..n).map(|v| gprime.bfs_distances(v)).collect();
    let mut triples: Vec<(usize, [usize; 3])> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if gprime.has_edge(a, b) || dist[a][b] == usize::MAX {
                continue;
            }
            for c in b + 1..n {
                if gprime.has_edge(a, c) || gprime.has_edge(b, c) {
                    continue;
                }
                if dist[a][c] == usize::MAX || dist[b][c] == usize::MAX {
                    continue;
                }
                triples.push((dist[a][b] + dist[a][c] + dist[b][c], [a, b, c]));
            }
        }
    }
    triples.sort();

    let all: BTreeSet<usize> = gprime.vertices().collect();
    for (_, t) in triples {
        // host excluding every x-vertex outside the triple: any witness found
        // meets x only in terminals
        let host: BTreeSet<usize> = all
            .iter()
            .copied()
            .filter(|v| !xset.contains(v) || t.contains(v))
            .collect();
        if is_at_within(&gprime, &host, t) {
            let w = minimize_within(&gprime, &host, t);
            let vertices: Vec<usize> = w.iter().copied().collect();
            let shape = classify_in_host(&gprime, &vertices, t);
            return Some((
                t,
                AtWitness {
                    terminals: t,
                    vertices,
                    shape,
                },
            ));
        }
        // hosts keeping a single x-vertex: witnesses meet x in at most one vertex
        for &xx in &xset {
            if t.contains(&xx) {
                continue;
            }
            if t.iter().any(|v| xset.contains(v)) {
                continue;
            }
            let host: BTreeSet<usize> = all.iter().copied().filter(|v| !xset.contains(v) || *v == xx).collect();
            if is_at_within(&gprime, &host, t) {
                let w = minimize_within(&gprime, &host, t);
                let vertices: Vec<usize> = w.iter().copied().collect();
                let shape = classify_in_host(&gprime, &vertices, t);
                return Some((
                    t,
                    AtWitness {
                        terminals: t,
                        vertices,
                        shape,
                    },
                ));
            }
        }
    }
    None
}

/// Direct search for a touching witness isomorphic to the subdivided claw:
/// enumerate the center, three pairwise non-adjacent middle vertices, and
/// private leaves. Complete for this shape, which the irrelevant-vertex
/// rule's safety argument needs.
fn find_touching_long_claw(gprime: &Graph, xset: &BTreeSet<usize>) -> Option<([usize; 3], AtWitness)> {
    let n = gprime.n();
    for c in 0..n {
        let nbrs = gprime.neighbors(c);
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                if gprime.has_edge(nbrs[i], nbrs[j]) {
                    continue;
                }
                for k in j + 1..nbrs.len() {
                    if gprime.has_edge(nbrs[i], nbrs[k]) || gprime.has_edge(nbrs[j], nbrs[k]) {
                        continue;
                    }
                    let mids = [nbrs[i], nbrs[j], nbrs[k]];
                    if let Some(w) = extend_claw(gprime, xset, c, mids) {
                        return Some((w.terminals, w));
                    }
                }
            }
        }
    }
    None
}

fn extend_claw(gprime: &Graph, xset: &BTreeSet<usize>, c: usize, mids: [usize; 3]) -> Option<AtWitness> {
    // leaves: adjacent to their middle vertex only, among the seven
    let candidate_leaves = |m: usize| -> Vec<usize> {
        gprime
            .neighbors(m)
            .iter()
            .copied()
            .filter(|&u| u != c && !gprime.has_edge(u, c) && !mids.contains(&u))
            .collect()
    };
    for l0 in candidate_leaves(mids[0]) {
        for l1 in candidate_leaves(mids[1]) {
            if l1 == l0 || gprime.has_edge(l0, l1) || gprime.has_edge(l1, mids[0]) || gprime.has_edge(l0, mids[1]) {
                continue;
            }
            for l2 in candidate_leaves(mids[2]) {
                if l2 == l0 || l2 == l1 {
                    continue;
                }
                if gprime.has_edge(l2, l0)
                    || gprime.has_edge(l2, l1)
                    || gprime.has_edge(l2, mids[0])
                    || gprime.has_edge(l2, mids[1])
                    || gprime.has_edge(l0, mids[2])
                    || gprime.has_edge(l1, mids[2])
                {
                    continue;
                }
                let vertices = {
                    let mut v = vec![c, mids[0], mids[1], mids[2], l0, l1, l2];
                    v.sort_unstable();
                    v
                };
                let terminals = {
                    let mut t = [l0, l1, l2];
                    t.sort_unstable();
                    t
                };
                let in_x = vertices.iter().filter(|v| xset.contains(v)).count();
                let touching = in_x <= 1 || vertices.iter().all(|v| !xset.contains(v) || terminals.contains(v));
                if !touching {
                    continue;
                }
                return Some(AtWitness {
                    terminals,
                    vertices,
                    shape: WitnessShape::F1,
                });
            }
        }
    }
    None
}
