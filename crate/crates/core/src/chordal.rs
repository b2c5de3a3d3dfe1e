//! Chordality recognition with certificates, clique trees, and the
//! weighted independent set solver for chordal graphs.

use std::collections::BTreeSet;

use crate::decomp::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, WeightMap};

/// Outcome of a chordality test: a perfect elimination ordering on success,
/// a certified chordless cycle of length at least four on refusal.
#[derive(Clone, Debug)]
pub enum Chordality {
    Chordal(Vec<usize>),
    ChordlessCycle(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Maximum-cardinality search. Returns the visit order; its reverse is a
/// perfect elimination ordering whenever the graph is chordal.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("vertex left");
        visited[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Checks whether `elim` is a perfect elimination ordering: every vertex's
/// later neighbors must form a clique.
pub fn is_peo(g: &Graph, elim: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in elim.iter().enumerate() {
        pos[v] = i;
    }
    for (i, &v) in elim.iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > i).collect();
        for a in 0..later.len() {
            for b in a + 1..later.len() {
                if !g.has_edge(later[a], later[b]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Finds a shortest chordless cycle of length >= 4, if any. Scans every
/// non-adjacent pair x, y with a common neighbor v and takes a shortest
/// x-y path that avoids the rest of N[v]; the shortest cycle found this way
/// is a shortest chordless cycle of the graph.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for v in 0..n {
        let nbrs = g.neighbors(v);
        for ai in 0..nbrs.len() {
            for bi in ai + 1..nbrs.len() {
                let (x, y) = (nbrs[ai], nbrs[bi]);
                if g.has_edge(x, y) {
                    continue;
                }
                // shortest x-y path through vertices outside N[v]
                let allowed = |u: usize| u == x || u == y || (u != v && !g.has_edge(u, v));
                let mut dist = vec![usize::MAX; n];
                let mut prev = vec![usize::MAX; n];
                let mut queue = std::collections::VecDeque::new();
                dist[x] = 0;
                queue.push_back(x);
                while let Some(u) = queue.pop_front() {
                    if u == y {
                        break;
                    }
                    for &w in g.neighbors(u) {
                        if allowed(w) && dist[w] == usize::MAX {
                            dist[w] = dist[u] + 1;
                            prev[w] = u;
                            queue.push_back(w);
                        }
                    }
                }
                if dist[y] == usize::MAX {
                    continue;
                }
                let mut path = vec![y];
                let mut cur = y;
                while cur != x {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.push(v);
                path.reverse(); // v, x, ..., y
                if best.as_ref().map_or(true, |b| path.len() < b.len()) {
                    best = Some(path);
                }
            }
        }
    }
    best
}

/// Chordality test via maximum-cardinality search plus PEO verification;
/// on failure a chordless cycle is extracted as a certificate.
pub fn is_chordal(g: &Graph) -> Chordality {
    let mut elim = mcs_order(g);
    elim.reverse();
    if is_peo(g, &elim) {
        Chordality::Chordal(elim)
    } else {
        let cycle = find_chordless_cycle(g).expect("PEO verification failed but no chordless cycle found");
        debug_assert!(cycle.len() >= 4);
        Chordality::ChordlessCycle(cycle)
    }
}

/// Inclusion-maximal cliques of a chordal graph, at most n of them,
/// read off a perfect elimination ordering.
pub fn maximal_cliques_chordal(g: &Graph, elim: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in elim.iter().enumerate() {
        pos[v] = i;
    }
    let mut cliques: Vec<BTreeSet<usize>> = Vec::new();
    for (i, &v) in elim.iter().enumerate() {
        let mut c: BTreeSet<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] > i)
            .collect();
        c.insert(v);
        cliques.push(c);
    }
    if cliques.is_empty() {
        return vec![];
    }
    let mut maximal: Vec<Vec<usize>> = Vec::new();
    for (i, c) in cliques.iter().enumerate() {
        let dominated = cliques
            .iter()
            .enumerate()
            .any(|(j, other)| j != i && c.is_subset(other) && (c.len() < other.len() || j < i));
        if !dominated {
            maximal.push(c.iter().copied().collect());
        }
    }
    maximal.sort();
    maximal.dedup();
    maximal
}

/// Clique tree of a chordal graph: a valid tree decomposition whose bags are
/// exactly the maximal cliques. Built as a maximum-weight spanning tree of
/// the clique intersection graph.
pub fn clique_tree(g: &Graph) -> Result<TreeDecomposition> {
    let elim = match is_chordal(g) {
        Chordality::Chordal(e) => e,
        Chordality::ChordlessCycle(_) => return Err(Error::NotChordal),
    };
    if g.n() == 0 {
        return Ok(TreeDecomposition {
            bags: vec![vec![]],
            edges: vec![],
        });
    }
    let bags = maximal_cliques_chordal(g, &elim);
    let b = bags.len();
    let mut cand: Vec<(usize, usize, usize)> = Vec::new(); // (weight, i, j)
    for i in 0..b {
        let si: BTreeSet<usize> = bags[i].iter().copied().collect();
        for j in i + 1..b {
            let w = bags[j].iter().filter(|v| si.contains(v)).count();
            cand.push((w, i, j));
        }
    }
    cand.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut parent: Vec<usize> = (0..b).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let mut edges = Vec::new();
    for (_, i, j) in cand {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            edges.push((i, j));
        }
    }
    let td = TreeDecomposition { bags, edges };
    td.validate(g)?;
    Ok(td)
}

/// Maximum-weight independent set of a chordal graph, via the two-pass
/// greedy along a perfect elimination ordering. Weights must be positive.
pub fn max_weight_is_chordal(g: &Graph, w: &WeightMap) -> Result<(i64, Vec<usize>)> {
    w.validate_positive(g)?;
    let elim = match is_chordal(g) {
        Chordality::Chordal(e) => e,
        Chordality::ChordlessCycle(_) => return Err(Error::NotChordal),
    };
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in elim.iter().enumerate() {
        pos[v] = i;
    }
    // forward pass: residual weights, marking vertices with positive slack
    let mut slack: Vec<i64> = (0..n).map(|v| w.get(v)).collect();
    let mut marked = vec![false; n];
    for &v in &elim {
        if slack[v] > 0 {
            marked[v] = true;
            let delta = slack[v];
            for &u in g.neighbors(v) {
                if pos[u] > pos[v] {
                    slack[u] -= delta;
                }
            }
        }
    }
    // backward pass: greedily keep marked vertices with no chosen neighbor
    let mut chosen = vec![false; n];
    for &v in elim.iter().rev() {
        if marked[v] && !g.neighbors(v).iter().any(|&u| chosen[u]) {
            chosen[v] = true;
        }
    }
    let set: Vec<usize> = (0..n).filter(|&v| chosen[v]).collect();
    debug_assert!(g.is_independent_set(&set));
    Ok((w.sum(&set), set))
}

/// Size of a maximum independent set of a chordal graph.
pub fn alpha_chordal(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let (v, _) = max_weight_is_chordal(g, &WeightMap::unit(g.n()))?;
    Ok(v as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn assert_chordless_cycle(g: &Graph, cyc: &[usize]) {
        assert!(cyc.len() >= 4);
        for i in 0..cyc.len() {
            for j in i + 1..cyc.len() {
                let consecutive = j == i + 1 || (i == 0 && j == cyc.len() - 1);
                assert_eq!(g.has_edge(cyc[i], cyc[j]), consecutive, "cycle {:?} has a chord or gap", cyc);
            }
        }
    }

    #[test]
    fn trees_are_chordal() {
        let tree = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (0, 5)]);
        assert!(is_chordal(&tree).is_chordal());
    }

    #[test]
    fn cycles_are_refused_with_certificate() {
        for n in 4..=9 {
            let g = Graph::cycle(n);
            match is_chordal(&g) {
                Chordality::Chordal(_) => panic!("C{} accepted", n),
                Chordality::ChordlessCycle(c) => {
                    assert_eq!(c.len(), n);
                    assert_chordless_cycle(&g, &c);
                }
            }
        }
    }

    #[test]
    fn c5_plus_chord_still_refused() {
        // C5 with chord (0,2): the cycle 0-2-3-4 is chordless
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)];
        edges.push((0, 2));
        let g = Graph::from_edges(5, &edges);
        match is_chordal(&g) {
            Chordality::Chordal(_) => panic!("accepted"),
            Chordality::ChordlessCycle(c) => {
                assert_eq!(c.len(), 4);
                assert_chordless_cycle(&g, &c);
            }
        }
    }

    #[test]
    fn clique_tree_k4_single_bag() {
        let td = clique_tree(&Graph::complete(4)).unwrap();
        assert_eq!(td.bags, vec![vec![0, 1, 2, 3]]);
        assert!(td.edges.is_empty());
    }

    #[test]
    fn clique_tree_p3_two_bags() {
        let td = clique_tree(&Graph::path(3)).unwrap();
        assert_eq!(td.bags, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(td.edges, vec![(0, 1)]);
    }

    #[test]
    fn clique_tree_two_triangles_sharing_edge() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        let td = clique_tree(&g).unwrap();
        assert_eq!(td.bags, vec![vec![0, 1, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn clique_tree_rejects_non_chordal() {
        assert!(matches!(clique_tree(&Graph::cycle(4)), Err(Error::NotChordal)));
    }

    #[test]
    fn wis_p3_and_k4() {
        let p3 = Graph::path(3);
        let (v, s) = max_weight_is_chordal(&p3, &WeightMap::unit(3)).unwrap();
        assert_eq!(v, 2);
        assert_eq!(s, vec![0, 2]);
        let k4 = Graph::complete(4);
        let (v, s) = max_weight_is_chordal(&k4, &WeightMap::new(vec![1, 2, 3, 4])).unwrap();
        assert_eq!(v, 4);
        assert_eq!(s, vec![3]);
    }

    #[test]
    fn wis_rejects_non_chordal() {
        assert!(max_weight_is_chordal(&Graph::cycle(5), &WeightMap::unit(5)).is_err());
    }
}
