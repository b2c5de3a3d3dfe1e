//! Immutable graph representation and the elementary combinatorial
//! operations every other module consumes.
//!
//! Vertices are addressed by index `0..n`. Each vertex carries a stable
//! external label that survives induced-subgraph extraction, so reduction
//! traces can always refer to vertices of the original input.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A set of unordered vertex pairs, normalized to `(min, max)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        let mut set = EdgeSet::new();
        for (u, v) in pairs {
            set.insert(u, v)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.pairs.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.contains(&(u.min(v), u.max(v)))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    /// Vertices appearing as an endpoint of some pair, sorted.
    pub fn endpoints(&self) -> Vec<usize> {
        let mut vs = BTreeSet::new();
        for &(u, v) in &self.pairs {
            vs.insert(u);
            vs.insert(v);
        }
        vs.into_iter().collect()
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        EdgeSet::from_pairs(iter).expect("invalid pair in edge set literal")
    }
}

/// Per-vertex integer weights. The solvers only add and compare weights,
/// so integers keep every test exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap {
    weights: Vec<i64>,
}

impl WeightMap {
    pub fn new(weights: Vec<i64>) -> Self {
        WeightMap { weights }
    }

    pub fn unit(n: usize) -> Self {
        WeightMap {
            weights: vec![1; n],
        }
    }

    pub fn get(&self, v: usize) -> i64 {
        self.weights[v]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a usize>>(&self, vs: I) -> i64 {
        vs.into_iter().map(|&v| self.weights[v]).sum()
    }

    pub fn total(&self) -> i64 {
        self.weights.iter().sum()
    }

    /// Checks coverage of every vertex of `g` and positivity.
    pub fn validate_positive(&self, g: &Graph) -> Result<()> {
        if self.weights.len() != g.n() {
            return Err(Error::MissingWeight(self.weights.len().min(g.n())));
        }
        if self.weights.iter().any(|&w| w < 1) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(())
    }

    /// Restriction to an induced subgraph given by `keep` (indices of the host).
    pub fn restrict(&self, keep: &[usize]) -> WeightMap {
        WeightMap {
            weights: keep.iter().map(|&v| self.weights[v]).collect(),
        }
    }
}

/// How `apply_modulator` edits the edge set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EditMode {
    Add,
    Delete,
    SymmetricDifference,
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<usize>,
    adj: Vec<Vec<usize>>,
    mat: Vec<bool>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    /// Builds a graph on `n` vertices labeled `0..n`.
    pub fn build(n: usize, edges: &EdgeSet) -> Result<Self> {
        Self::with_labels((0..n).collect(), edges)
    }

    /// Builds a graph whose vertex `i` carries `labels[i]`.
    pub fn with_labels(labels: Vec<usize>, edges: &EdgeSet) -> Result<Self> {
        let n = labels.len();
        {
            let mut seen = BTreeSet::new();
            for &l in &labels {
                if !seen.insert(l) {
                    return Err(Error::BadConfig(format!("duplicate vertex label {}", l)));
                }
            }
        }
        let mut mat = vec![false; n * n];
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges.iter() {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            mat[u * n + v] = true;
            mat[v * n + u] = true;
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { labels, adj, mat })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Internal index of the vertex carrying `label`, if present.
    pub fn index_of_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.mat[u * self.n() + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// All edges as normalized pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet {
            pairs: self.edges().into_iter().collect(),
        }
    }

    /// All non-adjacent vertex pairs, sorted.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Pair adjacent iff non-adjacent here; same vertex set and labels.
    pub fn complement(&self) -> Graph {
        let edges = EdgeSet {
            pairs: self.non_edges().into_iter().collect(),
        };
        Graph::with_labels(self.labels.clone(), &edges).expect("complement preserves invariants")
    }

    /// Applies an edge edit set. Add-mode pairs must be non-edges and
    /// delete-mode pairs must be edges; violations name the offending pair.
    pub fn apply_modulator(&self, pairs: &EdgeSet, mode: EditMode) -> Result<Graph> {
        let n = self.n();
        let mut set: BTreeSet<(usize, usize)> = self.edges().into_iter().collect();
        for (u, v) in pairs.iter() {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let present = set.contains(&(u, v));
            match mode {
                EditMode::Add => {
                    if present {
                        return Err(Error::AddExistingEdge(u, v));
                    }
                    set.insert((u, v));
                }
                EditMode::Delete => {
                    if !present {
                        return Err(Error::DeleteMissingEdge(u, v));
                    }
                    set.remove(&(u, v));
                }
                EditMode::SymmetricDifference => {
                    if present {
                        set.remove(&(u, v));
                    } else {
                        set.insert((u, v));
                    }
                }
            }
        }
        Graph::with_labels(self.labels.clone(), &EdgeSet { pairs: set })
    }

    /// Subgraph induced by `s`; original labels are preserved. `s` may be
    /// given in any order and is deduplicated; vertices keep the relative
    /// order of their host indices.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Graph> {
        let n = self.n();
        for &v in s {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        let keep: Vec<usize> = s.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut pairs = BTreeSet::new();
        for &u in &keep {
            for &v in &self.adj[u] {
                if u < v && pos[v] != usize::MAX {
                    pairs.insert((pos[u], pos[v]));
                }
            }
        }
        Graph::with_labels(
            keep.iter().map(|&v| self.labels[v]).collect(),
            &EdgeSet { pairs },
        )
    }

    /// Host indices of an induced subgraph call, sorted. Convenience for
    /// callers that need the index correspondence `sub index -> host index`.
    pub fn sorted_unique(s: &[usize]) -> Vec<usize> {
        s.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// Repeated minimum-degree removal. Returns the removal order together
    /// with the degeneracy `d`: every vertex has at most `d` neighbors after
    /// it in the returned ordering, and no ordering does better.
    pub fn degeneracy_ordering(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut d = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .expect("vertex left");
            d = d.max(deg[v]);
            removed[v] = true;
            order.push(v);
            for &u in &self.adj[v] {
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        (order, d)
    }

    /// All cliques of the graph, including the empty set and singletons,
    /// enumerated along a degeneracy ordering. A `d`-degenerate graph yields
    /// at most `2^d * n + 1` sets.
    pub fn enumerate_cliques(&self) -> Vec<Vec<usize>> {
        let (order, _) = self.degeneracy_ordering();
        let n = self.n();
        let mut rank = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let mut out: Vec<Vec<usize>> = vec![Vec::new()];
        for &v in &order {
            let later: Vec<usize> = self.adj[v]
                .iter()
                .copied()
                .filter(|&u| rank[u] > rank[v])
                .collect();
            // subsets of the later neighborhood that form a clique with v
            let k = later.len();
            for mask in 0u32..(1 << k) {
                let subset: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| later[i]).collect();
                let mut ok = true;
                'pairs: for i in 0..subset.len() {
                    for j in i + 1..subset.len() {
                        if !self.has_edge(subset[i], subset[j]) {
                            ok = false;
                            break 'pairs;
                        }
                    }
                }
                if ok {
                    let mut clique = subset;
                    clique.push(v);
                    clique.sort_unstable();
                    out.push(clique);
                }
            }
        }
        out.sort();
        out
    }

    /// Partition of the vertex set into maximal connected blocks, each block
    /// sorted, blocks ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Checks that `s` is pairwise non-adjacent.
    pub fn is_independent_set(&self, s: &[usize]) -> bool {
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if self.has_edge(s[i], s[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks that `s` is pairwise adjacent.
    pub fn is_clique(&self, s: &[usize]) -> bool {
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if !self.has_edge(s[i], s[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Shortest-path distances from `v` (usize::MAX when unreachable).
    pub fn bfs_distances(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[v] = 0;
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Builds the same graph with edges given directly as index pairs;
    /// panics on invalid input. Test and internal-construction helper.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::build(n, &EdgeSet::from_pairs(edges.iter().copied()).unwrap()).unwrap()
    }

    /// Path on `n` vertices 0-1-...-(n-1).
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        let mut e: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((0, n - 1));
        Graph::from_edges(n, &e)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e)
    }

    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Graph {
        Graph::from_edges(n, &[])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_self_loop() {
        assert!(matches!(EdgeSet::from_pairs([(0, 0)]), Err(Error::SelfLoop(0))));
    }

    #[test]
    fn build_rejects_out_of_range() {
        let e = EdgeSet::from_pairs([(0, 3)]).unwrap();
        assert!(matches!(
            Graph::build(3, &e),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn build_path_and_cycle() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.m(), 2);
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 2) && !p3.has_edge(0, 2));
        let c4 = Graph::cycle(4);
        assert_eq!(c4.m(), 4);
        assert!(c4.is_connected());
    }

    #[test]
    fn complement_small_cases() {
        let empty3 = Graph::edgeless(3);
        assert_eq!(empty3.complement(), Graph::complete(3));
        // C4 complement is a perfect matching of 2 edges: the 2 diagonals
        let c4 = Graph::cycle(4);
        let co = c4.complement();
        assert_eq!(co.m(), 2);
        assert!(co.has_edge(0, 2) && co.has_edge(1, 3));
        let c5 = Graph::cycle(5);
        assert_eq!(c5.complement().complement(), c5);
    }

    #[test]
    fn modulator_modes() {
        let c4 = Graph::cycle(4);
        let chord = EdgeSet::from_pairs([(0, 2)]).unwrap();
        let g = c4.apply_modulator(&chord, EditMode::Add).unwrap();
        assert_eq!(g.m(), 5);
        assert!(matches!(
            g.apply_modulator(&chord, EditMode::Add),
            Err(Error::AddExistingEdge(0, 2))
        ));
        // identity on empty set
        assert_eq!(c4.apply_modulator(&EdgeSet::new(), EditMode::Delete).unwrap(), c4);
        // symmetric difference on P3: toggle ab off
        let p3 = Graph::path(3);
        let toggled = p3
            .apply_modulator(&EdgeSet::from_pairs([(0, 1)]).unwrap(), EditMode::SymmetricDifference)
            .unwrap();
        assert_eq!(toggled.edges(), vec![(1, 2)]);
        // add then delete restores
        let back = g.apply_modulator(&chord, EditMode::Delete).unwrap();
        assert_eq!(back, c4);
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let k4 = Graph::complete(4);
        let t = k4.induced_subgraph(&[3, 1, 0]).unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(t.m(), 3);
        assert_eq!(t.labels(), &[0, 1, 3]);
        let empty = k4.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.n(), 0);
        // three consecutive vertices of C5 induce P3
        let c5 = Graph::cycle(5);
        let p = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p.m(), 2);
        assert!(matches!(
            c5.induced_subgraph(&[7]),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        ));
    }

    #[test]
    fn degeneracy_examples() {
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        assert_eq!(tree.degeneracy_ordering().1, 1);
        assert_eq!(Graph::complete(5).degeneracy_ordering().1, 4);
        assert_eq!(Graph::cycle(4).degeneracy_ordering().1, 2);
        // the ordering itself must witness the degeneracy
        let g = Graph::cycle(6);
        let (order, d) = g.degeneracy_ordering();
        let mut rank = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        for &v in &order {
            let later = g.neighbors(v).iter().filter(|&&u| rank[u] > rank[v]).count();
            assert!(later <= d);
        }
    }

    #[test]
    fn cliques_of_k3_and_p3() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.enumerate_cliques().len(), 8);
        let p3 = Graph::path(3);
        let cs = p3.enumerate_cliques();
        assert_eq!(cs.len(), 6);
        assert!(cs.contains(&vec![0, 1]));
        assert!(cs.contains(&vec![1, 2]));
        assert!(!cs.contains(&vec![0, 2]));
        let e4 = Graph::edgeless(4);
        assert_eq!(e4.enumerate_cliques().len(), 5);
    }

    #[test]
    fn components() {
        assert_eq!(Graph::cycle(4).connected_components().len(), 1);
        assert_eq!(Graph::edgeless(3).connected_components().len(), 3);
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]);
        let comps = g.connected_components();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4]]);
    }
}
