//! Tree decompositions, the nice form used by every dynamic program, and
//! their validity checkers.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree decomposition: bags indexed `0..bags.len()`, tree edges over bag
/// indices. A single bag with no edges is a valid one-node tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Checks (T1) bags cover V, (T2) every edge is inside some bag,
    /// (T3) the occurrences of each vertex form a subtree, plus tree-ness.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let b = self.bags.len();
        if b == 0 {
            return Err(Error::InvalidDecomposition("no bags".into()));
        }
        if self.edges.len() + 1 != b {
            return Err(Error::InvalidDecomposition(format!(
                "not a tree: {} bags, {} edges",
                b,
                self.edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); b];
        for &(x, y) in &self.edges {
            if x >= b || y >= b || x == y {
                return Err(Error::InvalidDecomposition(format!("bad tree edge ({}, {})", x, y)));
            }
            adj[x].push(y);
            adj[y].push(x);
        }
        // connectivity of the tree itself
        let mut seen = vec![false; b];
        let mut stack = vec![0];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    cnt += 1;
                    stack.push(y);
                }
            }
        }
        if cnt != b {
            return Err(Error::InvalidDecomposition("tree is disconnected".into()));
        }
        for (i, bag) in self.bags.iter().enumerate() {
            let mut sorted = bag.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != bag.len() {
                return Err(Error::InvalidDecomposition(format!("bag {} has duplicates", i)));
            }
            for &v in bag {
                if v >= g.n() {
                    return Err(Error::InvalidDecomposition(format!(
                        "bag {} contains unknown vertex {}",
                        i, v
                    )));
                }
            }
        }
        // T1
        let mut covered = vec![false; g.n()];
        for bag in &self.bags {
            for &v in bag {
                covered[v] = true;
            }
        }
        if let Some(v) = (0..g.n()).find(|&v| !covered[v]) {
            return Err(Error::InvalidDecomposition(format!("T1 violated: vertex {} in no bag", v)));
        }
        // T2
        for (u, v) in g.edges() {
            let inside = self.bags.iter().any(|b| b.contains(&u) && b.contains(&v));
            if !inside {
                return Err(Error::InvalidDecomposition(format!(
                    "T2 violated: edge ({}, {}) in no bag",
                    u, v
                )));
            }
        }
        // T3: the bags containing v induce a connected subtree
        for v in 0..g.n() {
            let nodes: Vec<usize> = (0..b).filter(|&i| self.bags[i].contains(&v)).collect();
            let inset: BTreeSet<usize> = nodes.iter().copied().collect();
            let mut seen = BTreeSet::new();
            let mut stack = vec![nodes[0]];
            seen.insert(nodes[0]);
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if inset.contains(&y) && seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            if seen.len() != nodes.len() {
                return Err(Error::InvalidDecomposition(format!(
                    "T3 violated: occurrences of vertex {} are disconnected",
                    v
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

/// One node of a nice tree decomposition.
#[derive(Clone, Debug)]
pub struct NiceNode {
    pub kind: NodeKind,
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
    /// Non-adjacent vertex pairs inside the bag, i.e. the bag deficiency.
    pub deficiency: Vec<(usize, usize)>,
}

/// A rooted nice tree decomposition: only leaf / introduce / forget / join
/// nodes, with empty root and leaf bags. Bag deficiencies are precomputed
/// since every dynamic program consults them.
#[derive(Clone, Debug)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
}

impl NiceTreeDecomposition {
    pub fn node(&self, i: usize) -> &NiceNode {
        &self.nodes[i]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Maximum bag deficiency over all nodes.
    pub fn max_deficiency(&self) -> usize {
        self.nodes.iter().map(|n| n.deficiency.len()).max().unwrap_or(0)
    }

    /// Node indices in bottom-up order: children before parents.
    pub fn bottom_up(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((x, expanded)) = stack.pop() {
            if expanded {
                order.push(x);
            } else {
                stack.push((x, true));
                for &c in &self.nodes[x].children {
                    stack.push((c, false));
                }
            }
        }
        order
    }

    /// Checks the nice-form rules on top of (T1)-(T3).
    pub fn validate_nice(&self, g: &Graph) -> Result<()> {
        let td = self.as_tree_decomposition();
        td.validate(g)?;
        if !self.nodes[self.root].bag.is_empty() {
            return Err(Error::InvalidDecomposition("root bag is not empty".into()));
        }
        for (i, node) in self.nodes.iter().enumerate() {
            let kids = &node.children;
            match node.kind {
                NodeKind::Leaf => {
                    if !kids.is_empty() {
                        return Err(Error::InvalidDecomposition(format!("leaf node {} has children", i)));
                    }
                    if !node.bag.is_empty() {
                        return Err(Error::InvalidDecomposition(format!("leaf node {} has a non-empty bag", i)));
                    }
                }
                NodeKind::Introduce(v) => {
                    if kids.len() != 1 {
                        return Err(Error::InvalidDecomposition(format!("introduce node {} must have one child", i)));
                    }
                    let child = &self.nodes[kids[0]];
                    let mut expect = child.bag.clone();
                    if child.bag.contains(&v) {
                        return Err(Error::InvalidDecomposition(format!(
                            "introduce node {} re-introduces vertex {}",
                            i, v
                        )));
                    }
                    expect.push(v);
                    expect.sort_unstable();
                    if expect != node.bag {
                        return Err(Error::InvalidDecomposition(format!("introduce node {} bag mismatch", i)));
                    }
                }
                NodeKind::Forget(v) => {
                    if kids.len() != 1 {
                        return Err(Error::InvalidDecomposition(format!("forget node {} must have one child", i)));
                    }
                    let child = &self.nodes[kids[0]];
                    if !child.bag.contains(&v) {
                        return Err(Error::InvalidDecomposition(format!(
                            "forget node {} forgets absent vertex {}",
                            i, v
                        )));
                    }
                    let expect: Vec<usize> = child.bag.iter().copied().filter(|&u| u != v).collect();
                    if expect != node.bag {
                        return Err(Error::InvalidDecomposition(format!("forget node {} bag mismatch", i)));
                    }
                }
                NodeKind::Join => {
                    if kids.len() != 2 {
                        return Err(Error::InvalidDecomposition(format!("join node {} must have two children", i)));
                    }
                    if self.nodes[kids[0]].bag != node.bag || self.nodes[kids[1]].bag != node.bag {
                        return Err(Error::InvalidDecomposition(format!("join node {} bag mismatch", i)));
                    }
                }
            }
            // stored deficiency must equal the bag's missing pairs
            let expect = missing_pairs(g, &node.bag);
            if expect != node.deficiency {
                return Err(Error::InvalidDecomposition(format!("node {} deficiency list is stale", i)));
            }
        }
        Ok(())
    }

    pub fn as_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|n| n.bag.clone()).collect();
        let mut edges = Vec::new();
        for (i, n) in self.nodes.iter().enumerate() {
            for &c in &n.children {
                edges.push((i.min(c), i.max(c)));
            }
        }
        TreeDecomposition { bags, edges }
    }

    /// Line-oriented text form: one node per line `id kind parent bag...`,
    /// vertices printed as graph labels.
    pub fn to_lines(&self, g: &Graph) -> String {
        let mut parent = vec![-1i64; self.nodes.len()];
        for (i, n) in self.nodes.iter().enumerate() {
            for &c in &n.children {
                parent[c] = i as i64;
            }
        }
        let mut out = String::new();
        for (i, n) in self.nodes.iter().enumerate() {
            let kind = match n.kind {
                NodeKind::Leaf => "leaf".to_string(),
                NodeKind::Introduce(v) => format!("introduce:{}", g.label(v)),
                NodeKind::Forget(v) => format!("forget:{}", g.label(v)),
                NodeKind::Join => "join".to_string(),
            };
            let bag: Vec<String> = n.bag.iter().map(|&v| g.label(v).to_string()).collect();
            out.push_str(&format!("{} {} {} {}\n", i, kind, parent[i], bag.join(" ")));
        }
        out
    }
}

/// Non-adjacent pairs inside `bag`, sorted.
pub fn missing_pairs(g: &Graph, bag: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..bag.len() {
        for j in i + 1..bag.len() {
            let (u, v) = (bag[i].min(bag[j]), bag[i].max(bag[j]));
            if !g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out.sort_unstable();
    out
}

struct NiceBuilder<'a> {
    g: &'a Graph,
    nodes: Vec<NiceNode>,
}

impl<'a> NiceBuilder<'a> {
    fn push(&mut self, kind: NodeKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        let deficiency = missing_pairs(self.g, &bag);
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
            deficiency,
        });
        self.nodes.len() - 1
    }

    /// Chain of introduce nodes from the empty leaf up to `bag`.
    fn leaf_chain(&mut self, bag: &[usize]) -> usize {
        let mut cur = self.push(NodeKind::Leaf, vec![], vec![]);
        let mut acc: Vec<usize> = Vec::new();
        for &v in bag {
            acc.push(v);
            acc.sort_unstable();
            cur = self.push(NodeKind::Introduce(v), acc.clone(), vec![cur]);
        }
        cur
    }

    /// Chain transforming a node with bag `from` into a node with bag `to`:
    /// forget the vertices leaving, then introduce those entering.
    fn lift(&mut self, mut cur: usize, from: &[usize], to: &[usize]) -> usize {
        let to_set: BTreeSet<usize> = to.iter().copied().collect();
        let from_set: BTreeSet<usize> = from.iter().copied().collect();
        let mut acc: Vec<usize> = from.to_vec();
        for &v in from {
            if !to_set.contains(&v) {
                acc.retain(|&u| u != v);
                cur = self.push(NodeKind::Forget(v), acc.clone(), vec![cur]);
            }
        }
        for &v in to {
            if !from_set.contains(&v) {
                acc.push(v);
                acc.sort_unstable();
                cur = self.push(NodeKind::Introduce(v), acc.clone(), vec![cur]);
            }
        }
        cur
    }
}

/// Converts a valid tree decomposition into a nice one: rooted, only
/// leaf / introduce / forget / join nodes, empty root and leaf bags, at most
/// O(n^2) nodes. Bag contents along the transformation are bags of the
/// input decomposition; deficiencies are taken from `g`.
pub fn make_nice(td: &TreeDecomposition, g: &Graph) -> Result<NiceTreeDecomposition> {
    td.validate(g)?;
    let b = td.bags.len();
    let mut adj = vec![Vec::new(); b];
    for &(x, y) in &td.edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let mut bags: Vec<Vec<usize>> = td.bags.clone();
    for bag in &mut bags {
        bag.sort_unstable();
    }
    let mut builder = NiceBuilder { g, nodes: Vec::new() };

    // iterative post-order rooted at bag 0
    let root_bag = 0usize;
    let mut order = Vec::with_capacity(b);
    let mut parent = vec![usize::MAX; b];
    let mut stack = vec![(root_bag, usize::MAX, false)];
    while let Some((x, p, expanded)) = stack.pop() {
        if expanded {
            order.push(x);
        } else {
            parent[x] = p;
            stack.push((x, p, true));
            for &y in &adj[x] {
                if y != p {
                    stack.push((y, x, false));
                }
            }
        }
    }

    let mut rep = vec![usize::MAX; b]; // nice node representing each bag
    for &x in &order {
        let kids: Vec<usize> = adj[x].iter().copied().filter(|&y| y != parent[x]).collect();
        let top = if kids.is_empty() {
            builder.leaf_chain(&bags[x])
        } else {
            let mut lifted: Vec<usize> = kids
                .iter()
                .map(|&c| builder.lift(rep[c], &bags[c], &bags[x]))
                .collect();
            let mut cur = lifted.remove(0);
            for other in lifted {
                cur = builder.push(NodeKind::Join, bags[x].clone(), vec![cur, other]);
            }
            cur
        };
        rep[x] = top;
    }

    // forget everything above the root bag
    let mut cur = rep[root_bag];
    let mut acc = bags[root_bag].clone();
    for &v in &bags[root_bag].clone() {
        acc.retain(|&u| u != v);
        cur = builder.push(NodeKind::Forget(v), acc.clone(), vec![cur]);
    }
    let nice = NiceTreeDecomposition {
        root: cur,
        nodes: builder.nodes,
    };
    debug_assert!(nice.validate_nice(g).is_ok());
    Ok(nice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::clique_tree;
    use crate::graph::Graph;

    #[test]
    fn single_edge_bag_becomes_full_chain() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let td = TreeDecomposition {
            bags: vec![vec![0, 1]],
            edges: vec![],
        };
        let nice = make_nice(&td, &g).unwrap();
        nice.validate_nice(&g).unwrap();
        // leaf, introduce, introduce, forget, forget
        assert_eq!(nice.len(), 5);
        assert!(matches!(nice.node(nice.root).kind, NodeKind::Forget(_)));
        assert!(nice.node(nice.root).bag.is_empty());
    }

    #[test]
    fn empty_graph_single_leaf_root() {
        let g = Graph::edgeless(0);
        let td = TreeDecomposition {
            bags: vec![vec![]],
            edges: vec![],
        };
        let nice = make_nice(&td, &g).unwrap();
        assert_eq!(nice.len(), 1);
        assert_eq!(nice.root, 0);
        assert!(matches!(nice.node(0).kind, NodeKind::Leaf));
    }

    #[test]
    fn nice_of_p3_clique_tree_revalidates() {
        let g = Graph::path(3);
        let td = clique_tree(&g).unwrap();
        let nice = make_nice(&td, &g).unwrap();
        nice.validate_nice(&g).unwrap();
        // every nice bag is a bag of the input decomposition or a stage of one
        for node in &nice.nodes {
            assert!(node.bag.len() <= 2);
        }
    }

    #[test]
    fn invalid_decomposition_is_named() {
        let g = Graph::path(3);
        let td = TreeDecomposition {
            bags: vec![vec![0, 1]],
            edges: vec![],
        };
        let err = make_nice(&td, &g).unwrap_err();
        assert!(err.to_string().contains("T1"));
        let td2 = TreeDecomposition {
            bags: vec![vec![0, 1], vec![2]],
            edges: vec![(0, 1)],
        };
        let err2 = make_nice(&td2, &g).unwrap_err();
        assert!(err2.to_string().contains("T2"));
        let td3 = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2], vec![0, 2]],
            edges: vec![(0, 1), (1, 2)],
        };
        let err3 = td3.validate(&g).unwrap_err();
        assert!(err3.to_string().contains("T3"));
    }

    #[test]
    fn nice_bags_stay_within_input_bags() {
        // every nice bag is contained in an input bag, and every input bag
        // survives as some nice bag
        let mut r = crate::gen::rng(0xB46);
        for _ in 0..10 {
            let g = crate::gen::random_chordal(9, 0.5, &mut r);
            let td = clique_tree(&g).unwrap();
            let nice = make_nice(&td, &g).unwrap();
            for node in &nice.nodes {
                assert!(
                    td.bags.iter().any(|b| node.bag.iter().all(|v| b.contains(v))),
                    "bag {:?} not inside any input bag",
                    node.bag
                );
            }
            for bag in &td.bags {
                let mut sorted = bag.clone();
                sorted.sort_unstable();
                assert!(nice.nodes.iter().any(|n| n.bag == sorted));
            }
        }
    }

    #[test]
    fn deficiency_lists_are_computed() {
        let g = Graph::path(3); // bag {0,1,2} misses pair (0,2)
        let td = TreeDecomposition {
            bags: vec![vec![0, 1, 2]],
            edges: vec![],
        };
        let nice = make_nice(&td, &g).unwrap();
        let full = nice.nodes.iter().find(|n| n.bag.len() == 3).unwrap();
        assert_eq!(full.deficiency, vec![(0, 2)]);
        assert_eq!(nice.max_deficiency(), 1);
    }

    #[test]
    fn disconnected_graph_gets_valid_nice_decomposition() {
        // K3 plus isolated edge: clique forest joined by zero-weight tree edges
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]);
        let td = clique_tree(&g).unwrap();
        td.validate(&g).unwrap();
        let nice = make_nice(&td, &g).unwrap();
        nice.validate_nice(&g).unwrap();
    }
}
