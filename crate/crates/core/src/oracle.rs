//! Exhaustive-search reference implementations, used as ground truth in
//! tests and as the default oracle of the clique Turing kernel.
//!
//! Everything here is written against problem definitions only, with no
//! helpers shared with the solvers it checks, so a bug in one side cannot
//! cancel out in the other. A hard size guard keeps accidental exponential
//! blowups out of CI.

use crate::error::{Error, Result};
use crate::graph::{Graph, WeightMap};

pub const SIZE_GUARD: usize = 20;

fn guard(g: &Graph) -> Result<()> {
    if g.n() > SIZE_GUARD {
        return Err(Error::OracleSizeGuard(g.n(), SIZE_GUARD));
    }
    Ok(())
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn independent(g: &Graph, vs: &[usize]) -> bool {
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if g.has_edge(vs[i], vs[j]) {
                return false;
            }
        }
    }
    true
}

fn clique(g: &Graph, vs: &[usize]) -> bool {
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if !g.has_edge(vs[i], vs[j]) {
                return false;
            }
        }
    }
    true
}

fn weight_of(w: &WeightMap, vs: &[usize]) -> i64 {
    vs.iter().map(|&v| w.get(v)).sum()
}

/// Backtracking test for a proper coloring with at most `colors` colors.
pub fn colorable_with(g: &Graph, vs: &[usize], colors: usize) -> bool {
    fn rec(g: &Graph, vs: &[usize], colors: usize, assigned: &mut Vec<usize>) -> bool {
        let next = assigned.len();
        if next == vs.len() {
            return true;
        }
        // symmetry break: only allow one fresh color beyond those in use
        let used = assigned.iter().copied().max().map_or(0, |m| m + 1);
        for c in 0..colors.min(used + 1) {
            let ok = (0..next).all(|i| !(g.has_edge(vs[i], vs[next]) && assigned[i] == c));
            if ok {
                assigned.push(c);
                if rec(g, vs, colors, assigned) {
                    return true;
                }
                assigned.pop();
            }
        }
        false
    }
    if vs.is_empty() {
        return true;
    }
    rec(g, vs, colors, &mut Vec::new())
}

/// Degeneracy of the induced subgraph on `vs`, by repeated minimum-degree
/// peeling straight from the definition.
pub fn degeneracy_of_subset(g: &Graph, vs: &[usize]) -> usize {
    let mut left: Vec<usize> = vs.to_vec();
    let mut d = 0;
    while !left.is_empty() {
        let (idx, deg) = left
            .iter()
            .enumerate()
            .map(|(i, &v)| (i, left.iter().filter(|&&u| u != v && g.has_edge(u, v)).count()))
            .min_by_key(|&(i, deg)| (deg, i))
            .unwrap();
        d = d.max(deg);
        left.remove(idx);
    }
    d
}

/// Backtracking test for a homomorphism from the subgraph induced on `vs`
/// into `h` (edges must map to edges).
pub fn homomorphic_to(g: &Graph, vs: &[usize], h: &Graph) -> bool {
    fn rec(g: &Graph, vs: &[usize], h: &Graph, img: &mut Vec<usize>) -> bool {
        let next = img.len();
        if next == vs.len() {
            return true;
        }
        for target in 0..h.n() {
            let ok = (0..next).all(|i| !g.has_edge(vs[i], vs[next]) || h.has_edge(img[i], target));
            if ok {
                img.push(target);
                if rec(g, vs, h, img) {
                    return true;
                }
                img.pop();
            }
        }
        false
    }
    if vs.is_empty() {
        return true;
    }
    if h.n() == 0 {
        return false;
    }
    rec(g, vs, h, &mut Vec::new())
}

fn connected_subset(g: &Graph, vs: &[usize]) -> bool {
    if vs.is_empty() {
        return true;
    }
    let inset: std::collections::BTreeSet<usize> = vs.iter().copied().collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![vs[0]];
    seen.insert(vs[0]);
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if inset.contains(&u) && seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen.len() == vs.len()
}

fn is_vertex_cover(g: &Graph, vs: &[usize]) -> bool {
    let inset: std::collections::BTreeSet<usize> = vs.iter().copied().collect();
    g.edges().iter().all(|&(u, v)| inset.contains(&u) || inset.contains(&v))
}

/// Definitional chordality check: no subset induces a cycle of length >= 4.
pub fn chordal_by_definition(g: &Graph) -> Result<bool> {
    guard(g)?;
    let n = g.n();
    for mask in 0u32..(1u32 << n) {
        let vs = members(mask, n);
        if vs.len() < 4 {
            continue;
        }
        if induces_cycle(g, &vs) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn induces_cycle(g: &Graph, vs: &[usize]) -> bool {
    let mut m = 0;
    for i in 0..vs.len() {
        let deg = vs.iter().filter(|&&u| u != vs[i] && g.has_edge(u, vs[i])).count();
        if deg != 2 {
            return false;
        }
        m += deg;
    }
    m / 2 == vs.len() && connected_subset(g, vs)
}

/// Definitional asteroidal-triple check, with its own path search.
pub fn has_asteroidal_triple(g: &Graph) -> Result<bool> {
    guard(g)?;
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                let path_avoiding = |s: usize, t: usize, x: usize| -> bool {
                    let mut seen = vec![false; n];
                    let mut stack = vec![s];
                    seen[s] = true;
                    while let Some(v) = stack.pop() {
                        if v == t {
                            return true;
                        }
                        for &u in g.neighbors(v) {
                            if !seen[u] && u != x && !g.has_edge(u, x) {
                                seen[u] = true;
                                stack.push(u);
                            }
                        }
                    }
                    false
                };
                if path_avoiding(a, b, c) && path_avoiding(a, c, b) && path_avoiding(b, c, a) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

fn is_split_partitionable(g: &Graph) -> bool {
    let n = g.n();
    for mask in 0u32..(1u32 << n) {
        let k = members(mask, n);
        let i = members(!mask & ((1u32 << n) - 1), n);
        if clique(g, &k) && independent(g, &i) {
            return true;
        }
    }
    n == 0
}

/// Maximum-weight independent set by subset enumeration.
pub fn max_wis(g: &Graph, w: &WeightMap) -> Result<(i64, Vec<usize>)> {
    guard(g)?;
    let n = g.n();
    let mut best = (0i64, Vec::new());
    for mask in 0u32..(1u32 << n) {
        let vs = members(mask, n);
        if independent(g, &vs) {
            let wt = weight_of(w, &vs);
            if wt > best.0 {
                best = (wt, vs);
            }
        }
    }
    Ok(best)
}

/// Maximum-weight clique by subset enumeration.
pub fn max_wclique(g: &Graph, w: &WeightMap) -> Result<(i64, Vec<usize>)> {
    guard(g)?;
    let n = g.n();
    let mut best = (0i64, Vec::new());
    for mask in 0u32..(1u32 << n) {
        let vs = members(mask, n);
        if clique(g, &vs) {
            let wt = weight_of(w, &vs);
            if wt > best.0 {
                best = (wt, vs);
            }
        }
    }
    Ok(best)
}

/// Chromatic number by incremental backtracking search.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    guard(g)?;
    if g.n() == 0 {
        return Ok(0);
    }
    let all: Vec<usize> = (0..g.n()).collect();
    for colors in 1..=g.n() {
        if colorable_with(g, &all, colors) {
            return Ok(colors);
        }
    }
    unreachable!("n colors always suffice")
}

/// Maximum-weight induced subgraph that is `d`-colorable.
pub fn max_d_colorable(g: &Graph, w: &WeightMap, d: usize) -> Result<(i64, Vec<usize>)> {
    guard(g)?;
    let n = g.n();
    let mut best = (0i64, Vec::new());
    for mask in 0u32..(1u32 << n) {
        let vs = members(mask, n);
        if colorable_with(g, &vs, d) {
            let wt = weight_of(w, &vs);
            if wt > best.0 {
                best = (wt, vs);
            }
        }
    }
    Ok(best)
}

/// Maximum-weight induced subgraph of degeneracy at most `d`.
pub fn max_d_degenerate(g: &Graph, w: &WeightMap, d: usize) -> Result<(i64, Vec<usize>)> {
    guard(g)?;
    let n = g.n();
    let mut best = (0i64, Vec::new());
    for mask in 0u32..(1u32 << n) {
        let vs = members(mask, n);
        if degeneracy_of_subset(g, &vs) <= d {
            let wt = weight_of(w, &vs);
            if wt > best.0 {
                best = (wt, vs);
            }
        }
    }
    Ok(best)
}

/// Maximum-weight induced subgraph admitting a homomorphism into `h`.
pub fn max_h_colorable(g: &Graph, w: &WeightMap, h: &Graph) -> Result<(i64, Vec<usize>)> {
    guard(g)?;
    let n = g.n();
    let mut best = (0i64, Vec::new());
    for mask in 0u32..(1u32 << n) {
        let vs = members(mask, n);
        if homomorphic_to(g, &vs, h) {
            let wt = weight_of(w, &vs);
            if wt > best.0 {
                best = (wt, vs);
            }
        }
    }
    Ok(best)
}

/// Minimum-weight connected vertex cover. The empty cover counts as
/// connected, so an edgeless graph answers zero.
pub fn min_cvc(g: &Graph, w: &WeightMap) -> Result<(i64, Vec<usize>)> {
    guard(g)?;
    let n = g.n();
    let mut best: Option<(i64, Vec<usize>)> = None;
    for mask in 0u32..(1u32 << n) {
        let vs = members(mask, n);
        if is_vertex_cover(g, &vs) && connected_subset(g, &vs) {
            let wt = weight_of(w, &vs);
            if best.as_ref().map_or(true, |b| wt < b.0) {
                best = Some((wt, vs));
            }
        }
    }
    best.ok_or(Error::BadConfig("no vertex cover found".into()))
}

/// Minimum fill-in by enumerating chord subsets of increasing size.
pub fn min_fillin(g: &Graph) -> Result<usize> {
    guard(g)?;
    let non_edges = g.non_edges();
    for size in 0..=non_edges.len() {
        if any_subset_triangulates(g, &non_edges, size) {
            return Ok(size);
        }
    }
    unreachable!("completing all non-edges yields a complete, hence chordal, graph")
}

fn any_subset_triangulates(g: &Graph, pool: &[(usize, usize)], size: usize) -> bool {
    fn rec(g: &Graph, pool: &[(usize, usize)], start: usize, left: usize, acc: &mut Vec<(usize, usize)>) -> bool {
        if left == 0 {
            let trial = g
                .apply_modulator(
                    &crate::graph::EdgeSet::from_pairs(acc.iter().copied()).unwrap(),
                    crate::graph::EditMode::Add,
                )
                .unwrap();
            return chordal_by_definition(&trial).unwrap();
        }
        for i in start..pool.len() {
            if pool.len() - i < left {
                break;
            }
            acc.push(pool[i]);
            if rec(g, pool, i + 1, left - 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    rec(g, pool, 0, size, &mut Vec::new())
}

/// Minimum number of symmetric-difference edits to a split graph.
pub fn min_split_edit(g: &Graph) -> Result<usize> {
    guard(g)?;
    let n = g.n();
    let mut pool = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pool.push((u, v));
        }
    }
    for size in 0..=pool.len() {
        if any_edit_makes_split(g, &pool, size) {
            return Ok(size);
        }
    }
    unreachable!("editing to the complete graph yields a split graph")
}

fn any_edit_makes_split(g: &Graph, pool: &[(usize, usize)], size: usize) -> bool {
    fn rec(g: &Graph, pool: &[(usize, usize)], start: usize, left: usize, acc: &mut Vec<(usize, usize)>) -> bool {
        if left == 0 {
            let trial = g
                .apply_modulator(
                    &crate::graph::EdgeSet::from_pairs(acc.iter().copied()).unwrap(),
                    crate::graph::EditMode::SymmetricDifference,
                )
                .unwrap();
            return is_split_partitionable(&trial);
        }
        for i in start..pool.len() {
            if pool.len() - i < left {
                break;
            }
            acc.push(pool[i]);
            if rec(g, pool, i + 1, left - 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    rec(g, pool, 0, size, &mut Vec::new())
}

/// Minimum split completion (additions only) if it is at most `cap`.
pub fn min_split_comp_upto(g: &Graph, cap: usize) -> Result<Option<usize>> {
    guard(g)?;
    let pool = g.non_edges();
    for size in 0..=cap.min(pool.len()) {
        if any_addition_satisfies(g, &pool, size, &is_split_partitionable) {
            return Ok(Some(size));
        }
    }
    Ok(None)
}

/// Minimum interval completion (additions only) if it is at most `cap`.
/// Interval = chordal and asteroidal-triple free, checked definitionally.
pub fn min_interval_comp_upto(g: &Graph, cap: usize) -> Result<Option<usize>> {
    guard(g)?;
    let pool = g.non_edges();
    let is_interval = |h: &Graph| chordal_by_definition(h).unwrap() && !has_asteroidal_triple(h).unwrap();
    for size in 0..=cap.min(pool.len()) {
        if any_addition_satisfies(g, &pool, size, &is_interval) {
            return Ok(Some(size));
        }
    }
    Ok(None)
}

/// Minimum fill-in (additions to chordal) if it is at most `cap`.
pub fn min_fillin_upto(g: &Graph, cap: usize) -> Result<Option<usize>> {
    guard(g)?;
    let pool = g.non_edges();
    for size in 0..=cap.min(pool.len()) {
        if any_subset_triangulates(g, &pool, size) {
            return Ok(Some(size));
        }
    }
    Ok(None)
}

fn any_addition_satisfies(
    g: &Graph,
    pool: &[(usize, usize)],
    size: usize,
    pred: &dyn Fn(&Graph) -> bool,
) -> bool {
    fn rec(
        g: &Graph,
        pool: &[(usize, usize)],
        start: usize,
        left: usize,
        acc: &mut Vec<(usize, usize)>,
        pred: &dyn Fn(&Graph) -> bool,
    ) -> bool {
        if left == 0 {
            let trial = g
                .apply_modulator(
                    &crate::graph::EdgeSet::from_pairs(acc.iter().copied()).unwrap(),
                    crate::graph::EditMode::Add,
                )
                .unwrap();
            return pred(&trial);
        }
        for i in start..pool.len() {
            if pool.len() - i < left {
                break;
            }
            acc.push(pool[i]);
            if rec(g, pool, i + 1, left - 1, acc, pred) {
                return true;
            }
            acc.pop();
        }
        false
    }
    rec(g, pool, 0, size, &mut Vec::new(), pred)
}

/// Decision form used as the default oracle of the clique Turing kernel.
pub fn wclique_at_least(g: &Graph, w: &WeightMap, threshold: i64) -> Result<bool> {
    Ok(max_wclique(g, w)?.0 >= threshold)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, WeightMap};

    fn petersen() -> Graph {
        // outer 5-cycle, inner 5-star, spokes
        let mut e = vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)];
        e.extend([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]);
        e.extend([(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]);
        Graph::from_edges(10, &e)
    }

    #[test]
    fn wis_on_c5() {
        let (v, s) = max_wis(&Graph::cycle(5), &WeightMap::unit(5)).unwrap();
        assert_eq!(v, 2);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn chromatic_petersen_is_three() {
        let g = petersen();
        assert_eq!(chromatic_number(&g).unwrap(), 3);
        // second, independent backtracking order: permute the graph
        let perm: Vec<usize> = (0..10).rev().collect();
        let mut edges = Vec::new();
        for (u, v) in g.edges() {
            edges.push((perm[u].min(perm[v]), perm[u].max(perm[v])));
        }
        let g2 = Graph::from_edges(10, &edges);
        assert_eq!(chromatic_number(&g2).unwrap(), 3);
    }

    #[test]
    fn fillin_of_c6_is_three() {
        assert_eq!(min_fillin(&Graph::cycle(6)).unwrap(), 3);
    }

    #[test]
    fn self_consistency_wis_complements_vc() {
        // unit weights: max IS + min VC = n, via min VC = n - max IS
        for g in [Graph::cycle(5), Graph::complete(4), Graph::path(6)] {
            let n = g.n() as i64;
            let (alpha, _) = max_wis(&g, &WeightMap::unit(g.n())).unwrap();
            // min vertex cover by enumeration
            let mut best = n;
            for mask in 0u32..(1 << g.n()) {
                let vs: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
                if is_vertex_cover(&g, &vs) {
                    best = best.min(vs.len() as i64);
                }
            }
            assert_eq!(alpha + best, n);
        }
    }

    #[test]
    fn d_colorable_with_enough_colors_takes_everything() {
        let g = Graph::complete(4);
        let w = WeightMap::new(vec![2, 3, 4, 5]);
        let (v, s) = max_d_colorable(&g, &w, 4).unwrap();
        assert_eq!(v, 14);
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn fillin_zero_iff_chordal() {
        assert_eq!(min_fillin(&Graph::complete(4)).unwrap(), 0);
        assert_eq!(min_fillin(&Graph::cycle(4)).unwrap(), 1);
        assert!(chordal_by_definition(&Graph::complete(4)).unwrap());
        assert!(!chordal_by_definition(&Graph::cycle(4)).unwrap());
    }

    #[test]
    fn cvc_examples() {
        // star: the center covers everything
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(min_cvc(&star, &WeightMap::unit(4)).unwrap().0, 1);
        // C4 needs three vertices: two opposite are disconnected
        assert_eq!(min_cvc(&Graph::cycle(4), &WeightMap::unit(4)).unwrap().0, 3);
        // P4: the two middle vertices
        assert_eq!(min_cvc(&Graph::path(4), &WeightMap::unit(4)).unwrap().0, 2);
    }

    #[test]
    fn size_guard_trips() {
        let g = Graph::edgeless(21);
        assert!(matches!(
            max_wis(&g, &WeightMap::unit(21)),
            Err(Error::OracleSizeGuard(21, 20))
        ));
    }

    #[test]
    fn split_edit_examples() {
        // K3 plus pendant is split already
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert_eq!(min_split_edit(&g).unwrap(), 0);
        assert_eq!(min_split_edit(&Graph::cycle(4)).unwrap(), 1);
        assert!(min_split_edit(&Graph::cycle(5)).unwrap() <= 2);
    }
}
