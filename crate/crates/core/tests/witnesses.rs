//! Audit of the minimal-witness templates: exhaustively enumerate every
//! graph on six and seven vertices, keep the minimal graphs containing an
//! asteroidal triple that are chordal, and check that the classifier tags
//! each isomorphism class with the expected shape.
//!
//! The exhaustive part scans 2^21 graphs; run it explicitly with
//! `cargo test --release --test witnesses -- --ignored`.

use std::collections::BTreeMap;

use almost_chordal::at::{classify_witness, find_at, WitnessShape};
use almost_chordal::graph::Graph;

fn reach(adj: &[u32; 8], allowed: u32, s: usize) -> u32 {
    if allowed >> s & 1 == 0 {
        return 0;
    }
    let mut r = 1u32 << s;
    loop {
        let mut nr = r;
        let mut q = r;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= q - 1;
            nr |= adj[v] & allowed;
        }
        if nr == r {
            return r;
        }
        r = nr;
    }
}

fn has_at_within(adj: &[u32; 8], n: usize, subset: u32) -> bool {
    for a in 0..n {
        if subset >> a & 1 == 0 {
            continue;
        }
        for b in a + 1..n {
            if subset >> b & 1 == 0 || adj[a] >> b & 1 == 1 {
                continue;
            }
            for c in b + 1..n {
                if subset >> c & 1 == 0 || adj[a] >> c & 1 == 1 || adj[b] >> c & 1 == 1 {
                    continue;
                }
                let closed = |v: usize| adj[v] | (1u32 << v);
                if reach(adj, subset & !closed(c), a) >> b & 1 == 1
                    && reach(adj, subset & !closed(b), a) >> c & 1 == 1
                    && reach(adj, subset & !closed(a), b) >> c & 1 == 1
                {
                    return true;
                }
            }
        }
    }
    false
}

fn chordal(adj: &[u32; 8], n: usize) -> bool {
    // maximum-cardinality search, then verify the elimination ordering
    let mut visited: u32 = 0;
    let mut wt = [0i32; 8];
    let mut elim = [0usize; 8];
    for k in 0..n {
        let mut best = usize::MAX;
        let mut bw = -1i32;
        for v in 0..n {
            if visited >> v & 1 == 0 && wt[v] > bw {
                bw = wt[v];
                best = v;
            }
        }
        visited |= 1 << best;
        elim[n - 1 - k] = best;
        let mut nb = adj[best] & !visited;
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            wt[v] += 1;
        }
    }
    let mut pos = [0usize; 8];
    for (i, &v) in elim.iter().enumerate().take(n) {
        pos[v] = i;
    }
    for i in 0..n {
        let v = elim[i];
        let mut later: u32 = 0;
        let mut nb = adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if pos[u] > i {
                later |= 1 << u;
            }
        }
        let mut l = later;
        while l != 0 {
            let u = l.trailing_zeros() as usize;
            l &= l - 1;
            if later & !adj[u] & !(1u32 << u) != 0 {
                return false;
            }
        }
    }
    true
}

fn canonical(edges: &[(usize, usize)], n: usize) -> u64 {
    let idx = |i: usize, j: usize| -> usize {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let mut p = 0;
        for x in 0..a {
            p += n - 1 - x;
        }
        p + (b - a - 1)
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut mask: u64 = 0;
        for &(u, v) in edges {
            mask |= 1u64 << idx(perm[u], perm[v]);
        }
        best = best.min(mask);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every minimal chordal witness on `n` vertices, one edge list per
/// isomorphism class.
fn enumerate_minimal_chordal_witnesses(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut pairs = vec![];
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    let e = pairs.len();
    let mut adj = [0u32; 8];
    let full = (1u32 << n) - 1;
    let mut found: BTreeMap<u64, Vec<(usize, usize)>> = BTreeMap::new();
    for step in 1u64..(1u64 << e) {
        let b = step.trailing_zeros() as usize;
        let (i, j) = pairs[b];
        adj[i] ^= 1 << j;
        adj[j] ^= 1 << i;
        if (0..n).any(|v| adj[v] == 0) {
            continue;
        }
        if reach(&adj, full, 0) != full {
            continue;
        }
        if !chordal(&adj, n) {
            continue;
        }
        if !has_at_within(&adj, n, full) {
            continue;
        }
        if (0..n).any(|v| has_at_within(&adj, n, full & !(1u32 << v))) {
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(a, b)| adj[a] >> b & 1 == 1).collect();
        found.entry(canonical(&edges, n)).or_insert(edges);
    }
    found.into_values().collect()
}

fn shape_of(edges: &[(usize, usize)], n: usize) -> WitnessShape {
    let g = Graph::from_edges(n, edges);
    let t = find_at(&g, None).expect("witness has an AT");
    classify_witness(&g, t)
}

#[test]
#[ignore = "exhaustive scan of all 7-vertex graphs; run in release"]
fn exhaustive_minimal_chordal_witness_classes() {
    let six = enumerate_minimal_chordal_witnesses(6);
    let mut shapes6: Vec<String> = six.iter().map(|e| shape_of(e, 6).to_string()).collect();
    shapes6.sort();
    assert_eq!(shapes6, ["F3(2)", "F4(1)"], "six-vertex classes");

    let seven = enumerate_minimal_chordal_witnesses(7);
    let mut shapes7: Vec<String> = seven.iter().map(|e| shape_of(e, 7).to_string()).collect();
    shapes7.sort();
    assert_eq!(shapes7, ["F1", "F2", "F3(3)", "F4(2)"], "seven-vertex classes");
}

/// Fast spot checks of the same classes, from fixed representatives.
#[test]
fn template_representatives_classify() {
    let cases: Vec<(usize, Vec<(usize, usize)>, &str)> = vec![
        // net: triangle with three pendants
        (6, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)], "F3(2)"),
        // sun: triangle with three two-attached outer vertices
        (
            6,
            vec![(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)],
            "F4(1)",
        ),
        // subdivided claw
        (7, vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)], "F1"),
        // whipping top
        (
            7,
            vec![
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
            ],
            "F2",
        ),
        // seven-vertex members of the two families
        (
            7,
            vec![(0, 1), (1, 2), (3, 0), (3, 1), (3, 2), (3, 4), (0, 5), (2, 6)],
            "F3(3)",
        ),
        (
            7,
            vec![
                (0, 1),
                (2, 0),
                (2, 1),
                (3, 0),
                (3, 1),
                (2, 3),
                (4, 2),
                (4, 0),
                (5, 3),
                (5, 1),
                (6, 2),
                (6, 3),
            ],
            "F4(2)",
        ),
    ];
    for (n, edges, expect) in cases {
        assert_eq!(shape_of(&edges, n).to_string(), expect, "{:?}", edges);
    }
    // the six-cycle with alternating terminals
    let c6 = Graph::cycle(6);
    let t = find_at(&c6, None).unwrap();
    assert_eq!(classify_witness(&c6, t).to_string(), "F5");
}
