//! Brute-force oracles for the integration and acceptance tests. They work
//! on plain adjacency bitmasks and share no code with the library's search
//! routines.

#![allow(dead_code)]

use std::collections::BTreeSet;

use pidecomp::Graph;
use proptest::prelude::*;

/// Adjacency bitmasks of a graph on at most 32 vertices.
pub fn masks(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    assert!(n <= 32);
    (0..n)
        .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0, |m, v| m | 1 << v))
        .collect()
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// The labeled graph whose edges are the pairs selected by `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| code >> i & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).unwrap()
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let m = n * n.saturating_sub(1) / 2;
    (0..1u64 << m).map(move |c| graph_from_code(n, c))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    for (k, (u, v)) in pairs(n).into_iter().enumerate() {
        idx[u][v] = k;
        idx[v][u] = k;
    }
    idx
}

/// One representative (by minimum edge code over all relabelings) of every
/// isomorphism class of graphs on `n` vertices, built by adding a vertex to
/// the representatives on `n - 1` vertices.
pub fn unlabeled(n: usize) -> Vec<Graph> {
    let mut reps: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..=n {
        let perms = permutations(k);
        let idx = pair_index(k);
        let small = pair_index(k.saturating_sub(1));
        // pair_maps[p][e] = position of edge e under permutation p.
        let pair_maps: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| pairs(k).iter().map(|&(u, v)| idx[p[u]][p[v]]).collect())
            .collect();
        let mut next = BTreeSet::new();
        for &code in &reps {
            for nbrs in 0..1u64 << (k - 1) {
                let mut full = 0u64;
                for &(u, v) in &pairs(k - 1) {
                    if code >> small[u][v] & 1 == 1 {
                        full |= 1 << idx[u][v];
                    }
                }
                for w in 0..k - 1 {
                    if nbrs >> w & 1 == 1 {
                        full |= 1 << idx[w][k - 1];
                    }
                }
                let canon = pair_maps
                    .iter()
                    .map(|map| {
                        let mut c = 0u64;
                        let mut rest = full;
                        while rest != 0 {
                            let e = rest.trailing_zeros() as usize;
                            rest &= rest - 1;
                            c |= 1 << map[e];
                        }
                        c
                    })
                    .min()
                    .unwrap();
                next.insert(canon);
            }
        }
        reps = next;
    }
    reps.into_iter().map(|c| graph_from_code(n, c)).collect()
}

fn components(adj: &[u32], live: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut rest = live;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        loop {
            let grown = comp | (0..32).filter(|&v| comp >> v & 1 == 1).fold(0, |m, v| m | adj[v]) & live;
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

/// Treedepth from the recursive definition, without memoization:
/// `td(∅) = 0`, the maximum over components, and `1 + min_v td(C − v)` on a
/// connected `C`.
pub fn treedepth_brute(g: &Graph) -> usize {
    let adj = masks(g);
    let all = if g.vertex_count() == 32 { u32::MAX } else { (1u32 << g.vertex_count()) - 1 };
    td_rec(&adj, all)
}

fn td_rec(adj: &[u32], live: u32) -> usize {
    if live == 0 {
        return 0;
    }
    let comps = components(adj, live);
    if comps.len() > 1 {
        return comps.iter().map(|&c| td_rec(adj, c)).max().unwrap();
    }
    (0..32)
        .filter(|&v| live >> v & 1 == 1)
        .map(|v| 1 + td_rec(adj, live & !(1 << v)))
        .min()
        .unwrap()
}

/// Whether some disjoint `A`, `B` with `|A| = s`, `|B| = t` are completely
/// joined, by trying every pair of vertex subsets.
pub fn has_biclique_brute(g: &Graph, s: usize, t: usize) -> bool {
    let n = g.vertex_count();
    let adj = masks(g);
    let subsets = |k: usize| (0u32..1 << n).filter(move |m| m.count_ones() as usize == k);
    subsets(s).any(|a| {
        subsets(t).any(|b| {
            a & b == 0
                && (0..n)
                    .filter(|&u| a >> u & 1 == 1)
                    .all(|u| adj[u] & b == b)
        })
    })
}

/// Largest vertex set all of whose subsets are cut out by some open
/// neighborhood, by checking every vertex subset.
pub fn vc_brute(g: &Graph) -> usize {
    let n = g.vertex_count();
    let adj = masks(g);
    let mut best = 0;
    for s in 0u32..1 << n {
        let k = s.count_ones() as usize;
        if k <= best {
            continue;
        }
        let traces: BTreeSet<u32> = adj.iter().map(|&a| a & s).collect();
        if traces.len() == 1 << k {
            best = k;
        }
    }
    best
}

/// Largest `k` with distinct `a_1..a_k, b_1..b_k` and `a_i b_j` an edge iff
/// `i <= j`, by extending ordered sequences one rung at a time and checking
/// every cross pair afresh.
pub fn half_graph_brute(g: &Graph) -> usize {
    fn ok(g: &Graph, a: &[usize], b: &[usize]) -> bool {
        a.iter().enumerate().all(|(i, &x)| {
            b.iter().enumerate().all(|(j, &y)| g.has_edge(x, y) == (i <= j))
        })
    }
    fn grow(g: &Graph, a: &mut Vec<usize>, b: &mut Vec<usize>) -> usize {
        let n = g.vertex_count();
        let mut best = a.len();
        for x in 0..n {
            for y in 0..n {
                if x == y || a.contains(&x) || a.contains(&y) || b.contains(&x) || b.contains(&y) {
                    continue;
                }
                a.push(x);
                b.push(y);
                if ok(g, a, b) {
                    best = best.max(grow(g, a, b));
                }
                a.pop();
                b.pop();
            }
        }
        best
    }
    grow(g, &mut vec![], &mut vec![])
}

/// Maximum independent set size by checking every vertex subset.
pub fn mis_brute(g: &Graph) -> usize {
    let n = g.vertex_count();
    let adj = masks(g);
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// Fewest deletions leaving maximum degree at most `d`, by checking every
/// vertex subset in increasing size.
pub fn min_deletions_brute(g: &Graph, d: usize) -> usize {
    let n = g.vertex_count();
    let adj = masks(g);
    (0u32..1 << n)
        .filter(|&del| {
            (0..n).all(|v| del >> v & 1 == 1 || (adj[v] & !del).count_ones() as usize <= d)
        })
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

/// Maximum edge count over every labeled graph on `n` vertices without a
/// `K_{2,2}` subgraph, i.e. without two vertices sharing two neighbors.
pub fn c4_free_max_edges(n: usize) -> usize {
    let ps = pairs(n);
    let mut best = 0;
    for code in 0u64..1 << ps.len() {
        let edges = code.count_ones() as usize;
        if edges <= best {
            continue;
        }
        let mut adj = vec![0u32; n];
        for (k, &(u, v)) in ps.iter().enumerate() {
            if code >> k & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        if ps.iter().all(|&(u, v)| (adj[u] & adj[v]).count_ones() < 2) {
            best = edges;
        }
    }
    best
}

/// Whether `g` contains a triangle.
pub fn has_triangle(g: &Graph) -> bool {
    let adj = masks(g);
    pairs(g.vertex_count())
        .into_iter()
        .any(|(u, v)| adj[u] >> v & 1 == 1 && adj[u] & adj[v] != 0)
}

/// Random simple graph on up to `max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let m = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let edges = pairs(n)
                .into_iter()
                .zip(bits)
                .filter(|&(_, b)| b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph together with part labels in `0..max_parts` for each vertex.
pub fn arb_labeled(max_n: usize, max_parts: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(move |g| {
        let n = g.vertex_count();
        (Just(g), proptest::collection::vec(0..max_parts, n))
    })
}
