//! Certificate validators.
//!
//! Each function re-checks a witness against the graph using only
//! adjacency queries, so a bug in a search routine cannot also hide in its
//! own validation.

use std::collections::HashSet;

use thiserror::Error;

use crate::checkers::{BicliqueWitness, SubdivisionWitness, TreedepthForest};
use crate::graph::Graph;
use crate::patterns::{HalfGraphWitness, ShatterWitness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid witness: {0}")]
pub struct InvalidWitness(pub String);

type Checked<T = ()> = Result<T, InvalidWitness>;

fn fail<T>(msg: impl Into<String>) -> Checked<T> {
    Err(InvalidWitness(msg.into()))
}

fn in_range(g: &Graph, vs: &[usize]) -> Checked {
    match vs.iter().find(|&&v| v >= g.vertex_count()) {
        Some(v) => fail(format!("vertex {v} out of range")),
        None => Ok(()),
    }
}

fn distinct(vs: &[usize]) -> Checked {
    let mut seen = HashSet::new();
    match vs.iter().find(|&&v| !seen.insert(v)) {
        Some(v) => fail(format!("vertex {v} repeated")),
        None => Ok(()),
    }
}

/// Checks that `forest` is a rooted forest on `V(g)` in which every edge
/// joins an ancestor to a descendant. Returns its depth.
pub fn validate_treedepth_forest(g: &Graph, forest: &TreedepthForest) -> Checked<usize> {
    let n = g.vertex_count();
    if forest.parent.len() != n {
        return fail(format!(
            "forest has {} vertices, graph has {n}",
            forest.parent.len()
        ));
    }
    // ancestors[v] = path from v up to its root, v included.
    let mut ancestors: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut chain = vec![v];
        let mut cur = v;
        while let Some(p) = forest.parent[cur] {
            if p >= n {
                return fail(format!("parent {p} out of range"));
            }
            if chain.len() > n {
                return fail("parent pointers contain a cycle");
            }
            chain.push(p);
            cur = p;
        }
        ancestors.push(chain);
    }
    for (u, v) in g.edges() {
        if !ancestors[u].contains(&v) && !ancestors[v].contains(&u) {
            return fail(format!("edge {u}-{v} is not ancestor-descendant"));
        }
    }
    Ok(ancestors.iter().map(Vec::len).max().unwrap_or(0))
}

/// Checks that `left` (size `s`) and `right` (size `t`) are disjoint and
/// completely joined.
pub fn validate_biclique(g: &Graph, w: &BicliqueWitness, s: usize, t: usize) -> Checked {
    if w.left.len() != s || w.right.len() != t {
        return fail(format!(
            "sides have sizes {}x{}, expected {s}x{t}",
            w.left.len(),
            w.right.len()
        ));
    }
    let all: Vec<usize> = w.left.iter().chain(&w.right).copied().collect();
    in_range(g, &all)?;
    distinct(&all)?;
    for &a in &w.left {
        for &b in &w.right {
            if !g.has_edge(a, b) {
                return fail(format!("missing edge {a}-{b}"));
            }
        }
    }
    Ok(())
}

/// Checks that `map[i]` embeds `h` into `g` as an induced subgraph.
pub fn validate_induced_map(g: &Graph, h: &Graph, map: &[usize]) -> Checked {
    if map.len() != h.vertex_count() {
        return fail("map length differs from pattern size");
    }
    in_range(g, map)?;
    distinct(map)?;
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if h.has_edge(i, j) != g.has_edge(map[i], map[j]) {
                return fail(format!("pair ({i},{j}) is not preserved"));
            }
        }
    }
    Ok(())
}

/// Checks a `p`-subdivided `K_q`: `q` branch vertices and one path per pair
/// `(i, j)`, `i < j` in lexicographic order, each with exactly `p` internal
/// vertices, all internal vertices distinct and off the branch set.
pub fn validate_clique_subdivision(
    g: &Graph,
    w: &SubdivisionWitness,
    p: usize,
    q: usize,
) -> Checked {
    if w.branch.len() != q {
        return fail(format!("{} branch vertices, expected {q}", w.branch.len()));
    }
    in_range(g, &w.branch)?;
    let mut used: Vec<usize> = w.branch.clone();
    let mut k = 0;
    for i in 0..q {
        for j in i + 1..q {
            let Some(path) = w.paths.get(k) else {
                return fail("too few paths");
            };
            k += 1;
            if path.len() != p + 2 {
                return fail(format!("path {i}-{j} has {} vertices", path.len()));
            }
            if path[0] != w.branch[i] || path[p + 1] != w.branch[j] {
                return fail(format!("path {i}-{j} has wrong endpoints"));
            }
            in_range(g, path)?;
            for e in path.windows(2) {
                if !g.has_edge(e[0], e[1]) {
                    return fail(format!("missing edge {}-{}", e[0], e[1]));
                }
            }
            used.extend_from_slice(&path[1..=p]);
        }
    }
    if k != w.paths.len() {
        return fail("too many paths");
    }
    distinct(&used)
}

/// Checks `a_i b_j` is an edge exactly when `i <= j`, all vertices distinct.
pub fn validate_half_graph(g: &Graph, w: &HalfGraphWitness) -> Checked {
    if w.a.len() != w.b.len() {
        return fail("sides differ in length");
    }
    let all: Vec<usize> = w.a.iter().chain(&w.b).copied().collect();
    in_range(g, &all)?;
    distinct(&all)?;
    for (i, &x) in w.a.iter().enumerate() {
        for (j, &y) in w.b.iter().enumerate() {
            if g.has_edge(x, y) != (i <= j) {
                return fail(format!("pair (a{i}, b{j}) breaks the ladder"));
            }
        }
    }
    Ok(())
}

/// Checks that every subset `T` of `set` is cut out by `N(realizers[T])`.
/// The empty set is shattered only by a nonempty graph.
pub fn validate_shatter(g: &Graph, w: &ShatterWitness) -> Checked {
    in_range(g, &w.set)?;
    distinct(&w.set)?;
    if w.set.len() >= usize::BITS as usize {
        return fail("set too large");
    }
    let patterns = 1usize << w.set.len();
    if w.realizers.len() != patterns {
        if g.vertex_count() == 0 && w.set.is_empty() && w.realizers.is_empty() {
            return Ok(());
        }
        return fail(format!(
            "{} realizers, expected {patterns}",
            w.realizers.len()
        ));
    }
    in_range(g, &w.realizers)?;
    for (t, &v) in w.realizers.iter().enumerate() {
        for (i, &s) in w.set.iter().enumerate() {
            if g.has_edge(v, s) != (t >> i & 1 == 1) {
                return fail(format!("realizer {v} has the wrong trace for {t:b}"));
            }
        }
    }
    Ok(())
}

/// Checks that `set` is an independent set of distinct in-range vertices.
pub fn validate_independent_set(g: &Graph, set: &[usize]) -> Checked {
    in_range(g, set)?;
    distinct(set)?;
    for (k, &u) in set.iter().enumerate() {
        for &v in &set[k + 1..] {
            if g.has_edge(u, v) {
                return fail(format!("edge {u}-{v} inside the set"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn forest_checks() {
        let g = p4();
        let good = TreedepthForest {
            parent: vec![Some(1), None, Some(1), Some(2)],
        };
        assert_eq!(validate_treedepth_forest(&g, &good), Ok(3));
        let flat = TreedepthForest {
            parent: vec![None; 4],
        };
        assert!(validate_treedepth_forest(&g, &flat).is_err());
        let cyc = TreedepthForest {
            parent: vec![Some(1), Some(0), Some(1), Some(2)],
        };
        assert!(validate_treedepth_forest(&g, &cyc).is_err());
    }

    #[test]
    fn independent_set_checks() {
        let g = p4();
        assert!(validate_independent_set(&g, &[0, 2]).is_ok());
        assert!(validate_independent_set(&g, &[0, 3, 0]).is_err());
        assert!(validate_independent_set(&g, &[1, 2]).is_err());
        assert!(validate_independent_set(&g, &[7]).is_err());
    }

    #[test]
    fn half_graph_rejects_extra_edge() {
        let g = Graph::from_edges(4, [(0, 2), (0, 3), (1, 3), (1, 2)]).unwrap();
        let w = HalfGraphWitness {
            a: vec![0, 1],
            b: vec![2, 3],
        };
        assert!(validate_half_graph(&g, &w).is_err());
    }

    #[test]
    fn shatter_on_null_graph() {
        assert!(validate_shatter(&Graph::empty(0), &ShatterWitness::default()).is_ok());
        assert!(validate_shatter(&Graph::empty(1), &ShatterWitness::default()).is_err());
    }

    #[test]
    fn subdivision_rejects_shared_internal() {
        // Two paths through the same middle vertex 3.
        let g = Graph::from_edges(4, [(0, 3), (1, 3), (2, 3)]).unwrap();
        let w = SubdivisionWitness {
            branch: vec![0, 1, 2],
            paths: vec![vec![0, 3, 1], vec![0, 3, 2], vec![1, 3, 2]],
        };
        assert!(validate_clique_subdivision(&g, &w, 1, 3).is_err());
    }
}
