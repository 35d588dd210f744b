//! Elementary transformations: powers, subdivisions, subset complementation
//! and induced subgraphs.

use std::collections::VecDeque;

use super::{Graph, VertexSubset};
use crate::{Error, Result};

/// The `p`-th power: same vertices, `uv` an edge iff `1 <= dist(u, v) <= p`.
pub fn power_graph(g: &Graph, p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(Error::input("graph power needs p >= 1"));
    }
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    let mut dist = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist[s] = 0;
        touched.push(s);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if dist[u] == p {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    touched.push(w);
                    queue.push_back(w);
                    adj[s].push(w);
                }
            }
        }
        for v in touched.drain(..) {
            dist[v] = usize::MAX;
        }
    }
    Ok(Graph::from_raw_adjacency(adj))
}

/// Replaces every edge by a path with `p` fresh internal vertices.
///
/// Original vertices keep their indices. Fresh vertices are numbered from
/// `n` upward following the sorted edge list: edge number `k` (`u < v`) gets
/// internal vertices `n + k*p .. n + (k+1)*p`, laid out from `u` to `v`.
pub fn subdivide(g: &Graph, p: usize) -> Graph {
    if p == 0 {
        return g.clone();
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut adj = vec![Vec::new(); n + p * m];
    let mut link = |a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for (k, (u, v)) in g.edges().enumerate() {
        let base = n + k * p;
        link(u, base);
        for i in 1..p {
            link(base + i - 1, base + i);
        }
        link(base + p - 1, v);
    }
    Graph::from_raw_adjacency(adj)
}

/// Flips adjacency between every pair of distinct members of `mask`; pairs
/// with at most one endpoint in `mask` are untouched.
pub fn subset_complement(g: &Graph, mask: &VertexSubset) -> Graph {
    let n = g.vertex_count();
    debug_assert_eq!(mask.universe(), n);
    let members = mask.to_vec();
    let mut adj: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            if mask.contains(u) {
                g.neighbors(u)
                    .iter()
                    .copied()
                    .filter(|&w| !mask.contains(w))
                    .collect()
            } else {
                g.neighbors(u).to_vec()
            }
        })
        .collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !g.has_edge(u, v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    Graph::from_raw_adjacency(adj)
}

/// The subgraph induced by `keep`, reindexed densely in increasing order.
/// The returned map sends each new index to its original vertex.
pub fn induced_subgraph(g: &Graph, keep: &VertexSubset) -> (Graph, Vec<usize>) {
    induced_on_sorted(g, &keep.to_vec())
}

/// Same as [`induced_subgraph`] for an already sorted, duplicate-free
/// vertex list.
pub(crate) fn induced_on_sorted(g: &Graph, vertices: &[usize]) -> (Graph, Vec<usize>) {
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in vertices.iter().enumerate() {
        local[v] = i;
    }
    let adj = vertices
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                .collect()
        })
        .collect();
    (Graph::from_raw_adjacency(adj), vertices.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::Path { n }).unwrap()
    }

    fn edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn power_examples() {
        let c5 = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        assert_eq!(power_graph(&c5, 2).unwrap(), generate(&FamilySpec::Complete { n: 5 }).unwrap());
        assert_eq!(power_graph(&c5, 1).unwrap(), c5);
        let p4 = path(4);
        assert_eq!(
            edges(&power_graph(&p4, 2).unwrap()),
            vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
        );
        assert!(power_graph(&p4, 0).is_err());
    }

    #[test]
    fn subdivision_examples() {
        let k3 = generate(&FamilySpec::Complete { n: 3 }).unwrap();
        let c6 = subdivide(&k3, 1);
        assert_eq!(c6.vertex_count(), 6);
        assert!((0..6).all(|v| c6.degree(v) == 2));
        assert_eq!(c6.components().len(), 1);
        assert_eq!(subdivide(&k3, 0), k3);
        let k2 = generate(&FamilySpec::Complete { n: 2 }).unwrap();
        let p5 = subdivide(&k2, 3);
        // 0 - 2 - 3 - 4 - 1
        assert_eq!(edges(&p5), vec![(0, 2), (1, 4), (2, 3), (3, 4)]);
    }

    #[test]
    fn complement_example() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        let m = VertexSubset::from_indices(4, [0, 1, 2]).unwrap();
        let h = subset_complement(&c4, &m);
        assert_eq!(edges(&h), vec![(0, 2), (0, 3), (2, 3)]);
        assert_eq!(h.degree(1), 0);
        assert_eq!(subset_complement(&c4, &VertexSubset::new(4)), c4);
        assert_eq!(subset_complement(&h, &m), c4);
    }

    #[test]
    fn induced_examples() {
        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        let (h, map) = induced_subgraph(&k4, &VertexSubset::from_indices(4, [3, 1, 2]).unwrap());
        assert_eq!(h, generate(&FamilySpec::Complete { n: 3 }).unwrap());
        assert_eq!(map, vec![1, 2, 3]);
        let (e, _) = induced_subgraph(&k4, &VertexSubset::new(4));
        assert_eq!(e.vertex_count(), 0);
        let c5 = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        let (h, _) = induced_subgraph(&c5, &VertexSubset::from_indices(5, [3, 4]).unwrap());
        assert_eq!(edges(&h), vec![(0, 1)]);
    }
}
