//! The simple undirected graph carrier and its text format.

mod generate;
pub(crate) mod ops;

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::io::Read;

use sha2::{Digest, Sha256};

use crate::{Error, Result};

pub use generate::{generate, FamilySpec};
pub use ops::{induced_subgraph, power_graph, subdivide, subset_complement};

/// A finite simple undirected graph on the vertices `0..vertex_count`.
///
/// Neighbor lists are kept sorted, so two graphs with the same edge set
/// compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and deduplicates raw symmetric neighbor lists.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph {
            adj,
            edge_count: twice / 2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Adjacency rows as 64-bit masks, available when the graph has at most
    /// 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.vertex_count() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &w| m | (1u64 << w)))
                .collect(),
        )
    }

    /// Canonical edge-list text: `"n m"` followed by sorted `"u v"` lines
    /// with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(16 + self.edge_count * 8);
        let _ = writeln!(out, "{} {}", self.vertex_count(), self.edge_count);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// SHA-256 of the canonical edge list, hex encoded. Used to tie
    /// decomposition and report files to the graph they describe.
    pub fn content_hash(&self) -> String {
        let digest = Sha256::digest(self.to_edge_list().as_bytes());
        digest.iter().fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }
}

/// Parses the edge-list format: a header line `"n m"` followed by exactly
/// `m` lines `"u v"`. Blank lines are skipped. Errors carry the 1-based
/// line number.
pub fn load_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header line \"n m\""))?;
    let (n, m) = parse_pair(hline, header)?;

    let mut adj = vec![Vec::new(); n];
    let mut read = 0;
    for (line, content) in lines {
        if read == m {
            return Err(Error::parse(
                line,
                format!("unexpected line after the {m} declared edges"),
            ));
        }
        let (u, v) = parse_pair(line, content)?;
        if u >= n || v >= n {
            return Err(Error::parse(
                line,
                format!("endpoint out of range 0..{n} in edge ({u}, {v})"),
            ));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        adj[u].push(v);
        adj[v].push(u);
        read += 1;
    }
    if read < m {
        let last = text.lines().count().max(1);
        return Err(Error::parse(
            last,
            format!("expected {m} edge lines, found {read}"),
        ));
    }
    Ok(Graph::from_raw_adjacency(adj))
}

/// Reads an edge list from any reader.
pub fn read_edge_list<R: Read>(mut reader: R) -> std::io::Result<Result<Graph>> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    Ok(load_edge_list(&text))
}

fn parse_pair(line: usize, content: &str) -> Result<(usize, usize)> {
    let mut it = content.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| Error::parse(line, format!("{what} {tok:?} is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(Error::parse(line, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// A set of vertex indices of a graph with `universe` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    flags: Vec<bool>,
}

impl VertexSubset {
    pub fn new(universe: usize) -> Self {
        VertexSubset {
            flags: vec![false; universe],
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSubset {
            flags: vec![true; universe],
        }
    }

    /// Collects `indices` into a subset; repeated indices are harmless.
    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::new(universe);
        for v in indices {
            if v >= universe {
                return Err(Error::input(format!(
                    "vertex {v} outside 0..{universe}"
                )));
            }
            s.flags[v] = true;
        }
        Ok(s)
    }

    pub fn from_flags(flags: Vec<bool>) -> Self {
        VertexSubset { flags }
    }

    pub fn universe(&self) -> usize {
        self.flags.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.flags.get(v).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: usize) {
        self.flags[v] = true;
    }

    pub fn remove(&mut self, v: usize) {
        self.flags[v] = false;
    }

    pub fn len(&self) -> usize {
        self.flags.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.flags.iter().any(|&b| b)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.flags
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}
