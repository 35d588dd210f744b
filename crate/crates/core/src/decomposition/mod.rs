//! Vertex partitions whose `p`-wise part unions are tested against a
//! hereditary property, and the operations that combine them.

mod bound;
mod format;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::checkers::PropertyChecker;
use crate::graph::ops::induced_on_sorted;
use crate::graph::Graph;
use crate::subsets::Colex;
use crate::{Error, Result};

pub use bound::{compose_bound, BoundLedger};
pub use format::DecompositionDocument;

/// A partition of a graph's vertices into `N` nonempty parts, together with
/// the parameter `p` it is meant to be verified at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    graph: Arc<Graph>,
    part_of: Vec<usize>,
    parts: Vec<Vec<usize>>,
    p: usize,
}

/// Outcome of [`Decomposition::verify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// Every union of `min(p, N)` parts was accepted.
    Pass { unions_checked: usize },
    /// First rejected part subset in colex order.
    Fail { subset: Vec<usize>, unions_checked: usize },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass { .. })
    }
}

/// Result of [`Decomposition::compose`].
#[derive(Clone, Debug)]
pub struct Composition {
    pub decomposition: Decomposition,
    /// Signature of each composed part: the outer part index followed by
    /// the vertex's inner part in every outer `p`-subset containing it,
    /// those subsets taken in colex order.
    pub signatures: Vec<(usize, Vec<usize>)>,
    /// `compose_bound(N_outer, max inner N, p)`.
    pub bound: BigUint,
    /// `N_outer < p`: no `p`-subset of outer parts exists and the outer
    /// decomposition is returned as is.
    pub degenerate: bool,
}

impl Decomposition {
    /// Builds a decomposition from arbitrary part labels. Distinct labels
    /// become parts `0..N` in increasing label order.
    pub fn from_labels(graph: Arc<Graph>, labels: &[usize], p: usize) -> Result<Self> {
        if labels.len() != graph.vertex_count() {
            return Err(Error::input(format!(
                "{} labels for a graph on {} vertices",
                labels.len(),
                graph.vertex_count()
            )));
        }
        let mut distinct: Vec<usize> = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let dense: Vec<usize> = labels
            .iter()
            .map(|l| distinct.binary_search(l).unwrap())
            .collect();
        Self::from_dense(graph, dense, distinct.len(), p)
    }

    /// Builds a decomposition from an explicit list of parts, kept in the
    /// given order. Parts must be nonempty and cover every vertex once.
    pub fn from_parts(graph: Arc<Graph>, parts: &[Vec<usize>], p: usize) -> Result<Self> {
        let n = graph.vertex_count();
        let mut part_of = vec![usize::MAX; n];
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::input(format!("part {i} is empty")));
            }
            for &v in part {
                if v >= n {
                    return Err(Error::input(format!("vertex {v} outside 0..{n} in part {i}")));
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::input(format!("vertex {v} appears in two parts")));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&x| x == usize::MAX) {
            return Err(Error::input(format!("vertex {v} is in no part")));
        }
        Self::from_dense(graph, part_of, parts.len(), p)
    }

    /// The one-part decomposition.
    pub fn trivial(graph: Arc<Graph>, p: usize) -> Result<Self> {
        let n = graph.vertex_count();
        Self::from_dense(graph, vec![0; n], usize::from(n > 0), p)
    }

    fn from_dense(graph: Arc<Graph>, part_of: Vec<usize>, count: usize, p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::input("decomposition parameter p must be at least 1"));
        }
        let mut parts = vec![Vec::new(); count];
        for (v, &i) in part_of.iter().enumerate() {
            parts[i].push(v);
        }
        debug_assert!(parts.iter().all(|x| !x.is_empty()));
        Ok(Decomposition {
            graph,
            part_of,
            parts,
            p,
        })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.part_of
    }

    /// Parts as sorted vertex lists.
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Same partition, different parameter.
    pub fn with_p(&self, p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::input("decomposition parameter p must be at least 1"));
        }
        Ok(Decomposition { p, ..self.clone() })
    }

    /// Size of the part subsets verification has to look at.
    pub fn union_size(&self) -> usize {
        self.p.min(self.part_count())
    }

    /// Induced subgraph on the union of the listed parts. Repeated indices
    /// are merged. The map sends new vertex indices to original ones.
    pub fn union_parts(&self, indices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut chosen = indices.to_vec();
        chosen.sort_unstable();
        chosen.dedup();
        if let Some(&bad) = chosen.iter().find(|&&i| i >= self.part_count()) {
            return Err(Error::input(format!(
                "part index {bad} out of range 0..{}",
                self.part_count()
            )));
        }
        let mut vertices: Vec<usize> = chosen.iter().flat_map(|&i| self.parts[i].iter().copied()).collect();
        vertices.sort_unstable();
        Ok(induced_on_sorted(&self.graph, &vertices))
    }

    /// Checks every union of exactly `min(p, N)` parts, in colex order of
    /// the part subsets. Smaller unions are induced subgraphs of these and
    /// are covered by heredity, which is why non-hereditary checkers are
    /// rejected.
    pub fn verify(&self, checker: &PropertyChecker) -> Result<Verdict> {
        if !checker.is_hereditary() {
            return Err(Error::input(format!(
                "checker {} is not hereditary; p-union verification would be unsound",
                checker.name()
            )));
        }
        let mut checked = 0;
        for subset in Colex::new(self.part_count(), self.union_size()) {
            let (union, _) = self.union_parts(&subset)?;
            checked += 1;
            if !checker.check(&union)? {
                return Ok(Verdict::Fail {
                    subset,
                    unions_checked: checked,
                });
            }
        }
        Ok(Verdict::Pass {
            unions_checked: checked,
        })
    }

    /// Common refinement: parts are the nonempty intersections
    /// `V1_i ∩ V2_j`, numbered in lexicographic order of `(i, j)`.
    pub fn intersect(&self, other: &Decomposition) -> Result<Decomposition> {
        if !same_graph(&self.graph, &other.graph) {
            return Err(Error::input("intersected decompositions live on different graphs"));
        }
        if self.p != other.p {
            return Err(Error::input(format!(
                "intersected decompositions have p = {} and p = {}",
                self.p, other.p
            )));
        }
        let width = other.part_count();
        let labels: Vec<usize> = (0..self.part_of.len())
            .map(|v| self.part_of[v] * width + other.part_of[v])
            .collect();
        Decomposition::from_labels(Arc::clone(&self.graph), &labels, self.p)
    }

    /// Composes this (outer) decomposition with decompositions of its
    /// `p`-part unions.
    ///
    /// `inner` must hold, for every `p`-subset `I` of outer part indices
    /// (sorted), a decomposition of `union_parts(I)` with the same `p`.
    /// Each vertex `v` of outer part `i` gets the signature
    /// `(i, [inner[I].part_of(v) for I ∋ i])`; vertices share a composed
    /// part iff their signatures agree. When `N_outer < p` there is no such
    /// `I`, every signature is just `(i, [])`, and the outer decomposition
    /// comes back unchanged (flagged `degenerate`).
    pub fn compose(&self, inner: &BTreeMap<Vec<usize>, Decomposition>) -> Result<Composition> {
        let n_outer = self.part_count();
        let p = self.p;
        let degenerate = n_outer < p;
        let subsets: Vec<Vec<usize>> = if degenerate {
            Vec::new()
        } else {
            Colex::new(n_outer, p).collect()
        };

        // Local index of every vertex inside each p-union.
        let mut per_subset = Vec::with_capacity(subsets.len());
        let mut max_inner = 1usize;
        for subset in &subsets {
            let d = inner.get(subset).ok_or_else(|| {
                Error::input(format!("missing inner decomposition for parts {subset:?}"))
            })?;
            if d.p != p {
                return Err(Error::input(format!(
                    "inner decomposition for {subset:?} has p = {}, outer has p = {p}",
                    d.p
                )));
            }
            let (union, map) = self.union_parts(subset)?;
            if *d.graph != union {
                return Err(Error::input(format!(
                    "inner decomposition for {subset:?} is not over the union of those parts"
                )));
            }
            max_inner = max_inner.max(d.part_count());
            per_subset.push((subset, d, map));
        }

        let n = self.graph.vertex_count();
        let mut signature: Vec<(usize, Vec<usize>)> =
            (0..n).map(|v| (self.part_of[v], Vec::new())).collect();
        for (subset, d, map) in &per_subset {
            for (local, &v) in map.iter().enumerate() {
                debug_assert!(subset.contains(&self.part_of[v]));
                signature[v].1.push(d.part_of[local]);
            }
        }

        let mut distinct = signature.clone();
        distinct.sort();
        distinct.dedup();
        let labels: Vec<usize> = signature
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let decomposition = Decomposition::from_dense(Arc::clone(&self.graph), labels, distinct.len(), p)?;
        Ok(Composition {
            decomposition,
            signatures: distinct,
            bound: compose_bound(n_outer as u64, max_inner as u64, p as u64),
            degenerate,
        })
    }
}

fn same_graph(a: &Arc<Graph>, b: &Arc<Graph>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Random part labels for `n` vertices in `0..parts`. When `n >= parts`
/// every label is used: a random choice of `parts` vertices is assigned one
/// label each, the rest are uniform.
pub fn random_labels<R: Rng + ?Sized>(n: usize, parts: usize, rng: &mut R) -> Vec<usize> {
    assert!(parts >= 1, "at least one part");
    let mut labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..parts)).collect();
    if n >= parts {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for (label, &v) in order.iter().take(parts).enumerate() {
            labels[v] = label;
        }
    }
    labels
}
