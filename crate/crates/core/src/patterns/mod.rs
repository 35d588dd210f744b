//! Miners for stability and independence patterns of the edge relation.

mod half_graph;
mod pigeonhole;
mod vc;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

pub use half_graph::{half_graph_order, HalfGraphOrder};
pub use pigeonhole::{half_graph_pigeonhole, PigeonholeExtraction};
pub use vc::{vc_dimension, VcDimension};

/// Sequences `a_1..a_n`, `b_1..b_n` of distinct vertices with `a_i b_j` an
/// edge iff `i <= j`. Adjacency inside the `a` side or the `b` side is not
/// constrained.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfGraphWitness {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl HalfGraphWitness {
    pub fn order(&self) -> usize {
        self.a.len()
    }

    /// Row `i` lists the adjacency of `a_i` to `b_1..b_n` as `'1'`/`'0'`.
    pub fn pattern_matrix(&self, g: &Graph) -> Vec<String> {
        self.a
            .iter()
            .map(|&x| {
                self.b
                    .iter()
                    .map(|&y| if g.has_edge(x, y) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

/// A set `S` shattered by open neighborhoods: `realizers[T]` is a vertex
/// whose neighborhood meets `S` exactly in `{ set[i] : bit i of T is set }`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShatterWitness {
    pub set: Vec<usize>,
    pub realizers: Vec<usize>,
}

impl ShatterWitness {
    /// Row `T` lists membership of `set[0], set[1], ...` in `N(realizers[T])`.
    pub fn pattern_matrix(&self, g: &Graph) -> Vec<String> {
        self.realizers
            .iter()
            .map(|&v| {
                self.set
                    .iter()
                    .map(|&s| if g.has_edge(v, s) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}
