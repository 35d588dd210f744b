//! Greedy colorings of graph powers, read as decompositions.

use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::decomposition::Decomposition;
use crate::graph::ops::power_graph;
use crate::graph::Graph;
use crate::Result;

#[derive(Clone, Debug)]
pub struct PowerColoring {
    pub decomposition: Decomposition,
    pub bounds: PowerColoringBounds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerColoringBounds {
    pub max_degree: usize,
    pub p: usize,
    pub colors: usize,
    /// `d^p + 1`.
    #[serde(with = "crate::decimal")]
    pub degree_power_bound: BigUint,
    /// `1 + Δ(G^p)`, what smallest-last greedy coloring always achieves.
    pub greedy_bound: usize,
    /// `1 + d + ... + d^{p-1}`: no union of `p` color classes has a larger
    /// connected component.
    #[serde(with = "crate::decimal")]
    pub component_bound: BigUint,
}

impl PowerColoringBounds {
    /// Whether the measured count also respects `d^p + 1`; may be false
    /// only when `Δ(G^p) > d^p`.
    pub fn within_degree_power_bound(&self) -> bool {
        BigUint::from(self.colors) <= self.degree_power_bound
    }
}

/// `1 + d + ... + d^{p-1}`.
pub fn component_bound(d: usize, p: usize) -> BigUint {
    let d = BigUint::from(d);
    let mut term = BigUint::from(1u32);
    let mut sum = BigUint::from(0u32);
    for _ in 0..p {
        sum += &term;
        term *= &d;
    }
    sum
}

/// Properly colors `G^p` greedily in smallest-last order with the lowest
/// free color, and returns the color classes as a decomposition with
/// parameter `p`. Any `p + 1` vertices of a path in `G` are pairwise within
/// distance `p`, so a union of `p` classes contains no such path.
pub fn decompose_power_coloring(g: Arc<Graph>, p: usize) -> Result<PowerColoring> {
    let power = power_graph(&g, p)?;
    let colors = smallest_last_coloring(&power);
    let count = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
    let d = g.max_degree();
    let bounds = PowerColoringBounds {
        max_degree: d,
        p,
        colors: count,
        degree_power_bound: BigUint::from(d).pow(p as u32) + 1u32,
        greedy_bound: power.max_degree() + 1,
        component_bound: component_bound(d, p),
    };
    assert!(count <= bounds.greedy_bound || g.vertex_count() == 0);
    let decomposition = Decomposition::from_labels(g, &colors, p)?;
    Ok(PowerColoring {
        decomposition,
        bounds,
    })
}

/// Removes a minimum-degree vertex (lowest index on ties) until the graph
/// is empty, then colors in reverse removal order.
pub fn smallest_last_coloring(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| degree[v])
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    let mut color = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let mut used: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| color[w])
            .filter(|&c| c != usize::MAX)
            .collect();
        used.sort_unstable();
        used.dedup();
        color[v] = used
            .iter()
            .enumerate()
            .find(|&(i, &c)| i != c)
            .map_or(used.len(), |(i, _)| i);
    }
    color
}
