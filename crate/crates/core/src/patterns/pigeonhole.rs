use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::HalfGraphWitness;
use crate::decomposition::Decomposition;
use crate::graph::{generate, FamilySpec};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PigeonholeExtraction {
    /// `(part of a_i, part of b_i)` shared by the selected indices.
    pub parts: (usize, usize),
    pub witness: HalfGraphWitness,
    /// `ceil(m / N^2)`, the order the bucket count guarantees.
    pub guaranteed: usize,
}

/// Finds a large half-graph inside the union of at most two parts of a
/// decomposition of the generated half-graph of order `m`.
///
/// Each ladder index `i` falls into the bucket `(part(a_i), part(b_i))`.
/// With `N` parts there are at most `N^2` buckets, so the largest (first in
/// key order on ties) holds at least `ceil(m / N^2)` indices, and the rungs
/// it keeps still form a half-graph.
pub fn half_graph_pigeonhole(m: usize, d: &Decomposition) -> Result<PigeonholeExtraction> {
    let expected = generate(&FamilySpec::HalfGraph { n: m })?;
    if **d.graph() != expected {
        return Err(Error::input(format!(
            "decomposition is not over the half-graph of order {m}"
        )));
    }
    let mut buckets: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for i in 0..m {
        buckets
            .entry((d.part_of(i), d.part_of(m + i)))
            .or_default()
            .push(i);
    }
    let (&parts, indices) = buckets
        .iter()
        .rev()
        .max_by_key(|(_, v)| v.len())
        .expect("m >= 1");
    let witness = HalfGraphWitness {
        a: indices.clone(),
        b: indices.iter().map(|&i| m + i).collect(),
    };
    let nn = d.part_count() * d.part_count();
    Ok(PigeonholeExtraction {
        parts,
        witness,
        guaranteed: m.div_ceil(nn),
    })
}
