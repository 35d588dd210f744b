//! Exact treedepth by memoized elimination over connected vertex sets, and
//! a greedy elimination upper bound for graphs beyond the exact limit.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::{Error, Result};

/// Default largest connected component handled exactly.
pub const DEFAULT_TREEDEPTH_LIMIT: usize = 16;

/// A rooted forest on the vertices of a graph, given by parent pointers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreedepthForest {
    pub parent: Vec<Option<usize>>,
}

impl TreedepthForest {
    pub fn roots(&self) -> Vec<usize> {
        (0..self.parent.len())
            .filter(|&v| self.parent[v].is_none())
            .collect()
    }

    /// Number of vertices on the longest root-to-leaf path; 0 when empty.
    /// A parent cycle (not a forest) reports `len + 1`.
    pub fn depth(&self) -> usize {
        let n = self.parent.len();
        let mut best = 0;
        for v in 0..n {
            let mut count = 0;
            let mut cur = Some(v);
            while let Some(c) = cur {
                count += 1;
                if count > n {
                    return n + 1;
                }
                cur = self.parent[c];
            }
            best = best.max(count);
        }
        best
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Treedepth {
    pub value: usize,
    pub forest: TreedepthForest,
    /// `false` when the value is only an upper bound from greedy elimination.
    pub exact: bool,
}

/// Exact treedepth. Fails with [`Error::SizeLimit`] when some connected
/// component has more than `limit` vertices (`limit` is capped at 64).
pub fn compute_treedepth(g: &Graph, limit: usize) -> Result<Treedepth> {
    let limit = limit.min(64);
    let comps = g.components();
    if let Some(big) = comps.iter().map(Vec::len).max() {
        if big > limit {
            return Err(Error::SizeLimit {
                what: "exact treedepth (largest component)",
                size: big,
                limit,
            });
        }
    }
    let mut parent = vec![None; g.vertex_count()];
    let mut value = 0;
    for comp in comps {
        let mut solver = ComponentSolver::new(g, &comp);
        let full = solver.full_mask();
        value = value.max(solver.depth(full) as usize);
        solver.build(full, None, &mut parent);
    }
    Ok(Treedepth {
        value,
        forest: TreedepthForest { parent },
        exact: true,
    })
}

/// Exact when every component fits under `limit`, otherwise the greedy
/// upper bound.
pub fn treedepth_or_bound(g: &Graph, limit: usize) -> Treedepth {
    compute_treedepth(g, limit).unwrap_or_else(|_| treedepth_upper_bound(g))
}

/// Greedy elimination: in each component remove the vertex whose deletion
/// leaves the smallest largest piece (ties: higher degree, then lower index)
/// and recurse on the pieces.
pub fn treedepth_upper_bound(g: &Graph) -> Treedepth {
    let n = g.vertex_count();
    let mut parent = vec![None; n];
    let mut alive = vec![true; n];
    let mut stack: Vec<(Vec<usize>, Option<usize>)> = g
        .components()
        .into_iter()
        .map(|c| (c, None))
        .collect();
    while let Some((comp, above)) = stack.pop() {
        let root = comp
            .iter()
            .copied()
            .min_by_key(|&v| {
                alive[v] = false;
                let largest = split_alive(g, &comp, &alive)
                    .iter()
                    .map(Vec::len)
                    .max()
                    .unwrap_or(0);
                alive[v] = true;
                let degree = g.neighbors(v).iter().filter(|&&w| alive[w]).count();
                (largest, std::cmp::Reverse(degree), v)
            })
            .expect("components are nonempty");
        parent[root] = above;
        alive[root] = false;
        for sub in split_alive(g, &comp, &alive) {
            stack.push((sub, Some(root)));
        }
    }
    let forest = TreedepthForest { parent };
    Treedepth {
        value: forest.depth(),
        forest,
        exact: false,
    }
}

fn split_alive(g: &Graph, vertices: &[usize], alive: &[bool]) -> Vec<Vec<usize>> {
    let mut seen: HashMap<usize, bool> = vertices
        .iter()
        .filter(|&&v| alive[v])
        .map(|&v| (v, false))
        .collect();
    let mut out = Vec::new();
    for &s in vertices {
        if seen.get(&s) != Some(&false) {
            continue;
        }
        seen.insert(s, true);
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if seen.get(&w) == Some(&false) {
                    seen.insert(w, true);
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Memoized recursion `td(C) = 1 + min_v max td(components of C - v)` on a
/// single connected component, reindexed to at most 64 local vertices.
struct ComponentSolver<'a> {
    vertices: &'a [usize],
    adj: Vec<u64>,
    memo: HashMap<u64, (u8, u8)>,
}

impl<'a> ComponentSolver<'a> {
    fn new(g: &Graph, vertices: &'a [usize]) -> Self {
        let local: HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = vertices
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter_map(|w| local.get(w))
                    .fold(0u64, |m, &i| m | (1u64 << i))
            })
            .collect();
        ComponentSolver {
            vertices,
            adj,
            memo: HashMap::new(),
        }
    }

    fn full_mask(&self) -> u64 {
        if self.vertices.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertices.len()) - 1
        }
    }

    fn components(&self, mut mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while mask != 0 {
            let mut comp = mask & mask.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & mask & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            mask &= !comp;
            out.push(comp);
        }
        out
    }

    /// Treedepth of the connected set `mask`.
    fn depth(&mut self, mask: u64) -> u8 {
        let size = mask.count_ones() as u8;
        if size == 1 {
            return 1;
        }
        if let Some(&(d, _)) = self.memo.get(&mask) {
            return d;
        }
        // A clique on `size` vertices is its own answer.
        let is_clique = iter_bits(mask).all(|v| (self.adj[v] & mask).count_ones() as u8 == size - 1);
        if is_clique {
            let v = mask.trailing_zeros() as u8;
            self.memo.insert(mask, (size, v));
            return size;
        }
        let mut order: Vec<usize> = iter_bits(mask).collect();
        order.sort_by_key(|&v| std::cmp::Reverse((self.adj[v] & mask).count_ones()));
        let mut best = size;
        let mut best_v = order[0] as u8;
        for v in order {
            let rest = mask & !(1u64 << v);
            let mut worst = 0u8;
            for comp in self.components(rest) {
                // Any sub-result this large cannot improve on `best`.
                if comp.count_ones() as u8 <= worst {
                    continue;
                }
                worst = worst.max(self.depth(comp));
                if worst + 1 >= best {
                    break;
                }
            }
            if worst + 1 < best {
                best = worst + 1;
                best_v = v as u8;
            }
        }
        self.memo.insert(mask, (best, best_v));
        best
    }

    fn build(&mut self, mask: u64, above: Option<usize>, parent: &mut [Option<usize>]) {
        let v = if mask.count_ones() == 1 {
            mask.trailing_zeros() as usize
        } else {
            self.depth(mask);
            self.memo[&mask].1 as usize
        };
        let global = self.vertices[v];
        parent[global] = above;
        for comp in self.components(mask & !(1u64 << v)) {
            self.build(comp, Some(global), parent);
        }
    }
}

fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::witness::validate_treedepth_forest;

    fn td(g: &Graph) -> usize {
        let t = compute_treedepth(g, DEFAULT_TREEDEPTH_LIMIT).unwrap();
        assert!(validate_treedepth_forest(g, &t.forest).is_ok());
        assert_eq!(t.forest.depth(), t.value);
        t.value
    }

    #[test]
    fn small_values() {
        assert_eq!(td(&Graph::empty(5)), 1);
        assert_eq!(td(&Graph::empty(0)), 0);
        assert_eq!(td(&generate(&FamilySpec::Path { n: 4 }).unwrap()), 3);
        assert_eq!(td(&generate(&FamilySpec::Complete { n: 3 }).unwrap()), 3);
        assert_eq!(td(&generate(&FamilySpec::Path { n: 3 }).unwrap()), 2);
        assert_eq!(td(&generate(&FamilySpec::Biclique { s: 2, t: 5 }).unwrap()), 3);
    }

    #[test]
    fn paths_are_logarithmic() {
        for k in 1..=4 {
            let n = (1usize << k) - 1;
            assert_eq!(td(&generate(&FamilySpec::Path { n }).unwrap()), k);
        }
    }

    #[test]
    fn limit_applies_per_component() {
        let p20 = generate(&FamilySpec::Path { n: 20 }).unwrap();
        assert!(matches!(
            compute_treedepth(&p20, 16),
            Err(Error::SizeLimit { size: 20, .. })
        ));
        let bound = treedepth_upper_bound(&p20);
        assert!(!bound.exact);
        assert!(validate_treedepth_forest(&p20, &bound.forest).is_ok());
        assert!(bound.value >= 5);
    }
}
