//! Vertex deletion to bounded degree.

use crate::graph::Graph;

/// Smallest set of at most `k_max` vertices whose removal leaves maximum
/// degree `<= d`, or `None` when every such set is larger than `k_max`.
///
/// Among minimum solutions the lexicographically smallest sorted set is
/// returned.
pub fn min_deletions_to_degree(g: &Graph, d: usize, k_max: usize) -> Option<Vec<usize>> {
    let mut search = Search::new(g, d);
    let k = (0..=k_max).find(|&k| search.feasible(k))?;

    // Fix the members one at a time, always taking the smallest vertex that
    // still admits a completion using only larger vertices.
    let n = g.vertex_count();
    let mut chosen = Vec::with_capacity(k);
    let mut next = 0;
    while chosen.len() < k {
        let v = (next..n)
            .find(|&v| {
                search.delete(v);
                for u in 0..=v {
                    search.allowed[u] = false;
                }
                let ok = search.feasible(k - chosen.len() - 1);
                if !ok {
                    search.restore(v);
                    for u in next..=v {
                        search.allowed[u] = true;
                    }
                }
                ok
            })
            .expect("a completion exists for a feasible budget");
        chosen.push(v);
        next = v + 1;
    }
    Some(chosen)
}

struct Search<'a> {
    g: &'a Graph,
    d: usize,
    deleted: Vec<bool>,
    allowed: Vec<bool>,
    degree: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, d: usize) -> Self {
        let n = g.vertex_count();
        Search {
            g,
            d,
            deleted: vec![false; n],
            allowed: vec![true; n],
            degree: (0..n).map(|v| g.degree(v)).collect(),
        }
    }

    fn delete(&mut self, v: usize) {
        debug_assert!(!self.deleted[v]);
        self.deleted[v] = true;
        for &w in self.g.neighbors(v) {
            self.degree[w] -= 1;
        }
    }

    fn restore(&mut self, v: usize) {
        self.deleted[v] = false;
        for &w in self.g.neighbors(v) {
            self.degree[w] += 1;
        }
    }

    fn live(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.deleted.len()).filter(move |&v| !self.deleted[v])
    }

    /// Can at most `budget` further allowed deletions reach max degree `<= d`?
    fn feasible(&mut self, budget: usize) -> bool {
        // Forced: a vertex of degree above d + budget keeps too many
        // neighbors even if the whole budget is spent around it.
        let forced = self.live().find(|&v| self.degree[v] > self.d + budget);
        if let Some(v) = forced {
            if !self.allowed[v] || budget == 0 {
                return false;
            }
            self.delete(v);
            let ok = self.feasible(budget - 1);
            self.restore(v);
            return ok;
        }
        let Some(v) = self.live().find(|&v| self.degree[v] > self.d) else {
            return true;
        };
        if budget == 0 {
            return false;
        }

        // Either v goes, or at least `need` of its deletable neighbors go;
        // any `movable - need + 1` of those neighbors then contain a deleted one.
        let need = self.degree[v] - self.d;
        let movable: Vec<usize> = self
            .g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !self.deleted[w] && self.allowed[w])
            .collect();
        let mut branch = Vec::new();
        if self.allowed[v] {
            branch.push(v);
        }
        if need <= movable.len() && need <= budget {
            branch.extend(&movable[..movable.len() - need + 1]);
        }
        for u in branch {
            self.delete(u);
            let ok = self.feasible(budget - 1);
            self.restore(u);
            if ok {
                return true;
            }
        }
        false
    }
}
