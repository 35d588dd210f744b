use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::{Error, Result};

/// Default bounds for the clique-subdivision search.
pub const DEFAULT_SUBDIVISION_BRANCH_LIMIT: usize = 5;
pub const DEFAULT_SUBDIVISION_VERTEX_LIMIT: usize = 64;

/// Branch vertices of a subdivided clique and, for each pair `(i, j)` with
/// `i < j` in lexicographic order, the full path from `branch[i]` to
/// `branch[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionWitness {
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

/// Searches for the `p`-th subdivision of `K_q` as a subgraph: `q` branch
/// vertices joined pairwise by internally disjoint paths with exactly `p`
/// internal vertices each.
pub fn contains_clique_subdivision(
    g: &Graph,
    p: usize,
    q: usize,
    branch_limit: usize,
    vertex_limit: usize,
) -> Result<Option<SubdivisionWitness>> {
    if q > branch_limit {
        return Err(Error::SizeLimit {
            what: "clique subdivision branch count",
            size: q,
            limit: branch_limit,
        });
    }
    if g.vertex_count() > vertex_limit {
        return Err(Error::SizeLimit {
            what: "clique subdivision host graph",
            size: g.vertex_count(),
            limit: vertex_limit,
        });
    }
    if q == 0 {
        return Ok(Some(SubdivisionWitness {
            branch: vec![],
            paths: vec![],
        }));
    }
    let needed = q + p * q * (q - 1) / 2;
    if needed > g.vertex_count() {
        return Ok(None);
    }
    let pairs: Vec<(usize, usize)> = (0..q)
        .flat_map(|i| (i + 1..q).map(move |j| (i, j)))
        .collect();
    let mut search = Search {
        g,
        p,
        q,
        pairs,
        used: vec![false; g.vertex_count()],
        branch: Vec::with_capacity(q),
        paths: Vec::new(),
    };
    Ok(search.choose_branch(0).then(|| SubdivisionWitness {
        branch: search.branch,
        paths: search.paths,
    }))
}

struct Search<'a> {
    g: &'a Graph,
    p: usize,
    q: usize,
    pairs: Vec<(usize, usize)>,
    used: Vec<bool>,
    branch: Vec<usize>,
    paths: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn choose_branch(&mut self, from: usize) -> bool {
        if self.branch.len() == self.q {
            return self.route(0);
        }
        for v in from..self.g.vertex_count() {
            if self.g.degree(v) + 1 < self.q {
                continue;
            }
            self.used[v] = true;
            self.branch.push(v);
            if self.choose_branch(v + 1) {
                return true;
            }
            self.branch.pop();
            self.used[v] = false;
        }
        false
    }

    /// Routes the pair paths in order, backtracking over alternatives.
    fn route(&mut self, k: usize) -> bool {
        if k == self.pairs.len() {
            return true;
        }
        let (i, j) = self.pairs[k];
        let (from, to) = (self.branch[i], self.branch[j]);
        let mut path = vec![from];
        self.walk(&mut path, to, k)
    }

    fn walk(&mut self, path: &mut Vec<usize>, to: usize, k: usize) -> bool {
        let last = *path.last().unwrap();
        let internal = path.len() - 1;
        if internal == self.p {
            if !self.g.has_edge(last, to) {
                return false;
            }
            path.push(to);
            self.paths.push(path.clone());
            if self.route(k + 1) {
                return true;
            }
            self.paths.pop();
            path.pop();
            return false;
        }
        for idx in 0..self.g.degree(last) {
            let w = self.g.neighbors(last)[idx];
            if self.used[w] {
                continue;
            }
            self.used[w] = true;
            path.push(w);
            if self.walk(path, to, k) {
                return true;
            }
            path.pop();
            self.used[w] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, subdivide, FamilySpec};
    use crate::witness::validate_clique_subdivision;

    fn find(g: &Graph, p: usize, q: usize) -> Option<SubdivisionWitness> {
        let w = contains_clique_subdivision(g, p, q, 5, 64).unwrap();
        if let Some(w) = &w {
            validate_clique_subdivision(g, w, p, q).unwrap();
        }
        w
    }

    #[test]
    fn examples() {
        let c6 = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
        assert!(find(&c6, 1, 3).is_some());
        let p5 = generate(&FamilySpec::Path { n: 5 }).unwrap();
        assert!(find(&p5, 1, 3).is_none());
        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        assert!(find(&subdivide(&k4, 2), 2, 4).is_some());
        assert!(find(&subdivide(&k4, 2), 1, 4).is_none());
        assert!(find(&k4, 0, 4).is_some());
        assert!(find(&k4, 0, 5).is_none());
    }

    #[test]
    fn limits() {
        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        assert!(contains_clique_subdivision(&k4, 0, 6, 5, 64).is_err());
        assert!(contains_clique_subdivision(&k4, 0, 3, 5, 3).is_err());
    }
}
