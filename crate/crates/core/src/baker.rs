//! BFS layering, the shifting strategy for independent sets, and an exact
//! branch-and-bound independent set solver used per piece and as an oracle.

use std::collections::VecDeque;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::decomposition::Decomposition;
use crate::graph::ops::induced_on_sorted;
use crate::graph::Graph;
use crate::{Error, Result};

/// Default largest connected component [`exact_mis`] will solve.
pub const DEFAULT_MIS_LIMIT: usize = 64;

/// BFS layers `L_1, L_2, ...`; index `k` of `layers` holds `L_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layering {
    pub root: usize,
    pub layers: Vec<Vec<usize>>,
}

impl Layering {
    /// `layer_of[v]` is the 1-based layer index of `v`.
    pub fn layer_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (k, layer) in self.layers.iter().enumerate() {
            for &v in layer {
                out[v] = k + 1;
            }
        }
        out
    }

    /// Every vertex appears in exactly one layer and every edge stays
    /// within a layer or joins consecutive ones.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        for &v in self.layers.iter().flatten() {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if seen.contains(&false) {
            return false;
        }
        let layer_of = self.layer_of(n);
        g.edges().all(|(u, v)| layer_of[u].abs_diff(layer_of[v]) <= 1)
    }
}

/// Layers by BFS distance from `root`. Vertices it cannot reach are
/// layered by restarting from the lowest unvisited vertex, with layer
/// indices continuing after the previous component's last layer.
pub fn bfs_layers(g: &Graph, root: usize) -> Result<Layering> {
    let n = g.vertex_count();
    if root >= n {
        return Err(Error::input(format!("root {root} out of range 0..{n}")));
    }
    let mut dist = vec![usize::MAX; n];
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut start = Some(root);
    while let Some(s) = start {
        let offset = layers.len();
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let k = offset + dist[u];
            if layers.len() <= k {
                layers.push(Vec::new());
            }
            layers[k].push(u);
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        start = (0..n).find(|&v| dist[v] == usize::MAX);
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }
    let l = Layering { root, layers };
    debug_assert!(l.is_valid_for(g));
    Ok(l)
}

/// Groups layer `L_i` into the class of `i mod D`. Empty classes are
/// dropped; the remaining parts keep residue order.
pub fn layers_to_decomposition(
    graph: Arc<Graph>,
    l: &Layering,
    d: usize,
    p: usize,
) -> Result<Decomposition> {
    if d < 2 {
        return Err(Error::input("layer grouping needs D >= 2"));
    }
    let labels: Vec<usize> = l
        .layer_of(graph.vertex_count())
        .into_iter()
        .map(|i| i % d)
        .collect();
    Decomposition::from_labels(graph, &labels, p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum MisMode {
    Exact,
    Baker { d: usize, shift: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MisResult {
    /// Sorted vertex indices.
    pub set: Vec<usize>,
    #[serde(flatten)]
    pub mode: MisMode,
}

impl MisResult {
    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }
}

/// `⌈(1 − 1/D) · opt⌉`, the size the best shift is guaranteed to reach.
pub fn baker_guarantee(opt: usize, d: usize) -> usize {
    ((d - 1) * opt).div_ceil(d)
}

/// A maximum independent set, solved per connected component.
pub fn exact_mis(g: &Graph, limit: usize) -> Result<MisResult> {
    let limit = limit.min(64);
    let mut set = Vec::new();
    for comp in g.components() {
        if comp.len() > limit {
            return Err(Error::SizeLimit {
                what: "independent set component",
                size: comp.len(),
                limit,
            });
        }
        set.extend(component_mis(g, &comp));
    }
    set.sort_unstable();
    Ok(MisResult {
        set,
        mode: MisMode::Exact,
    })
}

fn component_mis(g: &Graph, comp: &[usize]) -> Vec<usize> {
    let (sub, map) = induced_on_sorted(g, comp);
    let adj = sub.adjacency_masks().expect("component within 64 vertices");
    let mut solver = MisSolver {
        adj,
        best: 0,
        best_size: 0,
    };
    let all = if comp.len() == 64 {
        u64::MAX
    } else {
        (1u64 << comp.len()) - 1
    };
    solver.search(all, 0);
    bits(solver.best).map(|i| map[i]).collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

struct MisSolver {
    adj: Vec<u64>,
    best: u64,
    best_size: u32,
}

impl MisSolver {
    fn search(&mut self, mut live: u64, mut chosen: u64) {
        // Reductions: a vertex of degree <= 1 belongs to some maximum set;
        // a vertex whose closed neighborhood contains a neighbor's closed
        // neighborhood can be dropped.
        loop {
            let mut changed = false;
            for v in bits(live) {
                if live >> v & 1 == 0 {
                    continue;
                }
                let nv = self.adj[v] & live;
                if nv.count_ones() <= 1 {
                    chosen |= 1 << v;
                    live &= !(nv | 1 << v);
                    changed = true;
                    continue;
                }
                let closed_v = nv | 1 << v;
                if bits(nv).any(|u| {
                    let closed_u = (self.adj[u] & live) | 1 << u;
                    closed_u & !closed_v == 0
                }) {
                    live &= !(1 << v);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let size = chosen.count_ones();
        if live == 0 {
            if size > self.best_size {
                self.best = chosen;
                self.best_size = size;
            }
            return;
        }
        if size + self.colour_bound(live) <= self.best_size {
            return;
        }
        let v = bits(live)
            .max_by_key(|&v| ((self.adj[v] & live).count_ones(), std::cmp::Reverse(v)))
            .expect("live is nonempty");
        self.search(live & !(self.adj[v] | 1 << v), chosen | 1 << v);
        self.search(live & !(1 << v), chosen);
    }

    /// Greedy clique cover size of `live`: an independent set takes at most
    /// one vertex per clique.
    fn colour_bound(&self, mut live: u64) -> u32 {
        let mut cliques = 0;
        while live != 0 {
            let v = live.trailing_zeros() as usize;
            let mut clique = 1u64 << v;
            let mut cand = self.adj[v] & live;
            while cand != 0 {
                let u = cand.trailing_zeros() as usize;
                clique |= 1 << u;
                cand &= self.adj[u];
            }
            live &= !clique;
            cliques += 1;
        }
        cliques
    }
}

/// Vertices surviving shift `s`: those in layers `L_i` with `i mod D != s`.
pub fn shift_survivors(l: &Layering, n: usize, d: usize, shift: usize) -> Vec<usize> {
    l.layer_of(n)
        .into_iter()
        .enumerate()
        .filter(|&(_, i)| i % d != shift)
        .map(|(v, _)| v)
        .collect()
}

/// Connected pieces left after deleting the layers of shift `s`, as sorted
/// vertex lists of `g`.
pub fn shift_pieces(g: &Graph, l: &Layering, d: usize, shift: usize) -> Vec<Vec<usize>> {
    let keep = shift_survivors(l, g.vertex_count(), d, shift);
    let (sub, map) = induced_on_sorted(g, &keep);
    sub.components()
        .into_iter()
        .map(|c| c.into_iter().map(|i| map[i]).collect())
        .collect()
}

/// Shifting strategy: for each `s` in `0..D` delete the layers `L_i` with
/// `i ≡ s (mod D)`, solve the rest exactly, and keep the largest result
/// (smallest `s` on ties).
pub fn baker_mis(g: &Graph, root: usize, d: usize, limit: usize) -> Result<MisResult> {
    if d < 2 {
        return Err(Error::input("shifting needs D >= 2"));
    }
    let layering = bfs_layers(g, root)?;
    let mut best: Option<MisResult> = None;
    for shift in 0..d {
        let keep = shift_survivors(&layering, g.vertex_count(), d, shift);
        let (sub, map) = induced_on_sorted(g, &keep);
        let solved = exact_mis(&sub, limit).map_err(|e| match e {
            Error::SizeLimit { size, limit, .. } => Error::ShiftPiece { shift, size, limit },
            other => other,
        })?;
        if best.as_ref().is_some_and(|b| b.len() >= solved.len()) {
            continue;
        }
        let mut set: Vec<usize> = solved.set.iter().map(|&i| map[i]).collect();
        set.sort_unstable();
        best = Some(MisResult {
            set,
            mode: MisMode::Baker { d, shift },
        });
    }
    Ok(best.expect("D >= 2 shifts"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::witness::validate_independent_set;

    fn family(f: FamilySpec) -> Graph {
        generate(&f).unwrap()
    }

    fn grid(rows: usize, cols: usize) -> Graph {
        family(FamilySpec::Grid { rows, cols })
    }

    fn path(n: usize) -> Graph {
        family(FamilySpec::Path { n })
    }

    fn mis(g: &Graph) -> usize {
        let r = exact_mis(g, DEFAULT_MIS_LIMIT).unwrap();
        validate_independent_set(g, &r.set).unwrap();
        r.len()
    }

    #[test]
    fn layering_examples() {
        let l = bfs_layers(&grid(2, 3), 0).unwrap();
        assert_eq!(l.layers, vec![vec![0], vec![1, 3], vec![2, 4], vec![5]]);
        let k4 = family(FamilySpec::Complete { n: 4 });
        assert_eq!(bfs_layers(&k4, 2).unwrap().layers, vec![vec![2], vec![0, 1, 3]]);
        let l = bfs_layers(&path(4), 0).unwrap();
        assert_eq!(l.layers, vec![vec![0], vec![1], vec![2], vec![3]]);
        assert!(bfs_layers(&path(4), 4).is_err());
    }

    #[test]
    fn layering_restarts_on_disconnected_input() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        let l = bfs_layers(&g, 3).unwrap();
        assert_eq!(l.layers, vec![vec![3], vec![4], vec![0], vec![1], vec![2]]);
        assert!(l.is_valid_for(&g));
    }

    #[test]
    fn grouping_examples() {
        let p6 = Arc::new(path(6));
        let l = bfs_layers(&p6, 0).unwrap();
        let d = layers_to_decomposition(p6, &l, 2, 1).unwrap();
        assert_eq!(d.parts(), &[vec![1, 3, 5], vec![0, 2, 4]]);

        let g = Arc::new(grid(3, 3));
        let l = bfs_layers(&g, 0).unwrap();
        let d = layers_to_decomposition(g.clone(), &l, 3, 2).unwrap();
        // Anti-diagonals r + c = 0..4 are layers 1..5; residues 0, 1, 2.
        assert_eq!(
            d.parts(),
            &[vec![2, 4, 6], vec![0, 5, 7], vec![1, 3, 8]]
        );

        let d = layers_to_decomposition(g.clone(), &l, 9, 2).unwrap();
        assert_eq!(d.part_count(), 5);
        assert!(layers_to_decomposition(g, &l, 1, 2).is_err());
    }

    #[test]
    fn exact_examples() {
        assert_eq!(mis(&family(FamilySpec::Cycle { n: 5 })), 2);
        assert_eq!(mis(&family(FamilySpec::Complete { n: 4 })), 1);
        assert_eq!(mis(&grid(3, 3)), 5);
        assert_eq!(mis(&grid(4, 4)), 8);
        assert_eq!(mis(&grid(5, 5)), 13);
        assert_eq!(mis(&Graph::empty(3)), 3);
        assert_eq!(mis(&Graph::empty(0)), 0);
    }

    #[test]
    fn exact_respects_limit() {
        assert!(matches!(
            exact_mis(&path(10), 9),
            Err(Error::SizeLimit { size: 10, .. })
        ));
        assert_eq!(exact_mis(&Graph::empty(10), 1).unwrap().len(), 10);
    }

    #[test]
    fn baker_examples() {
        let p7 = path(7);
        let r = baker_mis(&p7, 0, 2, DEFAULT_MIS_LIMIT).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r.mode, MisMode::Baker { d: 2, shift: 0 });
        assert_eq!(r.set, vec![0, 2, 4, 6]);

        let g = grid(4, 4);
        let r = baker_mis(&g, 0, 4, DEFAULT_MIS_LIMIT).unwrap();
        validate_independent_set(&g, &r.set).unwrap();
        assert!(r.len() >= baker_guarantee(8, 4));

        let k5 = family(FamilySpec::Complete { n: 5 });
        assert_eq!(baker_mis(&k5, 3, 2, DEFAULT_MIS_LIMIT).unwrap().len(), 1);
    }

    #[test]
    fn baker_reports_shift_on_limit() {
        let err = baker_mis(&path(12), 0, 2, 0).unwrap_err();
        assert!(matches!(err, Error::ShiftPiece { shift: 0, .. }));
    }

    #[test]
    fn guarantee_arithmetic() {
        assert_eq!(baker_guarantee(8, 4), 6);
        assert_eq!(baker_guarantee(5, 2), 3);
        assert_eq!(baker_guarantee(0, 3), 0);
    }

    #[test]
    fn pieces_span_fewer_than_d_layers() {
        let g = grid(5, 5);
        let l = bfs_layers(&g, 0).unwrap();
        let layer_of = l.layer_of(25);
        for shift in 0..3 {
            for piece in shift_pieces(&g, &l, 3, shift) {
                let lo = piece.iter().map(|&v| layer_of[v]).min().unwrap();
                let hi = piece.iter().map(|&v| layer_of[v]).max().unwrap();
                assert!(hi - lo < 3 - 1);
            }
        }
    }
}
