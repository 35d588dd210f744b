use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::{Error, Result};

/// Upper limit on pairing-model restarts for random regular graphs.
const REGULAR_ATTEMPTS: usize = 100_000;

/// A named graph family with its parameters.
///
/// Randomized families draw from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded
/// with `seed_from_u64(seed)`, so a spec always produces the same graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `K_n`.
    Complete { n: usize },
    /// `K_{s,t}`: vertices `0..s` on one side, `s..s+t` on the other.
    Biclique { s: usize, t: usize },
    /// Half-graph of order `n`: `a_i = i - 1`, `b_j = n + j - 1`, and
    /// `a_i b_j` is an edge iff `i <= j`.
    HalfGraph { n: usize },
    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    Path { n: usize },
    /// Cycle on `n >= 3` vertices.
    Cycle { n: usize },
    /// `rows x cols` grid, vertex `r * cols + c`.
    Grid { rows: usize, cols: usize },
    /// Uniform-ish `d`-regular graph from the pairing model with restarts.
    RandomRegular { n: usize, d: usize, seed: u64 },
    /// Erdős–Rényi `G(n, p)`.
    Gnp { n: usize, p: f64, seed: u64 },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let bad = |m: String| Err(Error::input(m));
        match *self {
            Complete { n } | Path { n } | HalfGraph { n } if n == 0 => {
                bad(format!("{self:?}: n must be at least 1"))
            }
            Biclique { s, t } if s == 0 || t == 0 => bad("biclique sides must be at least 1".into()),
            Cycle { n } if n < 3 => bad(format!("cycle needs at least 3 vertices, got {n}")),
            Grid { rows, cols } if rows == 0 || cols == 0 => {
                bad("grid rows and cols must be at least 1".into())
            }
            RandomRegular { n, d, .. } if d >= n.max(1) || (n * d) % 2 == 1 => bad(format!(
                "no simple {d}-regular graph on {n} vertices (need d < n and n*d even)"
            )),
            Gnp { p, .. } if !(0.0..=1.0).contains(&p) => {
                bad(format!("edge probability {p} outside [0, 1]"))
            }
            _ => Ok(()),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Complete { n } => {
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, edges)?
        }
        FamilySpec::Biclique { s, t } => {
            let edges = (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v)));
            Graph::from_edges(s + t, edges)?
        }
        FamilySpec::HalfGraph { n } => {
            let edges = (0..n).flat_map(|i| (i..n).map(move |j| (i, n + j)));
            Graph::from_edges(2 * n, edges)?
        }
        FamilySpec::Path { n } => Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?,
        FamilySpec::Cycle { n } => Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))?,
        FamilySpec::Grid { rows, cols } => {
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    let v = r * cols + c;
                    if c + 1 < cols {
                        edges.push((v, v + 1));
                    }
                    if r + 1 < rows {
                        edges.push((v, v + cols));
                    }
                }
            }
            Graph::from_edges(rows * cols, edges)?
        }
        FamilySpec::RandomRegular { n, d, seed } => random_regular(n, d, seed)?,
        FamilySpec::Gnp { n, p, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)?
        }
    };
    Ok(g)
}

/// Pairing model: `n * d` half-edges are shuffled and matched consecutively;
/// the draw restarts whenever a loop or a repeated edge appears.
fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
    'attempt: for _ in 0..REGULAR_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut adj = vec![Vec::with_capacity(d); n];
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u].contains(&v) {
                continue 'attempt;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        return Ok(Graph::from_raw_adjacency(adj));
    }
    Err(Error::input(format!(
        "pairing model found no simple {d}-regular graph on {n} vertices in {REGULAR_ATTEMPTS} attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_graph_two_is_a_path() {
        let g = generate(&FamilySpec::HalfGraph { n: 2 }).unwrap();
        // a1 = 0, a2 = 1, b1 = 2, b2 = 3
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn small_families() {
        let k3 = generate(&FamilySpec::Complete { n: 3 }).unwrap();
        assert_eq!(k3.edge_count(), 3);
        let b = generate(&FamilySpec::Biclique { s: 2, t: 3 }).unwrap();
        assert_eq!(b.edge_count(), 6);
        assert!(b.edges().all(|(u, v)| u < 2 && v >= 2));
        let grid = generate(&FamilySpec::Grid { rows: 2, cols: 3 }).unwrap();
        assert_eq!(grid.edge_count(), 7);
    }

    #[test]
    fn random_regular_is_regular_and_seeded() {
        let spec = FamilySpec::RandomRegular { n: 20, d: 3, seed: 7 };
        let g = generate(&spec).unwrap();
        assert!((0..20).all(|v| g.degree(v) == 3));
        assert_eq!(g, generate(&spec).unwrap());
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate(&FamilySpec::Grid { rows: 0, cols: 3 }).is_err());
        assert!(generate(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(generate(&FamilySpec::RandomRegular { n: 5, d: 3, seed: 0 }).is_err());
        assert!(generate(&FamilySpec::Gnp { n: 5, p: 1.5, seed: 0 }).is_err());
    }
}
