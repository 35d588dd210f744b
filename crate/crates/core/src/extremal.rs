//! Kővári–Sós–Turán arithmetic, a brute-force Zarankiewicz oracle and the
//! densest part-pair extraction.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::decomposition::Decomposition;
use crate::graph::Graph;
use crate::subsets::Colex;
use crate::{Error, Result};

/// Fractional bits kept when rounding `s`-th roots upwards.
const ROOT_PRECISION_BITS: u32 = 64;

/// Largest vertex count accepted by [`zarankiewicz_brute`].
pub const ZARANKIEWICZ_LIMIT: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KstQuery {
    pub n: u64,
    pub s: u32,
    pub t: u32,
}

impl KstQuery {
    pub fn new(n: u64, s: u32, t: u32) -> Result<Self> {
        if s < 2 || t < s {
            return Err(Error::input(format!(
                "KST parameters need t >= s >= 2, got s={s}, t={t}"
            )));
        }
        if n == 0 {
            return Err(Error::input("KST bound needs n >= 1"));
        }
        Ok(KstQuery { n, s, t })
    }
}

/// Upper bound `½ (t−1)^{1/s} n^{2−1/s} + ½ (s−1) n` on the edge count of a
/// `K_{s,t}`-free graph on `n` vertices.
///
/// The irrational term is `((t−1) n^{2s−1})^{1/s}`; it is evaluated as
/// `⌈(X · 2^{Ks})^{1/s}⌉ / 2^K`, which is never below the real value and is
/// exact when `X` is a perfect `s`-th power.
pub fn kst_bound(q: KstQuery) -> BigRational {
    let KstQuery { n, s, t } = q;
    let n_big = BigInt::from(n);
    let x = BigInt::from(t - 1) * n_big.pow(2 * s - 1);
    let shift = ROOT_PRECISION_BITS as usize;
    let scaled = &x << (shift * s as usize);
    let mut root = scaled.nth_root(s);
    if root.pow(s) < scaled {
        root += 1;
    }
    let root_term = BigRational::new(root, BigInt::one() << shift);
    let linear = BigRational::from_integer(BigInt::from(s - 1) * n_big);
    (root_term + linear) / BigRational::from_integer(BigInt::from(2))
}

/// Lossy view of a rational for reports.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::INFINITY)
}

/// Maximum edge count of a graph on `n <= 7` vertices with no `K_{s,t}`
/// subgraph, by include/exclude search over the edges with an
/// edges-remaining cutoff.
pub fn zarankiewicz_brute(n: usize, s: usize, t: usize) -> Result<usize> {
    if n > ZARANKIEWICZ_LIMIT {
        return Err(Error::SizeLimit {
            what: "Zarankiewicz brute force",
            size: n,
            limit: ZARANKIEWICZ_LIMIT,
        });
    }
    if s == 0 || t == 0 {
        return Err(Error::input("biclique sides must be positive"));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut search = Zarankiewicz {
        n,
        s,
        t,
        pairs,
        adj: vec![0; n],
        best: 0,
    };
    search.run(0, 0);
    Ok(search.best)
}

struct Zarankiewicz {
    n: usize,
    s: usize,
    t: usize,
    pairs: Vec<(usize, usize)>,
    adj: Vec<u8>,
    best: usize,
}

impl Zarankiewicz {
    fn run(&mut self, next: usize, edges: usize) {
        self.best = self.best.max(edges);
        if next == self.pairs.len() || edges + self.pairs.len() - next <= self.best {
            return;
        }
        let (u, v) = self.pairs[next];
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        if !self.has_biclique() {
            self.run(next + 1, edges + 1);
        }
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        self.run(next + 1, edges);
    }

    fn has_biclique(&self) -> bool {
        Colex::new(self.n, self.s).any(|side| {
            let common = side.iter().fold(u8::MAX, |m, &a| m & self.adj[a]);
            common.count_ones() as usize >= self.t
        })
    }
}

/// The pair of parts `(i, j)`, `i <= j`, whose union induces the most
/// edges, with that edge count. Ties go to the lexicographically smallest
/// pair.
pub fn densest_part_pair(g: &Graph, d: &Decomposition) -> Result<(usize, usize, usize)> {
    if d.graph().as_ref() != g {
        return Err(Error::input("decomposition is over a different graph"));
    }
    let parts = d.part_count();
    if parts == 0 {
        return Ok((0, 0, 0));
    }
    let mut between: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, v) in g.edges() {
        let (a, b) = (d.part_of(u), d.part_of(v));
        *between.entry((a.min(b), a.max(b))).or_default() += 1;
    }
    let count = |i: usize, j: usize| between.get(&(i, j)).copied().unwrap_or(0);
    let mut best = (0, 0, count(0, 0));
    for i in 0..parts {
        for j in i..parts {
            let c = if i == j {
                count(i, i)
            } else {
                count(i, i) + count(j, j) + count(i, j)
            };
            if c > best.2 {
                best = (i, j, c);
            }
        }
    }
    Ok(best)
}
