use serde::{Deserialize, Serialize};

use super::ShatterWitness;
use crate::bits::Bits;
use crate::graph::Graph;
use crate::subsets::Colex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VcDimension {
    pub dim: usize,
    pub witness: ShatterWitness,
    /// `false` when the search stopped at `exact_limit` with a shattered set
    /// of that size and a larger one was not ruled out.
    pub exact: bool,
}

/// VC dimension of the open-neighborhood set system `{N(v)}`, searched
/// exhaustively over vertex sets of size at most `exact_limit`.
///
/// Shattered sets are closed under taking subsets, so sizes are tried in
/// increasing order and the search stops at the first size with no
/// shattered set. A set of size `k` needs `2^k` distinct traces, hence
/// `2^k <= n` bounds the useful sizes.
pub fn vc_dimension(g: &Graph, exact_limit: usize) -> VcDimension {
    let n = g.vertex_count();
    if n == 0 {
        return VcDimension {
            dim: 0,
            witness: ShatterWitness::default(),
            exact: true,
        };
    }
    let rows: Vec<Bits> = (0..n)
        .map(|v| Bits::from_iter(n, g.neighbors(v).iter().copied()))
        .collect();
    let mut best = ShatterWitness {
        set: vec![],
        realizers: vec![0],
    };
    let max_k = usize::BITS as usize - 1 - n.leading_zeros() as usize; // floor(log2 n)
    let mut k = 1;
    while k <= exact_limit.min(max_k) {
        match Colex::new(n, k).find_map(|s| shatter(&rows, n, &s)) {
            Some(w) => best = w,
            None => break,
        }
        k += 1;
    }
    let dim = best.set.len();
    let exact = dim < exact_limit || dim == max_k;
    VcDimension {
        dim,
        witness: best,
        exact,
    }
}

fn shatter(rows: &[Bits], n: usize, set: &[usize]) -> Option<ShatterWitness> {
    let patterns = 1usize << set.len();
    let mut realizers = vec![usize::MAX; patterns];
    let mut missing = patterns;
    for v in 0..n {
        let trace = set
            .iter()
            .enumerate()
            .filter(|&(_, &s)| rows[s].contains(v))
            .fold(0usize, |t, (i, _)| t | (1 << i));
        if realizers[trace] == usize::MAX {
            realizers[trace] = v;
            missing -= 1;
            if missing == 0 {
                return Some(ShatterWitness {
                    set: set.to_vec(),
                    realizers,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::witness::validate_shatter;

    fn vc(g: &Graph) -> usize {
        let r = vc_dimension(g, 8);
        validate_shatter(g, &r.witness).unwrap();
        assert!(r.exact);
        r.dim
    }

    #[test]
    fn examples() {
        assert_eq!(vc(&Graph::empty(4)), 0);
        assert_eq!(vc(&generate(&FamilySpec::Biclique { s: 1, t: 3 }).unwrap()), 1);
        assert_eq!(vc(&generate(&FamilySpec::Cycle { n: 4 }).unwrap()), 1);
        assert_eq!(vc(&Graph::empty(0)), 0);
    }

    #[test]
    fn larger_dimension() {
        // Bipartite incidence of all subsets of {0,1}: elements 0,1 and one
        // vertex per subset -> dimension 2.
        let g = Graph::from_edges(6, [(0, 3), (1, 4), (0, 5), (1, 5)]).unwrap();
        // vertex 2 realizes the empty trace.
        assert_eq!(vc(&g), 2);
    }

    #[test]
    fn limit_caps_search() {
        let g = Graph::from_edges(6, [(0, 3), (1, 4), (0, 5), (1, 5)]).unwrap();
        let r = vc_dimension(&g, 1);
        assert_eq!(r.dim, 1);
        assert!(!r.exact);
    }
}
